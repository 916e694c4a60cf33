#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsumlab/partition.hpp"

namespace subsumlab {

// The set of subset sums of a partition of n, stored as a bitset over
// [0, n]: bit a is set iff some sub-multiset of the parts sums to a.
// Always contains 0 and n, and is symmetric about n/2 (the complement of a
// sub-multiset sums to n - a).
class RepresentedSet {
public:
    explicit RepresentedSet(int n);

    int n() const { return n_; }
    bool contains(int a) const;
    // Number of representable values in [0, n].
    int count() const;
    // True iff every value in [0, n] is representable.
    bool full() const;
    // All representable values, ascending.
    std::vector<int> to_vector() const;
    // Canonical byte encoding: little-endian words with trailing all-zero
    // words trimmed.  Two sets over the same n are equal iff their keys are
    // equal, so the census may dedup on the key with plain equality.
    std::string key() const;
    // Raw membership words, bit i of word i/64 = membership of i; for
    // callers that sweep the whole table (e.g. tallying absent values).
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const RepresentedSet&) const = default;

private:
    friend RepresentedSet represent(const Partition& parts);
    friend bool represents(const Partition& parts, int a);
    friend std::optional<Partition> extract_subset(const Partition& parts, int a);

    void set_bit(int a);

    int n_;
    std::vector<std::uint64_t> words_;
};

// Sum of the parts; the n that the partition partitions.
int partition_sum(const Partition& parts);

// Full subset-sum table of the partition via the shift-or sweep
// (mask |= mask << part), one part at a time.
RepresentedSet represent(const Partition& parts);

// True iff some sub-multiset of parts sums to a.  Answers a single query
// with an incremental sweep that stops as soon as a becomes reachable;
// out-of-range a returns false without any table work.
bool represents(const Partition& parts, int a);

// A concrete sub-multiset of parts summing to a (non-decreasing, like any
// partition), or nullopt when a is not representable.  Deterministic: the
// sweep walks parts from largest to smallest and keeps a part whenever the
// remainder stays reachable, so equal inputs give identical witnesses.
std::optional<Partition> extract_subset(const Partition& parts, int a);

// True iff the partition represents every integer a with
// x*sqrt(n) <= a <= n - x*sqrt(n), i.e. every a in [ceil(x*sqrt(n)),
// floor(n - x*sqrt(n))].  Vacuously true when that interval holds no
// integer.  Requires x >= 0; the endpoints are computed exactly.
bool represents_full_range(const Partition& parts, double x);

}  // namespace subsumlab
