#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subsumlab/bigint.hpp"

namespace subsumlab {

// A partition is stored as its non-decreasing list of positive parts.
// The empty vector is the unique partition of 0.
using Partition = std::vector<int>;

// Which partitions of n are admitted:
//   cap == 0   every multiset of positive parts ("unrestricted")
//   cap == k   each part value may appear at most k times ("kreduced:<k>";
//              k = 1 is the distinct-parts class, spelled "distinct")
struct PartitionClass {
    int cap = 0;

    // Accepts "unrestricted", "distinct", or "kreduced:<k>" with k >= 1.
    // Throws std::invalid_argument on anything else.
    static PartitionClass parse(std::string_view text);

    // Canonical spelling: "unrestricted", "distinct", "kreduced:<k>" (k >= 2).
    std::string name() const;

    bool operator==(const PartitionClass&) const = default;
};

// Streams the partitions of n in a class, one at a time, in lexicographic
// order of the part vectors: for n = 4 that is
//   [1,1,1,1], [1,1,2], [1,3], [2,2], [4].
// Backtracking depth-first search; memory stays O(n) however many
// partitions exist, so callers can walk very large families and stop early.
class PartitionStream {
public:
    PartitionStream(int n, PartitionClass cls);

    // Writes the next partition into out and returns true, or returns false
    // once the family is exhausted.  out is only valid when true is returned.
    bool next(Partition& out);

private:
    bool multiplicity_ok(int value) const;
    void push_part(int value);
    int pop_part();

    int n_;
    int cap_;
    int remaining_;
    int candidate_ = 1;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> parts_;
    std::vector<int> runs_;  // runs_[i] = length of the equal-value run ending at i
};

// Exact number of partitions of n in the class, via the standard
// part-by-part counting recurrence with unbounded integers.
BigInt count_partitions(int n, PartitionClass cls);

// Counts for every m in [0, n_max] at once (one DP sweep), for callers that
// need a whole row, e.g. totals across a scan.
class CountTable {
public:
    CountTable(PartitionClass cls, int n_max);

    const BigInt& at(int n) const;
    int n_max() const { return static_cast<int>(counts_.size()) - 1; }
    const PartitionClass& cls() const { return cls_; }

private:
    PartitionClass cls_;
    std::vector<BigInt> counts_;
};

// Leading-order exponent of the count: pi*sqrt(2n/3) for unrestricted,
// pi*sqrt(n/3) for distinct parts.  Rejects kreduced:k with k >= 2, where no
// comparable leading constant is established.  Leading order only: the
// subexponential factor is deliberately ignored.
double asymptotic_log_count(int n, PartitionClass cls);

}  // namespace subsumlab
