#pragma once

#include <stdexcept>
#include <vector>

#include "subsumlab/bigint.hpp"
#include "subsumlab/partition.hpp"

namespace subsumlab {

// Knobs for the enumeration-backed operations.  threads is a shard count
// and changes wall time only: every result is identical whatever its value.
struct EnumerationOptions {
    int cap = 60;     // largest n accepted before refusing with a cost estimate
    int threads = 1;  // number of deterministic shards of the partition stream
};

// An enumeration was refused because n exceeds the configured cap.  The
// message names the partition count and the memory the run would need.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CensusResult {
    int n = 0;
    PartitionClass cls;
    BigInt partitions;     // partitions enumerated; equals count_partitions
    BigInt distinct_sets;  // distinct represented sets among them
};

struct ForbidResult {
    int n = 0;
    int a = 0;
    PartitionClass cls;
    BigInt count;  // partitions of n in the class that do not represent a
};

// Number of distinct represented sets over all partitions of n in the
// class, by hashing canonical set encodings during one streaming pass.
CensusResult census(int n, PartitionClass cls, const EnumerationOptions& opt = {});

// How many partitions of n in the class fail to represent a.  Out-of-range
// a (a < 0 or a > n) is never represented, so the count is the full
// partition count — answered without enumerating.
ForbidResult forbid_count(int n, int a, PartitionClass cls,
                          const EnumerationOptions& opt = {});

// forbid_count for every a in [0, n] from a single enumeration pass: each
// partition's mask complement bumps one tally per unrepresented value.
std::vector<ForbidResult> forbid_scan(int n, PartitionClass cls,
                                      const EnumerationOptions& opt = {});

}  // namespace subsumlab
