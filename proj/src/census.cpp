#include "subsumlab/census.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

#include "subsumlab/subsum.hpp"

namespace subsumlab {

namespace {

void check_cap(const char* op, int n, PartitionClass cls, int cap) {
    if (n < 0) {
        throw std::invalid_argument(std::string(op) + ": n must be >= 0");
    }
    if (n <= cap) return;
    // Refusal message sized honestly: exact partition count while the count
    // DP is cheap, leading-order estimate beyond, plus the mask-table memory
    // the run would need.
    std::ostringstream msg;
    msg << op << ": n=" << n << " (" << cls.name() << ") exceeds the enumeration cap "
        << cap << "; ";
    const double bytes_per_mask = 8.0 * (n / 64 + 1) + 48.0;  // words + container overhead
    double log_count;
    if (n <= 500) {
        const BigInt exact = count_partitions(n, cls);
        log_count = log_big(exact);
        msg << "that is " << exact.str() << " partitions";
    } else {
        log_count = asymptotic_log_count(n, PartitionClass{0});  // upper bound for any class
        msg << "that is on the order of exp(" << std::lround(log_count) << ") partitions";
    }
    const double log_bytes = log_count + std::log(bytes_per_mask);
    if (log_bytes < 62.0 * std::numbers::ln2_v<double>) {
        msg << " and roughly " << std::lround(std::exp(log_bytes) / (1024.0 * 1024.0))
            << " MiB of mask table";
    } else {
        msg << " and an astronomically large mask table";
    }
    msg << "; raise the cap to proceed";
    throw ResourceCapError(msg.str());
}

// Runs process(state_of_shard, partition) over the canonical stream, shard s
// taking every stream index congruent to s.  Shards walk independent stream
// instances, so merging their states in shard order reproduces the
// single-shard result exactly.
template <typename State, typename Fn>
std::vector<State> sharded_enumeration(int n, PartitionClass cls, int shards,
                                       const Fn& process) {
    if (shards < 1) {
        throw std::invalid_argument("threads must be >= 1");
    }
    std::vector<State> states(static_cast<std::size_t>(shards));
    auto worker = [&](int shard) {
        PartitionStream stream(n, cls);
        Partition parts;
        State& state = states[static_cast<std::size_t>(shard)];
        std::uint64_t index = 0;
        while (stream.next(parts)) {
            if (index % static_cast<std::uint64_t>(shards) ==
                static_cast<std::uint64_t>(shard)) {
                process(state, parts);
            }
            ++index;
        }
    };
    if (shards == 1) {
        worker(0);
        return states;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) {
        pool.emplace_back([&, s] {
            try {
                worker(s);
            } catch (...) {
                errors[static_cast<std::size_t>(s)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return states;
}

}  // namespace

CensusResult census(int n, PartitionClass cls, const EnumerationOptions& opt) {
    check_cap("census", n, cls, opt.cap);
    struct Shard {
        std::uint64_t seen = 0;
        std::unordered_set<std::string> keys;
    };
    auto states = sharded_enumeration<Shard>(
        n, cls, opt.threads, [](Shard& shard, const Partition& parts) {
            ++shard.seen;
            shard.keys.insert(represent(parts).key());
        });
    std::uint64_t total = 0;
    std::unordered_set<std::string> merged;
    for (auto& shard : states) {
        total += shard.seen;
        merged.merge(shard.keys);
    }
    return {n, cls, BigInt(total), BigInt(merged.size())};
}

ForbidResult forbid_count(int n, int a, PartitionClass cls,
                          const EnumerationOptions& opt) {
    check_cap("forbid", n, cls, opt.cap);
    if (a < 0 || a > n) {
        return {n, a, cls, count_partitions(n, cls)};
    }
    struct Shard {
        std::uint64_t missing = 0;
    };
    auto states = sharded_enumeration<Shard>(
        n, cls, opt.threads, [a](Shard& shard, const Partition& parts) {
            if (!represents(parts, a)) ++shard.missing;
        });
    std::uint64_t total = 0;
    for (const auto& shard : states) total += shard.missing;
    return {n, a, cls, BigInt(total)};
}

std::vector<ForbidResult> forbid_scan(int n, PartitionClass cls,
                                      const EnumerationOptions& opt) {
    check_cap("scan-forbid", n, cls, opt.cap);
    struct Shard {
        std::vector<std::uint64_t> missing;  // sized lazily on first partition
    };
    const std::size_t slots = static_cast<std::size_t>(n) + 1;
    auto states = sharded_enumeration<Shard>(
        n, cls, opt.threads, [n, slots](Shard& shard, const Partition& parts) {
            if (shard.missing.empty()) shard.missing.assign(slots, 0);
            const RepresentedSet set = represent(parts);
            const auto& words = set.words();
            for (std::size_t wi = 0; wi < words.size(); ++wi) {
                std::uint64_t absent = ~words[wi];
                if (wi + 1 == words.size()) {
                    const int top = n % 64;  // valid bits 0..top in the last word
                    absent &= top == 63 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << (top + 1)) - 1;
                }
                while (absent != 0) {
                    const int bit = std::countr_zero(absent);
                    absent &= absent - 1;
                    ++shard.missing[wi * 64 + static_cast<std::size_t>(bit)];
                }
            }
        });
    std::vector<ForbidResult> rows;
    rows.reserve(slots);
    for (int a = 0; a <= n; ++a) {
        std::uint64_t total = 0;
        for (const auto& shard : states) {
            if (!shard.missing.empty()) total += shard.missing[static_cast<std::size_t>(a)];
        }
        rows.push_back({n, a, cls, BigInt(total)});
    }
    return rows;
}

}  // namespace subsumlab
