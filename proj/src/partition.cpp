#include "subsumlab/partition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subsumlab {

PartitionClass PartitionClass::parse(std::string_view text) {
    if (text == "unrestricted") return {0};
    if (text == "distinct") return {1};
    constexpr std::string_view prefix = "kreduced:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string_view digits = text.substr(prefix.size());
        if (!digits.empty() && digits.size() <= 9) {
            int k = 0;
            bool ok = true;
            for (char c : digits) {
                if (c < '0' || c > '9') {
                    ok = false;
                    break;
                }
                k = k * 10 + (c - '0');
            }
            if (ok && k >= 1) return {k};
        }
    }
    throw std::invalid_argument("unknown partition class: '" + std::string(text) +
                                "' (expected unrestricted, distinct, or kreduced:<k>)");
}

std::string PartitionClass::name() const {
    if (cap == 0) return "unrestricted";
    if (cap == 1) return "distinct";
    return "kreduced:" + std::to_string(cap);
}

PartitionStream::PartitionStream(int n, PartitionClass cls)
    : n_(n), cap_(cls.cap), remaining_(n) {
    if (n < 0) {
        throw std::invalid_argument("PartitionStream: n must be >= 0");
    }
}

bool PartitionStream::multiplicity_ok(int value) const {
    if (cap_ == 0) return true;
    if (parts_.empty() || parts_.back() != value) return 1 <= cap_;
    return runs_.back() + 1 <= cap_;
}

void PartitionStream::push_part(int value) {
    runs_.push_back(!parts_.empty() && parts_.back() == value ? runs_.back() + 1 : 1);
    parts_.push_back(value);
    remaining_ -= value;
}

int PartitionStream::pop_part() {
    const int value = parts_.back();
    parts_.pop_back();
    runs_.pop_back();
    remaining_ += value;
    return value;
}

bool PartitionStream::next(Partition& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (remaining_ == 0) {  // n = 0: the empty partition, then nothing
            out.clear();
            return true;
        }
        candidate_ = 1;
    } else {
        // The previous call returned a complete partition; step to its
        // successor by replacing the last part with the next larger value.
        if (parts_.empty()) {
            done_ = true;
            return false;
        }
        candidate_ = pop_part() + 1;
    }
    while (true) {
        if (candidate_ > remaining_) {  // nothing fits here: backtrack
            if (parts_.empty()) {
                done_ = true;
                return false;
            }
            candidate_ = pop_part() + 1;
            continue;
        }
        if (!multiplicity_ok(candidate_)) {
            ++candidate_;
            continue;
        }
        push_part(candidate_);
        if (remaining_ == 0) {
            out = parts_;
            return true;
        }
        // Parts are non-decreasing, so the next slot starts at this value.
    }
}

namespace {

std::vector<BigInt> count_row(PartitionClass cls, int n_max) {
    std::vector<BigInt> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (int v = 1; v <= n_max; ++v) {
        if (cls.cap == 0) {
            // Unbounded parts: ascending sweep reuses v any number of times.
            for (int j = v; j <= n_max; ++j) ways[j] += ways[j - v];
        } else {
            // At most cap copies of v: descending sweep, explicit copy count.
            for (int j = n_max; j >= v; --j) {
                BigInt acc = ways[j];
                for (int c = 1; c <= cls.cap && c * v <= j; ++c) {
                    acc += ways[j - c * v];
                }
                ways[j] = std::move(acc);
            }
        }
    }
    return ways;
}

}  // namespace

BigInt count_partitions(int n, PartitionClass cls) {
    if (n < 0) {
        throw std::invalid_argument("count_partitions: n must be >= 0");
    }
    return count_row(cls, n)[n];
}

CountTable::CountTable(PartitionClass cls, int n_max) : cls_(cls) {
    if (n_max < 0) {
        throw std::invalid_argument("CountTable: n_max must be >= 0");
    }
    counts_ = count_row(cls, n_max);
}

const BigInt& CountTable::at(int n) const {
    if (n < 0 || n > n_max()) {
        throw std::out_of_range("CountTable::at: n outside [0, n_max]");
    }
    return counts_[static_cast<std::size_t>(n)];
}

double asymptotic_log_count(int n, PartitionClass cls) {
    if (n < 1) {
        throw std::invalid_argument("asymptotic_log_count: n must be >= 1");
    }
    if (cls.cap == 0) return std::numbers::pi * std::sqrt(2.0 * n / 3.0);
    if (cls.cap == 1) return std::numbers::pi * std::sqrt(n / 3.0);
    throw std::invalid_argument(
        "asymptotic_log_count: no leading constant is known for " + cls.name());
}

}  // namespace subsumlab
