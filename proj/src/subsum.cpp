#include "subsumlab/subsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "subsumlab/exact.hpp"

namespace subsumlab {

namespace {

std::size_t word_count(int n) {
    return static_cast<std::size_t>(n) / 64 + 1;
}

// dst |= src << shift, over equally sized word arrays.  Bits pushed past the
// end are dropped; callers only shift by part sizes, so no set bit can pass
// position n anyway (subset sums are bounded by the total).
void shift_or(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
              int shift) {
    const std::size_t words = dst.size();
    const std::size_t word_shift = static_cast<std::size_t>(shift) / 64;
    const int bit_shift = shift % 64;
    for (std::size_t i = words; i-- > word_shift;) {
        std::uint64_t piece = src[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i - word_shift >= 1) {
            piece |= src[i - word_shift - 1] >> (64 - bit_shift);
        }
        dst[i] |= piece;
    }
}

void validate_parts(const Partition& parts) {
    int prev = 1;
    for (int p : parts) {
        if (p < prev) {
            throw std::invalid_argument(
                "partition parts must be positive and non-decreasing");
        }
        prev = p;
    }
}

}  // namespace

RepresentedSet::RepresentedSet(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 0) {
        throw std::invalid_argument("RepresentedSet: n must be >= 0");
    }
}

bool RepresentedSet::contains(int a) const {
    if (a < 0 || a > n_) return false;
    return (words_[static_cast<std::size_t>(a) / 64] >> (a % 64)) & 1u;
}

int RepresentedSet::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool RepresentedSet::full() const {
    return count() == n_ + 1;
}

std::vector<int> RepresentedSet::to_vector() const {
    std::vector<int> values;
    for (int a = 0; a <= n_; ++a) {
        if (contains(a)) values.push_back(a);
    }
    return values;
}

std::string RepresentedSet::key() const {
    std::size_t used = words_.size();
    while (used > 0 && words_[used - 1] == 0) --used;
    std::string bytes;
    bytes.reserve(used * 8);
    for (std::size_t i = 0; i < used; ++i) {
        for (int b = 0; b < 8; ++b) {
            bytes.push_back(static_cast<char>((words_[i] >> (8 * b)) & 0xff));
        }
    }
    return bytes;
}

void RepresentedSet::set_bit(int a) {
    words_[static_cast<std::size_t>(a) / 64] |= std::uint64_t{1} << (a % 64);
}

int partition_sum(const Partition& parts) {
    long long total = 0;
    for (int p : parts) total += p;
    if (total > 1'000'000'000) {
        throw std::invalid_argument("partition_sum: total too large for a bitset table");
    }
    return static_cast<int>(total);
}

RepresentedSet represent(const Partition& parts) {
    validate_parts(parts);
    RepresentedSet set(partition_sum(parts));
    set.set_bit(0);
    for (int p : parts) {
        shift_or(set.words_, set.words_, p);
    }
    return set;
}

bool represents(const Partition& parts, int a) {
    validate_parts(parts);
    const int n = partition_sum(parts);
    if (a < 0 || a > n) return false;
    if (a == 0 || a == n) return true;
    RepresentedSet set(n);
    set.set_bit(0);
    for (int p : parts) {
        shift_or(set.words_, set.words_, p);
        if (set.contains(a)) return true;  // stop as soon as a is reachable
    }
    return false;
}

std::optional<Partition> extract_subset(const Partition& parts, int a) {
    validate_parts(parts);
    const int n = partition_sum(parts);
    if (a < 0 || a > n) return std::nullopt;

    // prefix[i] = sums representable by parts[0..i-1].
    std::vector<RepresentedSet> prefix;
    prefix.reserve(parts.size() + 1);
    prefix.emplace_back(n);
    prefix.back().set_bit(0);
    for (int p : parts) {
        RepresentedSet next = prefix.back();
        shift_or(next.words_, next.words_, p);
        prefix.push_back(std::move(next));
    }
    if (!prefix.back().contains(a)) return std::nullopt;

    Partition chosen;
    int need = a;
    for (std::size_t i = parts.size(); i-- > 0;) {
        const int p = parts[static_cast<std::size_t>(i)];
        // Keep the large part whenever the remainder is still reachable.
        if (need >= p && prefix[i].contains(need - p)) {
            chosen.push_back(p);
            need -= p;
        }
    }
    // The DP guarantees one branch stays reachable at every step.
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

bool represents_full_range(const Partition& parts, double x) {
    if (!(x >= 0)) {
        throw std::invalid_argument("represents_full_range: x must be >= 0");
    }
    const RepresentedSet set = represent(parts);
    const int n = set.n();
    // Integer endpoints, exactly: [ceil(x*sqrt(n)), floor(n - x*sqrt(n))],
    // and floor(n - y) = n - ceil(y) for integer n.
    const BigInt lo_exact = ceil_scaled_sqrt(rational_from_double(x), n);
    if (lo_exact > n) return true;
    const int lo = lo_exact.convert_to<int>();
    const int hi = n - lo;
    for (int a = lo; a <= hi; ++a) {
        if (!set.contains(a)) return false;
    }
    return true;
}

}  // namespace subsumlab
