#include "subsumlab/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "subsumlab/exact.hpp"

namespace subsumlab {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

// Slack allowed when an exponent that was itself rounded to double (e.g.
// achieved_delta) is fed back into a comparison it defined.
constexpr double kDeltaSlack = 1e-12;

// Windows can sit astronomically far right of [0, n] for huge eps; clamp
// before converting so the long long endpoints are always safe.
long long clamp_to_range(BigInt value, long long lo, long long hi) {
    if (value < lo) return lo;
    if (value > hi) return hi;
    return value.convert_to<long long>();
}

// The largest split sum we are willing to feed into the O(m^2) count DP that
// the bound factor needs; beyond it the requested eps is out of desk scale.
constexpr long long kMaxSplitSum = 2000;

long long split_sum(const Rational& epsilon, int n) {
    const BigInt b = floor_scaled_sqrt(epsilon, n);
    if (b > kMaxSplitSum) {
        std::ostringstream msg;
        msg << "epsilon*sqrt(n) = " << b.str() << " is too large to evaluate the bound "
            << "factor (limit " << kMaxSplitSum << ")";
        throw std::invalid_argument(msg.str());
    }
    return b.convert_to<long long>();
}

// max forbid <= bound, compared as ln(max_forbid) vs bound_ln.  Doubles
// decide everything outside a relative guard band; inside it both sides are
// recomputed at 100 decimal digits from the exact ingredients, keeping a
// tolerance only for delta's own double rounding.  Counts are integers, so
// genuine violations clear the band by many orders of magnitude.
bool bound_holds(const BigInt& max_forbid, double lhs_ln, double rhs_ln, int j,
                 const BigInt& p_split, const BigInt& total, double delta) {
    const double scale = std::max({1.0, std::fabs(lhs_ln), std::fabs(rhs_ln)});
    if (lhs_ln <= rhs_ln - 1e-12 * scale) return true;
    if (lhs_ln > rhs_ln + 1e-12 * scale) return false;
    const HighFloat lhs = log(HighFloat(max_forbid));
    const HighFloat two_p = 2 * HighFloat(p_split);
    const HighFloat log_total = log(HighFloat(total));
    const HighFloat rhs = HighFloat(j - 2) * log(two_p) + HighFloat(delta) * log_total;
    const HighFloat abs_rhs = abs(rhs);
    const HighFloat tolerance =
        HighFloat("1e-14") * (abs_rhs > 1 ? abs_rhs : HighFloat(1));
    return lhs <= rhs + tolerance;
}

}  // namespace

ForbidTable::ForbidTable(int n, PartitionClass cls, const EnumerationOptions& opt)
    : n_(n), cls_(cls) {
    auto rows = forbid_scan(n, cls, opt);
    counts_.reserve(rows.size());
    for (auto& row : rows) counts_.push_back(std::move(row.count));
    total_ = count_partitions(n, cls);
    log_total_ = log_big(total_);
}

const BigInt& ForbidTable::at(long long a) const {
    if (a < 0 || a > n_) return total_;
    return counts_[static_cast<std::size_t>(a)];
}

std::optional<double> achieved_delta(const ForbidTable& table, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw std::invalid_argument("achieved_delta: epsilon must be > 0");
    }
    if (table.total() <= 1) {
        throw std::domain_error(
            "achieved_delta: count(n, class) <= 1, the exponent base is degenerate");
    }
    const int n = table.n();
    // Window [ceil(eps sqrt n - 1), floor(2 eps sqrt n)] ∩ [0, n]; the left
    // endpoint uses ceil(x - 1) = ceil(x) - 1.
    const long long lo =
        clamp_to_range(ceil_scaled_sqrt(epsilon, n) - 1, 0, static_cast<long long>(n) + 1);
    const long long hi = clamp_to_range(floor_scaled_sqrt(2 * epsilon, n), -1, n);
    std::optional<double> best;
    for (long long a = lo; a <= hi; ++a) {
        const BigInt& count = table.at(a);
        if (count == 0) continue;  // contributes -inf
        const double value = log_big(count) / table.log_total();
        if (!best || value > *best) best = value;
    }
    return best;
}

std::optional<double> achieved_delta(int n, const Rational& epsilon, PartitionClass cls,
                                     const EnumerationOptions& opt) {
    return achieved_delta(ForbidTable(n, cls, opt), epsilon);
}

int default_j_max(int n) {
    if (n < 0) {
        throw std::invalid_argument("default_j_max: n must be >= 0");
    }
    return 2 * (isqrt(BigInt(n)).convert_to<int>() / 2);
}

Lemma1Report check_conclusion(const ForbidTable& table, const Rational& epsilon,
                              std::optional<double> delta_arg, int j_max,
                              std::optional<long long> tau) {
    const int n = table.n();
    if (epsilon <= 0) {
        throw std::invalid_argument("check_conclusion: epsilon must be > 0");
    }
    if (j_max < 2) {
        throw std::invalid_argument("check_conclusion: j_max must be >= 2");
    }
    if (epsilon < 1 && j_max > default_j_max(n)) {
        std::ostringstream msg;
        msg << "check_conclusion: j_max " << j_max << " exceeds 2*floor(sqrt(n)/2) = "
            << default_j_max(n) << ", the stated j range for epsilon < 1";
        throw std::invalid_argument(msg.str());
    }
    if (epsilon >= 1 && tau && j_max > *tau) {
        std::ostringstream msg;
        msg << "check_conclusion: j_max " << j_max << " exceeds tau = " << *tau
            << ", the stated j range for epsilon >= 1";
        throw std::invalid_argument(msg.str());
    }

    const std::optional<double> achieved = achieved_delta(table, epsilon);
    double delta;
    if (delta_arg) {
        delta = *delta_arg;
        if (!(delta > 0.0 && delta < 1.0)) {
            throw std::invalid_argument("check_conclusion: delta must lie in (0, 1)");
        }
        if (achieved && *achieved > delta + kDeltaSlack) {
            std::ostringstream msg;
            msg << "check_conclusion: the window hypothesis fails: delta = " << delta
                << " but the window needs at least " << *achieved;
            throw std::domain_error(msg.str());
        }
    } else {
        // All-zero window: any positive delta works; 0 marks the degenerate
        // infimum and makes the bound conservative.
        delta = achieved.value_or(0.0);
    }

    Lemma1Report report;
    report.n = n;
    report.epsilon = epsilon;
    report.cls = table.cls();
    report.delta = delta;
    report.delta_achieved = achieved;
    report.b = split_sum(epsilon, n);
    report.window_lo =
        clamp_to_range(ceil_scaled_sqrt(epsilon, n) - 1, 0, static_cast<long long>(n) + 1);
    report.window_hi = clamp_to_range(floor_scaled_sqrt(2 * epsilon, n), -1, n);

    const BigInt p_split =
        count_partitions(static_cast<int>(report.b), PartitionClass{0});
    const double log_2p = std::numbers::ln2 + log_big(p_split);

    report.per_j.reserve(static_cast<std::size_t>(j_max - 1));
    for (int j = 2; j <= j_max; ++j) {
        WindowCheck check;
        check.j = j;
        check.a_lo = clamp_to_range(ceil_scaled_sqrt(epsilon * j / 2, n), 0,
                                    static_cast<long long>(n) + 1);
        check.a_hi = clamp_to_range(floor_scaled_sqrt(epsilon * (j + 1) / 2, n), -1, n);
        check.max_forbid = 0;
        for (long long a = check.a_lo; a <= check.a_hi; ++a) {
            if (table.at(a) > check.max_forbid) check.max_forbid = table.at(a);
        }
        check.bound_ln = (j - 2) * log_2p + delta * table.log_total();
        if (check.max_forbid == 0) {
            check.holds = true;  // empty window or nothing forbidden: vacuous
        } else {
            check.max_forbid_ln = log_big(check.max_forbid);
            check.holds = bound_holds(check.max_forbid, *check.max_forbid_ln,
                                      check.bound_ln, j, p_split, table.total(), delta);
        }
        report.per_j.push_back(std::move(check));
    }

    if (j_max >= 4) {
        report.aux = check_aux_inequalities(n, epsilon, j_max, tau);
    }
    return report;
}

Lemma1Report check_conclusion(int n, const Rational& epsilon, std::optional<double> delta,
                              int j_max, PartitionClass cls, const EnumerationOptions& opt,
                              std::optional<long long> tau) {
    return check_conclusion(ForbidTable(n, cls, opt), epsilon, delta, j_max, tau);
}

AuxInequalityReport check_aux_inequalities(int n, const Rational& epsilon, int j,
                                           std::optional<long long> tau) {
    if (n < 1) {
        throw std::invalid_argument("check_aux_inequalities: n must be >= 1");
    }
    if (j < 4) {
        throw std::invalid_argument(
            "check_aux_inequalities: j must be >= 4 (the inductive step)");
    }
    if (epsilon <= 0) {
        throw std::invalid_argument("check_aux_inequalities: epsilon must be > 0");
    }

    const BigInt nn(n);
    const BigInt b = floor_scaled_sqrt(epsilon, nn);
    const BigInt a_lo = ceil_scaled_sqrt(epsilon * j / 2, nn);
    const BigInt a_hi = floor_scaled_sqrt(epsilon * (j + 1) / 2, nn);
    const bool window_nonempty = a_lo <= a_hi;

    AuxInequalityReport report;

    // a_lo - b >= ((j-2)/2) eps sqrt(n); vacuous when no integer a exists.
    report.lower_window_ok =
        !window_nonempty ||
        compare_with_sqrt(Rational(a_lo - b), -epsilon * (j - 2) / 2, nn) >= 0;

    // ((j-2)/2) eps sqrt(n) >= eps sqrt(n-b): eps divides out, both sides are
    // then nonnegative, and squaring gives ((j-2)/2)^2 n >= n - b.
    if (b > nn) {
        report.lower_radical_ok = false;  // sqrt(n-b) does not exist
    } else {
        const Rational half = Rational(j - 2) / 2;
        report.lower_radical_ok = half * half * Rational(nn) >= Rational(nn - b);
    }

    // a_hi - b <= ((j-1)/2) eps sqrt(n) + 1; vacuous when the window is empty.
    report.upper_window_ok =
        !window_nonempty ||
        compare_with_sqrt(Rational(a_hi - b - 1), -epsilon * (j - 1) / 2, nn) <= 0;

    // (j/2) eps sqrt(n-b) >= (j/2) eps sqrt(n) - (j/2) eps^2, i.e. after
    // dividing by (j/2) eps:  sqrt(n-b) >= sqrt(n) - eps.
    if (compare_with_sqrt(-epsilon, 1, nn) <= 0) {
        report.radical_drop_ok = b <= nn;  // right side <= 0, left just has to exist
    } else if (b > nn) {
        report.radical_drop_ok = false;
    } else {
        // Both sides nonnegative; squaring gives n - b >= n - 2 eps sqrt(n) + eps^2,
        // i.e. 2 eps sqrt(n) >= b + eps^2.
        report.radical_drop_ok =
            compare_with_sqrt(-(Rational(b) + epsilon * epsilon), 2 * epsilon, nn) >= 0;
    }

    // Case 1 closing inequality: -(1/2) eps sqrt(n) + 1 <= -eps^2 sqrt(n)/2,
    // equivalently (eps(1-eps)/2) sqrt(n) >= 1.
    report.case1_ok = compare_with_sqrt(-1, epsilon * (1 - epsilon) / 2, nn) >= 0;

    // Case 2 closing inequality: -(1/2) eps sqrt(n) + 1 <= -(1/2) eps^2 tau/sqrt(n);
    // multiplying by 2 sqrt(n) > 0 gives eps^2 tau - eps n + 2 sqrt(n) <= 0.
    if (tau) {
        report.case2_ok =
            compare_with_sqrt(epsilon * epsilon * Rational(*tau) - epsilon * Rational(nn),
                              2, nn) <= 0;
    }
    return report;
}

Theorem2ConstantsReport theorem2_constants(double q_exponent, double p_exponent) {
    Theorem2ConstantsReport report;
    report.side_a = q_exponent * std::numbers::pi / std::sqrt(3.0);
    report.side_b = std::max(1.732, 1.07 * std::numbers::ln2);
    report.holds_q = report.side_b <= report.side_a;
    report.side_c = p_exponent * std::numbers::pi * std::sqrt(2.0 / 3.0);
    report.side_d = std::max(1.969, 0.81 * std::numbers::ln2);
    report.holds_p = report.side_d <= report.side_c;
    return report;
}

std::vector<ExponentRow> exponent_table(int n_max,
                                        const std::vector<PartitionClass>& classes,
                                        const EnumerationOptions& opt) {
    if (n_max < 2) {
        throw std::invalid_argument("exponent_table: n_max must be >= 2");
    }
    if (classes.empty()) {
        throw std::invalid_argument("exponent_table: at least one class is required");
    }
    std::vector<ExponentRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        for (const PartitionClass& cls : classes) {
            CensusResult result = census(n, cls, opt);
            if (result.partitions <= 1) continue;  // log base degenerate
            ExponentRow row;
            row.n = n;
            row.cls = cls;
            row.exponent = log_big(result.distinct_sets) / log_big(result.partitions);
            row.partitions = std::move(result.partitions);
            row.distinct_sets = std::move(result.distinct_sets);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::optional<ExponentReference> exponent_reference(PartitionClass cls) {
    if (cls.cap == 0) return ExponentReference{0.361, 0.768};
    if (cls.cap == 1) return ExponentReference{0.51, 0.955};
    return std::nullopt;
}

}  // namespace subsumlab
