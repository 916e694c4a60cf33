#pragma once

#include <optional>
#include <vector>

#include "subsumlab/bigint.hpp"
#include "subsumlab/census.hpp"
#include "subsumlab/partition.hpp"

namespace subsumlab {

// Forbid counts for one (n, class), computed by a single scan and then
// shared by the window checks below, which probe many a values per call.
class ForbidTable {
public:
    ForbidTable(int n, PartitionClass cls, const EnumerationOptions& opt = {});

    int n() const { return n_; }
    const PartitionClass& cls() const { return cls_; }
    // Count of all partitions of n in the class.
    const BigInt& total() const { return total_; }
    double log_total() const { return log_total_; }
    // Partitions that do not represent a; outside [0, n] that is all of them.
    const BigInt& at(long long a) const;

private:
    int n_;
    PartitionClass cls_;
    BigInt total_;
    double log_total_;
    std::vector<BigInt> counts_;
};

// One bound check over the a-window of a single j:
//   window  [ceil((j/2) eps sqrt n), floor(((j+1)/2) eps sqrt n)] ∩ [0, n]
//   bound   (2 count(floor(eps sqrt n), unrestricted))^(j-2) * count(n)^delta
struct WindowCheck {
    int j = 0;
    long long a_lo = 0;  // clamped window endpoints; empty shows as a_lo > a_hi
    long long a_hi = -1;
    BigInt max_forbid;                    // largest forbid count in the window
    std::optional<double> max_forbid_ln;  // absent when the window is empty or all zero
    double bound_ln = 0.0;
    bool holds = false;  // max_forbid <= bound, decided in log space (see .cpp)
};

// Exact verdicts on the window-to-split arithmetic at one j, with
// b = floor(eps sqrt n) and a at the extremal integers of the j-window.
// Every comparison is decided in exact rational/radical arithmetic.
struct AuxInequalityReport {
    bool lower_window_ok = false;   // a_lo - b >= ((j-2)/2) eps sqrt(n)
    bool lower_radical_ok = false;  // ((j-2)/2) eps sqrt(n) >= eps sqrt(n-b)
    bool upper_window_ok = false;   // a_hi - b <= ((j-1)/2) eps sqrt(n) + 1
    bool radical_drop_ok = false;   // (j/2) eps sqrt(n-b) >= (j/2) eps sqrt(n) - (j/2) eps^2
    bool case1_ok = false;          // -(1/2) eps sqrt(n) + 1 <= -eps^2 sqrt(n)/2
    std::optional<bool> case2_ok;   // -(1/2) eps sqrt(n) + 1 <= -(1/2) eps^2 tau / sqrt(n)
};

struct Lemma1Report {
    int n = 0;
    Rational epsilon;
    PartitionClass cls;
    double delta = 0.0;                    // exponent the bound was checked with
    std::optional<double> delta_achieved;  // max ln(forbid)/ln(total) on the window
    long long b = 0;                       // floor(eps sqrt n), the split sum
    long long window_lo = 0;               // hypothesis window [ceil(eps sqrt n - 1),
    long long window_hi = -1;              //   floor(2 eps sqrt n)] ∩ [0, n]
    std::vector<WindowCheck> per_j;        // j = 2 .. j_max
    std::optional<AuxInequalityReport> aux;  // evaluated at j = j_max when j_max >= 4
};

// The two constant-level comparisons behind the census exponent bounds:
// the distinct-parts side needs max(1.732, 1.07 ln 2) <= q_exponent*pi/sqrt(3),
// the unrestricted side max(1.969, 0.81 ln 2) <= p_exponent*pi*sqrt(2/3).
// The exponents are parameters so tests can probe how tight they are.
struct Theorem2ConstantsReport {
    double side_a = 0.0;  // q_exponent * pi / sqrt(3)
    double side_b = 0.0;  // max(1.732, 1.07 * ln 2)
    bool holds_q = false;
    double side_c = 0.0;  // p_exponent * pi * sqrt(2/3)
    double side_d = 0.0;  // max(1.969, 0.81 * ln 2)
    bool holds_p = false;
};

struct ExponentRow {
    int n = 0;
    PartitionClass cls;
    BigInt partitions;
    BigInt distinct_sets;
    double exponent = 0.0;  // ln(distinct_sets) / ln(partitions)
};

// Asymptotic reference slopes the empirical exponents are read against.
struct ExponentReference {
    double lower = 0.0;
    double upper = 0.0;
};

// Smallest exponent delta making "forbid(a) <= total^delta" true for every
// integer a in the window [ceil(eps sqrt n - 1), floor(2 eps sqrt n)] ∩ [0, n];
// zero counts contribute -inf, so the result is absent when the window is
// empty or every count in it vanishes (the hypothesis then holds for any
// delta > 0).  Requires total >= 2 so the log ratio is meaningful.
std::optional<double> achieved_delta(const ForbidTable& table, const Rational& epsilon);
std::optional<double> achieved_delta(int n, const Rational& epsilon, PartitionClass cls,
                                     const EnumerationOptions& opt = {});

// 2*floor(sqrt(n)/2): the explicit j range when eps < 1.
int default_j_max(int n);

// Checks, for each j in 2..j_max, whether every a in the j-window satisfies
// forbid(a) <= (2 p(floor(eps sqrt n)))^(j-2) * total^delta.  delta absent
// means "use achieved_delta" (0 when that is absent too); an explicit delta
// must lie in (0,1) and satisfy the window hypothesis, else this throws.
// tau bounds j_max when eps >= 1 and feeds the case-2 aux inequality.
Lemma1Report check_conclusion(const ForbidTable& table, const Rational& epsilon,
                              std::optional<double> delta, int j_max,
                              std::optional<long long> tau = std::nullopt);
Lemma1Report check_conclusion(int n, const Rational& epsilon, std::optional<double> delta,
                              int j_max, PartitionClass cls,
                              const EnumerationOptions& opt = {},
                              std::optional<long long> tau = std::nullopt);

// The inductive-step arithmetic at one (n, eps, j >= 4); see the report type.
AuxInequalityReport check_aux_inequalities(int n, const Rational& epsilon, int j,
                                           std::optional<long long> tau = std::nullopt);

Theorem2ConstantsReport theorem2_constants(double q_exponent = 0.955,
                                           double p_exponent = 0.768);

// Empirical exponents ln(distinct)/ln(total) for n = 2..n_max over the
// requested classes (n-major order); rows with total <= 1 are skipped.
std::vector<ExponentRow> exponent_table(int n_max,
                                        const std::vector<PartitionClass>& classes,
                                        const EnumerationOptions& opt = {});

// {0.361, 0.768} for unrestricted and {0.51, 0.955} for distinct parts;
// absent for other classes, where no reference slopes are established.
std::optional<ExponentReference> exponent_reference(PartitionClass cls);

}  // namespace subsumlab
