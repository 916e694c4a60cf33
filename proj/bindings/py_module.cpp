// Python bindings for the core operations.  Partition classes travel as the
// same strings the command line accepts; exact counts come back as Python
// ints so nothing is silently truncated.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subsumlab/census.hpp"
#include "subsumlab/lemma.hpp"
#include "subsumlab/partition.hpp"
#include "subsumlab/subsum.hpp"
#include "subsumlab/version.hpp"

namespace py = pybind11;
using namespace subsumlab;

namespace {

py::int_ to_py_int(const BigInt& value) {
    const std::string digits = value.str();
    PyObject* object = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (object == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(object);
}

// Accept epsilon either as a decimal string (exact) or as a Python float.
Rational to_rational(const py::object& epsilon) {
    if (py::isinstance<py::str>(epsilon)) {
        return rational_from_decimal(epsilon.cast<std::string>());
    }
    return rational_from_double(epsilon.cast<double>());
}

EnumerationOptions options_from(int cap, int threads) {
    return EnumerationOptions{cap, threads};
}

class PartitionIterator {
public:
    PartitionIterator(int n, const std::string& cls)
        : stream_(n, PartitionClass::parse(cls)) {}

    Partition next() {
        Partition out;
        if (!stream_.next(out)) throw py::stop_iteration();
        return out;
    }

private:
    PartitionStream stream_;
};

py::dict window_to_dict(const WindowCheck& check) {
    py::dict row;
    row["j"] = check.j;
    row["a_lo"] = check.a_lo;
    row["a_hi"] = check.a_hi;
    row["max_forbid"] = to_py_int(check.max_forbid);
    row["max_forbid_ln"] = check.max_forbid_ln ? py::cast(*check.max_forbid_ln)
                                               : py::object(py::none());
    row["bound_ln"] = check.bound_ln;
    row["holds"] = check.holds;
    return row;
}

py::dict aux_to_dict(const AuxInequalityReport& aux) {
    py::dict out;
    out["lower_window_ok"] = aux.lower_window_ok;
    out["lower_radical_ok"] = aux.lower_radical_ok;
    out["upper_window_ok"] = aux.upper_window_ok;
    out["radical_drop_ok"] = aux.radical_drop_ok;
    out["case1_ok"] = aux.case1_ok;
    out["case2_ok"] =
        aux.case2_ok ? py::cast(*aux.case2_ok) : py::object(py::none());
    return out;
}

}  // namespace

PYBIND11_MODULE(_subsumlab, m) {
    m.doc() = "exact subset-sum census over integer partitions";
    m.attr("__version__") = std::string(kVersion);

    py::class_<PartitionIterator>(m, "PartitionIterator")
        .def("__iter__", [](PartitionIterator& self) -> PartitionIterator& { return self; })
        .def("__next__", &PartitionIterator::next);

    m.def(
        "partitions",
        [](int n, const std::string& cls) { return PartitionIterator(n, cls); },
        py::arg("n"), py::arg("cls") = "unrestricted",
        "iterate partitions of n in canonical lexicographic order");

    m.def(
        "count",
        [](int n, const std::string& cls) {
            return to_py_int(count_partitions(n, PartitionClass::parse(cls)));
        },
        py::arg("n"), py::arg("cls") = "unrestricted",
        "exact number of partitions of n in the class");

    m.def(
        "asymptotic_log_count",
        [](int n, const std::string& cls) {
            return asymptotic_log_count(n, PartitionClass::parse(cls));
        },
        py::arg("n"), py::arg("cls") = "unrestricted",
        "leading-order natural log of the partition count");

    m.def(
        "represent",
        [](const Partition& parts) { return represent(parts).to_vector(); },
        py::arg("parts"), "sorted list of all subset sums of the partition");

    m.def(
        "represents",
        [](const Partition& parts, long long a) { return represents(parts, a); },
        py::arg("parts"), py::arg("a"),
        "whether some subset of the parts sums to a");

    m.def(
        "extract_subset",
        [](const Partition& parts, long long a) -> std::optional<Partition> {
            return extract_subset(parts, a);
        },
        py::arg("parts"), py::arg("a"),
        "a witness subset summing to a, or None");

    m.def(
        "represents_full_range",
        [](const Partition& parts, double x) {
            return represents_full_range(parts, x);
        },
        py::arg("parts"), py::arg("x"),
        "whether every value in [ceil(x*sqrt(n)), floor(n - x*sqrt(n))] is a subset sum");

    m.def(
        "census",
        [](int n, const std::string& cls, int cap, int threads) {
            const CensusResult result =
                census(n, PartitionClass::parse(cls), options_from(cap, threads));
            py::dict out;
            out["n"] = result.n;
            out["class"] = result.cls.name();
            out["partitions"] = to_py_int(result.partitions);
            out["distinct_sets"] = to_py_int(result.distinct_sets);
            return out;
        },
        py::arg("n"), py::arg("cls") = "unrestricted", py::arg("cap") = 60,
        py::arg("threads") = 1,
        "partition count and number of distinct represented sets");

    m.def(
        "forbid_count",
        [](int n, int a, const std::string& cls, int cap, int threads) {
            return to_py_int(
                forbid_count(n, a, PartitionClass::parse(cls), options_from(cap, threads))
                    .count);
        },
        py::arg("n"), py::arg("a"), py::arg("cls") = "unrestricted",
        py::arg("cap") = 60, py::arg("threads") = 1,
        "number of partitions of n whose subset sums avoid a");

    m.def(
        "forbid_scan",
        [](int n, const std::string& cls, int cap, int threads) {
            std::vector<py::int_> counts;
            for (const ForbidResult& row :
                 forbid_scan(n, PartitionClass::parse(cls), options_from(cap, threads))) {
                counts.push_back(to_py_int(row.count));
            }
            return counts;
        },
        py::arg("n"), py::arg("cls") = "unrestricted", py::arg("cap") = 60,
        py::arg("threads") = 1, "forbid counts for every a in [0, n]");

    m.def(
        "achieved_delta",
        [](int n, const py::object& epsilon, const std::string& cls, int cap,
           int threads) {
            return achieved_delta(n, to_rational(epsilon), PartitionClass::parse(cls),
                                  options_from(cap, threads));
        },
        py::arg("n"), py::arg("epsilon"), py::arg("cls") = "unrestricted",
        py::arg("cap") = 60, py::arg("threads") = 1,
        "smallest exponent the hypothesis window actually attains, or None");

    m.def(
        "check_conclusion",
        [](int n, const py::object& epsilon, const std::optional<double>& delta,
           const std::optional<int>& j_max, const std::optional<long long>& tau,
           const std::string& cls, int cap, int threads) {
            const PartitionClass parsed = PartitionClass::parse(cls);
            const int resolved_j_max = j_max ? *j_max : default_j_max(n);
            const ForbidTable table(n, parsed, options_from(cap, threads));
            const Lemma1Report report =
                check_conclusion(table, to_rational(epsilon), delta, resolved_j_max, tau);
            py::dict out;
            out["n"] = report.n;
            out["epsilon"] = rational_to_double(report.epsilon);
            out["class"] = report.cls.name();
            out["delta"] = report.delta;
            out["delta_achieved"] = report.delta_achieved
                                        ? py::cast(*report.delta_achieved)
                                        : py::object(py::none());
            out["b"] = report.b;
            out["window_lo"] = report.window_lo;
            out["window_hi"] = report.window_hi;
            py::list rows;
            for (const WindowCheck& check : report.per_j) rows.append(window_to_dict(check));
            out["rows"] = rows;
            out["aux"] = report.aux ? py::object(aux_to_dict(*report.aux))
                                    : py::object(py::none());
            return out;
        },
        py::arg("n"), py::arg("epsilon"), py::arg("delta") = py::none(),
        py::arg("j_max") = py::none(), py::arg("tau") = py::none(),
        py::arg("cls") = "unrestricted", py::arg("cap") = 60, py::arg("threads") = 1,
        "window bound checks for j = 2..j_max against exact forbid counts");

    m.def(
        "check_aux_inequalities",
        [](int n, const py::object& epsilon, int j,
           const std::optional<long long>& tau) {
            return aux_to_dict(check_aux_inequalities(n, to_rational(epsilon), j, tau));
        },
        py::arg("n"), py::arg("epsilon"), py::arg("j"), py::arg("tau") = py::none(),
        "exact checks of the chained window inequalities at index j");

    m.def(
        "theorem2_constants",
        [](double q_exponent, double p_exponent) {
            const Theorem2ConstantsReport report =
                theorem2_constants(q_exponent, p_exponent);
            py::dict out;
            out["side_a"] = report.side_a;
            out["side_b"] = report.side_b;
            out["side_c"] = report.side_c;
            out["side_d"] = report.side_d;
            out["holds_q"] = report.holds_q;
            out["holds_p"] = report.holds_p;
            return out;
        },
        py::arg("q_exponent") = 0.955, py::arg("p_exponent") = 0.768,
        "constant-level comparison behind the census exponent bounds");

    m.def(
        "exponent_table",
        [](int n_max, const std::vector<std::string>& classes, int cap, int threads) {
            std::vector<PartitionClass> parsed;
            parsed.reserve(classes.size());
            for (const std::string& cls : classes) {
                parsed.push_back(PartitionClass::parse(cls));
            }
            py::list rows;
            for (const ExponentRow& row :
                 exponent_table(n_max, parsed, options_from(cap, threads))) {
                py::dict item;
                item["n"] = row.n;
                item["class"] = row.cls.name();
                item["partitions"] = to_py_int(row.partitions);
                item["distinct_sets"] = to_py_int(row.distinct_sets);
                item["exponent"] = row.exponent;
                rows.append(item);
            }
            return rows;
        },
        py::arg("n_max"), py::arg("classes"), py::arg("cap") = 60,
        py::arg("threads") = 1,
        "empirical exponents ln(distinct_sets)/ln(partitions) for n = 2..n_max");
}
