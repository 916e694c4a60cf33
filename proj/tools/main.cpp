// Command-line surface: every operation prints CSV (default) or JSON rows to
// stdout, diagnostics to stderr.  Exit codes: 0 ok, 2 usage error, 3 refusal
// because an enumeration would exceed the configured cap.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subsumlab/cache.hpp"
#include "subsumlab/census.hpp"
#include "subsumlab/lemma.hpp"
#include "subsumlab/partition.hpp"
#include "subsumlab/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace subsumlab;

struct GlobalOptions {
    std::string format = "csv";
    bool no_cache = false;
    std::string cache_dir;
    int threads = 1;
    int cap = 60;
};

std::string csv_cell(const ordered_json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    return value.dump();  // numbers and booleans; doubles shortest round-trip
}

// Rows carry their cells in column order (ordered_json preserves insertion
// order), so CSV and JSON render the same values from the same object.
void emit(const std::vector<std::string>& columns, const ordered_json& rows,
          const GlobalOptions& global) {
    if (global.format == "json") {
        std::cout << rows.dump() << "\n";
        return;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i != 0) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& column : columns) {
            if (!first) out << ',';
            first = false;
            out << csv_cell(row.at(column));
        }
        out << '\n';
    }
    std::cout << out.str();
}

void emit_notes(const ordered_json& value) {
    if (!value.contains("notes")) return;
    for (const auto& note : value["notes"]) {
        std::cerr << "# " << note.get<std::string>() << "\n";
    }
}

ResultCache make_cache(const GlobalOptions& global) {
    return ResultCache(ResultCache::resolve_dir(global.cache_dir), !global.no_cache);
}

EnumerationOptions enum_options(const GlobalOptions& global) {
    return EnumerationOptions{global.cap, global.threads};
}

// ---- subcommand bodies ----------------------------------------------------

void run_count(const GlobalOptions& global, int n, const std::string& class_name) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    const BigInt count = count_partitions(n, cls);
    ordered_json rows = ordered_json::array();
    rows.push_back({{"n", n}, {"class", cls.name()}, {"count", count.str()}});
    emit({"n", "class", "count"}, rows, global);
}

void run_census(const GlobalOptions& global, int n, const std::string& class_name) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    ResultCache cache = make_cache(global);
    const std::string key =
        "op=census;n=" + std::to_string(n) + ";class=" + cls.name() + ";params=";
    const ordered_json value = cache.get_or_compute(key, [&] {
        const CensusResult result = census(n, cls, enum_options(global));
        ordered_json rows = ordered_json::array();
        rows.push_back({{"n", result.n},
                        {"class", result.cls.name()},
                        {"partitions", result.partitions.str()},
                        {"distinct_sets", result.distinct_sets.str()}});
        return ordered_json{{"rows", rows}};
    });
    emit({"n", "class", "partitions", "distinct_sets"}, value["rows"], global);
}

void run_forbid(const GlobalOptions& global, int n, int a, const std::string& class_name) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    ResultCache cache = make_cache(global);
    const std::string key = "op=forbid;n=" + std::to_string(n) + ";a=" + std::to_string(a) +
                            ";class=" + cls.name() + ";params=";
    const ordered_json value = cache.get_or_compute(key, [&] {
        const ForbidResult result = forbid_count(n, a, cls, enum_options(global));
        ordered_json rows = ordered_json::array();
        rows.push_back({{"n", result.n},
                        {"a", result.a},
                        {"class", result.cls.name()},
                        {"count", result.count.str()}});
        return ordered_json{{"rows", rows}};
    });
    emit({"n", "a", "class", "count"}, value["rows"], global);
}

void run_scan_forbid(const GlobalOptions& global, int n, const std::string& class_name) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    ResultCache cache = make_cache(global);
    const std::string key =
        "op=scan-forbid;n=" + std::to_string(n) + ";class=" + cls.name() + ";params=";
    const ordered_json value = cache.get_or_compute(key, [&] {
        ordered_json rows = ordered_json::array();
        for (const ForbidResult& result : forbid_scan(n, cls, enum_options(global))) {
            rows.push_back({{"n", result.n},
                            {"a", result.a},
                            {"class", result.cls.name()},
                            {"count", result.count.str()}});
        }
        return ordered_json{{"rows", rows}};
    });
    emit({"n", "a", "class", "count"}, value["rows"], global);
}

void run_exponents(const GlobalOptions& global, int n_max, const std::string& class_list) {
    std::vector<PartitionClass> classes;
    std::string canonical_list;
    std::stringstream split(class_list);
    for (std::string item; std::getline(split, item, ',');) {
        const PartitionClass cls = PartitionClass::parse(item);
        if (std::find(classes.begin(), classes.end(), cls) != classes.end()) continue;
        classes.push_back(cls);
        if (!canonical_list.empty()) canonical_list += ',';
        canonical_list += cls.name();
    }
    if (classes.empty()) {
        throw std::invalid_argument("exponents: --class needs at least one class");
    }
    ResultCache cache = make_cache(global);
    const std::string key =
        "op=exponents;n=" + std::to_string(n_max) + ";class=" + canonical_list + ";params=";
    const ordered_json value = cache.get_or_compute(key, [&] {
        ordered_json rows = ordered_json::array();
        for (const ExponentRow& row : exponent_table(n_max, classes, enum_options(global))) {
            rows.push_back({{"n", row.n},
                            {"class", row.cls.name()},
                            {"partitions", row.partitions.str()},
                            {"distinct_sets", row.distinct_sets.str()},
                            {"exponent", row.exponent}});
        }
        ordered_json notes = ordered_json::array();
        for (const PartitionClass& cls : classes) {
            if (const auto reference = exponent_reference(cls)) {
                std::ostringstream note;
                note << "reference exponents " << cls.name() << ": lower "
                     << reference->lower << " upper " << reference->upper;
                notes.push_back(note.str());
            } else {
                notes.push_back("reference exponents " + cls.name() + ": none established");
            }
        }
        return ordered_json{{"rows", rows}, {"notes", notes}};
    });
    emit_notes(value);
    emit({"n", "class", "partitions", "distinct_sets", "exponent"}, value["rows"], global);
}

std::string describe(const std::optional<bool>& flag) {
    if (!flag) return "n/a";
    return *flag ? "true" : "false";
}

void run_verify_lemma1(const GlobalOptions& global, int n, const std::string& epsilon_text,
                       std::optional<double> delta, std::optional<int> j_max_arg,
                       std::optional<long long> tau, const std::string& class_name) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    const Rational epsilon = rational_from_decimal(epsilon_text);
    const int j_max = j_max_arg ? *j_max_arg : default_j_max(n);

    // Canonical cache key: exact epsilon, resolved j_max, explicit markers
    // for defaulted values, params sorted by name.
    std::ostringstream params;
    params << "delta=" << (delta ? ordered_json(*delta).dump() : "achieved")
           << ",epsilon=" << boost::multiprecision::numerator(epsilon).str() << "/"
           << boost::multiprecision::denominator(epsilon).str() << ",j_max=" << j_max
           << ",tau=" << (tau ? std::to_string(*tau) : "none");
    const std::string key = "op=verify-lemma1;n=" + std::to_string(n) +
                            ";class=" + cls.name() + ";params=" + params.str();

    ResultCache cache = make_cache(global);
    const ordered_json value = cache.get_or_compute(key, [&] {
        const ForbidTable table(n, cls, enum_options(global));
        const Lemma1Report report = check_conclusion(table, epsilon, delta, j_max, tau);

        ordered_json rows = ordered_json::array();
        for (const WindowCheck& check : report.per_j) {
            rows.push_back(
                {{"n", report.n},
                 {"epsilon", rational_to_double(report.epsilon)},
                 {"class", report.cls.name()},
                 {"delta", report.delta},
                 {"j", check.j},
                 {"a_lo", check.a_lo},
                 {"a_hi", check.a_hi},
                 {"max_forbid_ln",
                  check.max_forbid_ln ? ordered_json(*check.max_forbid_ln) : nullptr},
                 {"bound_ln", check.bound_ln},
                 {"holds", check.holds}});
        }

        ordered_json notes = ordered_json::array();
        {
            std::ostringstream note;
            note << "delta_achieved=";
            if (report.delta_achieved) {
                note << ordered_json(*report.delta_achieved).dump();
            } else {
                note << "absent (every forbid count in the window is 0)";
            }
            notes.push_back(note.str());
        }
        {
            std::ostringstream note;
            note << "split sum b=" << report.b << ", hypothesis window=["
                 << report.window_lo << "," << report.window_hi << "]";
            notes.push_back(note.str());
        }
        if (report.aux) {
            std::ostringstream note;
            note << "aux inequalities at j=" << j_max
                 << ": lower_window=" << (report.aux->lower_window_ok ? "true" : "false")
                 << " lower_radical=" << (report.aux->lower_radical_ok ? "true" : "false")
                 << " upper_window=" << (report.aux->upper_window_ok ? "true" : "false")
                 << " radical_drop=" << (report.aux->radical_drop_ok ? "true" : "false")
                 << " case1=" << (report.aux->case1_ok ? "true" : "false")
                 << " case2=" << describe(report.aux->case2_ok);
            notes.push_back(note.str());
        }
        return ordered_json{{"rows", rows}, {"notes", notes}};
    });

    emit_notes(value);
    emit({"n", "epsilon", "class", "delta", "j", "a_lo", "a_hi", "max_forbid_ln",
          "bound_ln", "holds"},
         value["rows"], global);
}

void run_verify_theorem2(const GlobalOptions& global) {
    const Theorem2ConstantsReport report = theorem2_constants();
    ordered_json rows = ordered_json::array();
    rows.push_back({{"name", "q"},
                    {"lhs", report.side_a},
                    {"rhs", report.side_b},
                    {"holds", report.holds_q}});
    rows.push_back({{"name", "p"},
                    {"lhs", report.side_c},
                    {"rhs", report.side_d},
                    {"holds", report.holds_p}});
    emit({"name", "lhs", "rhs", "holds"}, rows, global);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact census of partition subset sums"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    GlobalOptions global;
    global.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--no-cache", global.no_cache, "bypass the result cache");
    app.add_option("--cache-dir", global.cache_dir,
                   "cache directory (else SUBSUMLAB_CACHE, else the user cache dir)");
    app.add_option("--threads", global.threads,
                   "shard count for enumerations; never changes output bytes")
        ->capture_default_str();
    app.add_option("--cap", global.cap, "largest n enumeration-backed commands accept")
        ->capture_default_str();

    int n = 0;
    int a = 0;
    int n_max = 0;
    std::string class_name;
    std::string class_list;
    std::string epsilon_text;
    double delta = 0.0;
    int j_max = 0;
    long long tau = 0;

    CLI::App* count = app.add_subcommand("count", "exact partition count");
    count->fallthrough();
    count->add_option("--n", n, "target integer")->required();
    count->add_option("--class", class_name, "unrestricted | distinct | kreduced:<k>")
        ->required();
    count->callback([&] { run_count(global, n, class_name); });

    CLI::App* census_cmd =
        app.add_subcommand("census", "count distinct represented sets");
    census_cmd->fallthrough();
    census_cmd->add_option("--n", n, "target integer")->required();
    census_cmd->add_option("--class", class_name, "partition class")->required();
    census_cmd->callback([&] { run_census(global, n, class_name); });

    CLI::App* forbid = app.add_subcommand(
        "forbid", "count partitions that do not represent a value");
    forbid->fallthrough();
    forbid->add_option("--n", n, "target integer")->required();
    forbid->add_option("--a", a, "value that must not be represented")->required();
    forbid->add_option("--class", class_name, "partition class")->required();
    forbid->callback([&] { run_forbid(global, n, a, class_name); });

    CLI::App* scan = app.add_subcommand(
        "scan-forbid", "forbid counts for every a in [0, n] in one pass");
    scan->fallthrough();
    scan->add_option("--n", n, "target integer")->required();
    scan->add_option("--class", class_name, "partition class")->required();
    scan->callback([&] { run_scan_forbid(global, n, class_name); });

    CLI::App* exponents = app.add_subcommand(
        "exponents", "empirical exponents ln(distinct)/ln(count) for n = 2..n-max");
    exponents->fallthrough();
    exponents->add_option("--n-max", n_max, "largest n")->required();
    exponents->add_option("--class", class_list, "comma-separated class list")->required();
    exponents->callback([&] { run_exponents(global, n_max, class_list); });

    CLI::App* verify = app.add_subcommand("verify", "bound and constant checks");
    verify->fallthrough();
    verify->require_subcommand(1);

    CLI::App* lemma1 = verify->add_subcommand(
        "lemma1", "window bound checks against forbid counts");
    lemma1->fallthrough();
    lemma1->add_option("--n", n, "target integer")->required();
    lemma1->add_option("--epsilon", epsilon_text, "window scale, a positive decimal")
        ->required();
    CLI::Option* delta_opt =
        lemma1->add_option("--delta", delta, "exponent in (0,1); default: achieved");
    CLI::Option* j_max_opt = lemma1->add_option(
        "--j-max", j_max, "largest window index; default: 2*floor(sqrt(n)/2)");
    CLI::Option* tau_opt =
        lemma1->add_option("--tau", tau, "j range bound for epsilon >= 1");
    lemma1->add_option("--class", class_name, "partition class")->required();
    lemma1->callback([&] {
        run_verify_lemma1(global, n, epsilon_text,
                          delta_opt->count() > 0 ? std::optional<double>(delta)
                                                 : std::nullopt,
                          j_max_opt->count() > 0 ? std::optional<int>(j_max) : std::nullopt,
                          tau_opt->count() > 0 ? std::optional<long long>(tau)
                                               : std::nullopt,
                          class_name);
    });

    CLI::App* theorem2 = verify->add_subcommand(
        "theorem2", "constant-level comparison behind the census exponent bounds");
    theorem2->fallthrough();
    theorem2->callback([&] { run_verify_theorem2(global); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
