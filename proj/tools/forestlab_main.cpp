// Command-line frontend: statistics, codes and sorting traces for a single
// labeled forest, distribution polynomials and their closed forms, the
// exhaustive identity verifier, and the counterexample searches.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forestlab/forestlab.hpp"
#include "forestlab/io_json.hpp"

namespace {

using namespace forestlab;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw CLI::ValidationError("--format must be text, json or csv");
}

std::string set_text(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

void print_kv_text(const nlohmann::json& j) {
    for (const auto& [key, value] : j.items()) {
        if (value.is_array()) {
            std::cout << key << ": " << set_text(value.get<std::vector<int>>()) << "\n";
        } else {
            std::cout << key << ": " << value << "\n";
        }
    }
}

void print_kv_csv(const nlohmann::json& j) {
    for (const auto& [key, value] : j.items()) {
        std::cout << key << ",";
        if (value.is_array()) {
            const auto v = value.get<std::vector<int>>();
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
        } else {
            std::cout << value;
        }
        std::cout << "\n";
    }
}

void emit_flat(const nlohmann::json& j, Format format) {
    switch (format) {
        case Format::Json: std::cout << j.dump(2) << "\n"; break;
        case Format::Text: print_kv_text(j); break;
        case Format::Csv: print_kv_csv(j); break;
    }
}

nlohmann::json full_stats_json(const Forest& f, const Labeling& w) {
    nlohmann::json j = stat_record_json(stat_record(f, w));
    const SortResult sorted = sort_forest(f, w);
    j["a_code"] = a_code(f, w).entries;
    j["b_code"] = sorted.bcode.entries;
    j["sor_B"] = sorted.sor_b;
    j["sorted_labeling"] = sorted.sorted.values();
    j["m_code_signed"] = m_code_signed(f, w).entries;
    j["Cyc_B"] = cyc_vertices(f, w, Variant::B);
    j["cycles"] = quotient_permutation(w, sorted.sorted).cycle_string();
    if (w.all_positive()) {
        j["m_code"] = m_code(f, w).entries;
        j["Cyc"] = cyc_vertices(f, w, Variant::A);
        j["sor"] = sorted.sor_b;
    }
    return j;
}

int report_lines(const std::vector<Report>& reports, Format format, bool print_summary) {
    std::size_t failed = 0;
    if (format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Report& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    for (const Report& r : reports) {
        if (format == Format::Text) {
            std::cout << report_status_name(r.status) << "  " << r.identity << "  forest=" << r.forest;
            if (!r.witness.empty()) std::cout << "  witness: " << r.witness;
            std::cout << "\n";
        } else if (format == Format::Csv) {
            std::cout << r.identity << "," << r.forest << "," << report_status_name(r.status) << ",\""
                      << r.witness << "\"," << r.seconds << "\n";
        }
        failed += r.status == ReportStatus::Failed;
    }
    if (print_summary && format == Format::Text)
        std::cout << reports.size() << " reports, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistics, codes and equidistribution checks for labeled plane forests"};
    app.require_subcommand(1);
    // Global flags (--format, --threads, --seedless) may appear after the
    // subcommand as well.
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, json or csv")
        ->capture_default_str();
    // Reserved: the tool uses no randomness anywhere; accepted for interface
    // stability and always on.
    app.add_flag("--seedless", "deterministic mode (always on)");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = library default)");

    std::string forest_text, labeling_text;

    auto* cmd_stats = app.add_subcommand("stats", "all statistics and codes of a labeled forest");
    cmd_stats->add_option("--forest", forest_text, "parent array, e.g. 3,3,5,5,0")->required();
    cmd_stats->add_option("--labeling", labeling_text, "labels, e.g. 3,-5,1,-4,2")->required();

    auto* cmd_code = app.add_subcommand("code", "A-, B- and M-codes of a labeled forest");
    cmd_code->add_option("--forest", forest_text, "parent array")->required();
    cmd_code->add_option("--labeling", labeling_text, "labels")->required();

    auto* cmd_trace = app.add_subcommand("sort-trace", "step-by-step forest sorting trace");
    cmd_trace->add_option("--forest", forest_text, "parent array")->required();
    cmd_trace->add_option("--labeling", labeling_text, "labels")->required();

    auto* cmd_verify = app.add_subcommand("verify", "exhaustively check the identity registry");
    int max_n = 4;
    std::vector<std::string> identities;
    std::vector<std::string> classes;
    bool override_bounds = false;
    cmd_verify->add_option("--max-n", max_n, "largest forest size")->capture_default_str();
    cmd_verify->add_option("--identity", identities, "identity names (default: all)");
    cmd_verify->add_option("--class", classes, "unsigned, signed or even-signed (default: all)");
    cmd_verify->add_flag("--override-bounds", override_bounds,
                         "lift the default per-class caps (unsigned 7, signed 5)");
    cmd_verify->add_flag("--list", "list identity names and exit");

    auto* cmd_counter = app.add_subcommand("counterexample", "search for a witness forest");
    std::string target_name;
    int counter_max_n = 5;
    bool paths_only = false;
    cmd_counter
        ->add_option("--target", target_name,
                     "maj-btmax-vs-inv-btmax, fmaj-cbtmaxb-vs-invb-btmaxb or signed-mcode-not-onto")
        ->required();
    cmd_counter->add_option("--max-n", counter_max_n, "largest forest size")->capture_default_str();
    cmd_counter->add_flag("--paths-only", paths_only, "restrict the search to linear trees");

    auto* cmd_dist = app.add_subcommand("distribution", "distribution polynomial by enumeration");
    std::string class_name = "unsigned", pair_name;
    cmd_dist->add_option("--forest", forest_text, "parent array")->required();
    cmd_dist->add_option("--class", class_name, "labeling class")->capture_default_str();
    cmd_dist->add_option("--pair", pair_name, "statistic pair name")->required();

    auto* cmd_formula = app.add_subcommand("formula", "closed-form product polynomial");
    std::string family_name_arg;
    cmd_formula->add_option("--forest", forest_text, "parent array")->required();
    cmd_formula->add_option("--family", family_name_arg, "formula family name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format format = parse_format(format_name);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (cmd_stats->parsed()) {
            const Forest f = Forest::parse(forest_text);
            const Labeling w = Labeling::parse(labeling_text);
            emit_flat(full_stats_json(f, w), format);
            return 0;
        }
        if (cmd_code->parsed()) {
            const Forest f = Forest::parse(forest_text);
            const Labeling w = Labeling::parse(labeling_text);
            nlohmann::json j;
            j["a_code"] = a_code(f, w).entries;
            j["b_code"] = sort_forest(f, w).bcode.entries;
            j["m_code_signed"] = m_code_signed(f, w).entries;
            if (w.all_positive()) j["m_code"] = m_code(f, w).entries;
            emit_flat(j, format);
            return 0;
        }
        if (cmd_trace->parsed()) {
            const Forest f = Forest::parse(forest_text);
            const Labeling w = Labeling::parse(labeling_text);
            const SortResult r = sort_forest(f, w);
            if (format == Format::Json) {
                nlohmann::json j;
                j["steps"] = sort_trace_json(r.trace);
                j["sor_B"] = r.sor_b;
                j["b_code"] = r.bcode.entries;
                j["sorted_labeling"] = r.sorted.values();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const SortStep& s : r.trace) {
                    std::cout << "i=" << s.magnitude << "  v=v" << s.vertex << "  u=v" << s.pivot
                              << "  contribution=" << s.contribution << "  labels=";
                    for (std::size_t k = 0; k < s.labels_after.size(); ++k)
                        std::cout << (k ? "," : "") << s.labels_after[k];
                    std::cout << "\n";
                }
                std::cout << "sor_B=" << r.sor_b << "  b_code=" << r.bcode.to_string() << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            if (cmd_verify->count("--list")) {
                for (const std::string& name : identity_names()) std::cout << name << "\n";
                return 0;
            }
            VerifyOptions options;
            options.max_n = max_n;
            options.identities = identities;
            for (const std::string& c : classes) options.classes.push_back(label_class_from_name(c));
            if (!override_bounds) {
                options.unsigned_max_n = 7;
                options.signed_max_n = 5;
                if (max_n > 5)
                    std::cerr << "note: signed identities capped at n=5 (2^n n! labelings per "
                                 "forest); pass --override-bounds to lift, at real cost\n";
            } else if (max_n > 5) {
                std::cerr << "warning: enumerating all signed labelings up to n=" << max_n
                          << " touches " << labeling_count(std::min(max_n, 12), LabelClass::Signed)
                          << " labelings per forest at the top size\n";
            }
            return report_lines(run_verification(options), format, true);
        }
        if (cmd_counter->parsed()) {
            const CounterexampleTarget target = counterexample_target_from_name(target_name);
            const Report r = paths_only ? find_counterexample_on_paths(target, counter_max_n)
                                        : find_counterexample(target, counter_max_n);
            if (format == Format::Json)
                std::cout << report_json(r).dump(2) << "\n";
            else if (format == Format::Csv)
                std::cout << r.identity << "," << r.forest << "," << report_status_name(r.status)
                          << ",\"" << r.witness << "\"," << r.seconds << "\n";
            else {
                std::cout << report_status_name(r.status) << "  " << r.identity;
                if (!r.forest.empty()) std::cout << "  forest=" << r.forest;
                std::cout << "  " << r.witness << "\n";
            }
            return r.status == ReportStatus::CounterexampleFound ? 0 : 1;
        }
        if (cmd_dist->parsed()) {
            const Forest f = Forest::parse(forest_text);
            const MultiPoly poly =
                distribution(f, label_class_from_name(class_name), stat_pair_from_name(pair_name));
            if (format == Format::Json)
                std::cout << poly_json(poly).dump(2) << "\n";
            else
                std::cout << poly.to_string() << "\n";
            return 0;
        }
        if (cmd_formula->parsed()) {
            const Forest f = Forest::parse(forest_text);
            const MultiPoly poly = product_formula(f, family_from_name(family_name_arg));
            if (format == Format::Json)
                std::cout << poly_json(poly).dump(2) << "\n";
            else
                std::cout << poly.to_string() << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
