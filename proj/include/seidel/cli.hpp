#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seidel/identities.hpp"
#include "seidel/json_io.hpp"
#include "seidel/presets.hpp"
#include "seidel/sequences.hpp"

namespace seidel::cli {

// 0 expected outcome, 1 unexpected identity failure, 2 usage or domain error
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitUsage = 2;

// a run is expected when every verdict matches its pinned expectation,
// confirmed errata included
inline int exit_code_for(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
        const auto& expected = find_identity(r.id).expected;
        auto it = expected.find(r.variant);
        if (it == expected.end() || it->second != r.verdict) return kExitUnexpected;
    }
    return kExitOk;
}

namespace detail {

inline std::string join_csv(const std::vector<Rational>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += values[i].to_string();
    }
    return line;
}

inline std::string index_header(std::size_t count) {
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) line += ',';
        line += std::to_string(i);
    }
    return line;
}

struct Output {
    std::string path;  // empty = stdout

    void write(std::ostream& fallback, const std::string& text) const {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + path);
        f << text;
    }
};

inline std::map<std::string, long long> family_params(const std::optional<long long>& r,
                                                      const std::optional<long long>& k) {
    std::map<std::string, long long> params;
    if (r) params["r"] = *r;
    if (k) params["k"] = *k;
    return params;
}

inline SymmetricTableau tableau_from_flags(const std::string& preset, const std::string& seed_file,
                                           std::size_t need_row, std::size_t need_col) {
    if (!seed_file.empty()) {
        std::ifstream f(seed_file);
        if (!f) throw std::invalid_argument("cannot open seed file: " + seed_file);
        Json doc = Json::parse(f);
        return SymmetricTableau(seed_pair_from_json(doc, need_row, need_col));
    }
    return preset_tableau(preset);
}

inline Series series_by_name(const std::string& id, const std::optional<long long>& k,
                             const std::optional<long long>& r, const std::optional<long long>& n,
                             const std::string& family, const std::string& preset,
                             const std::string& seed_file, std::size_t order) {
    auto need = [&id](const std::optional<long long>& v, const char* flag) {
        if (!v) {
            throw std::invalid_argument("series " + id + " requires --" + flag);
        }
        return *v;
    };
    if (id == "fib-subseq") return fib_subseq_gf(need(k, "k"), r.value_or(0), order);
    if (id == "lucas-subseq") return lucas_subseq_gf(need(k, "k"), r.value_or(0), order);
    if (id == "incomplete-fib") return incomplete_fib_gf(need(k, "k"), order);
    if (id == "incomplete-lucas") return incomplete_lucas_gf(need(k, "k"), order);
    if (id == "hyperfib") {
        Polynomial den = Polynomial{1, -1, -1} *
                         pow(Polynomial{1, -1}, static_cast<unsigned>(need(r, "r")));
        return expand(Polynomial{0, 1}, den, order);
    }
    if (id == "hyperlucas") {
        Polynomial den = Polynomial{1, -1, -1} *
                         pow(Polynomial{1, -1}, static_cast<unsigned>(need(r, "r")));
        return expand(Polynomial{2, -1}, den, order);
    }
    if (id == "hyperharmonic") {
        return log_one_minus_t_neg(order) *
               expand(Polynomial{1}, pow(Polynomial{1, -1}, static_cast<unsigned>(need(r, "r"))),
                      order);
    }
    if (id == "sym-row") {
        long long row = need(k, "k");
        auto t = tableau_from_flags(preset, seed_file, order + 1,
                                    static_cast<std::size_t>(row) + 1);
        return t.row_gf(row, order);
    }
    if (id == "sym-col") {
        long long col = need(n, "n");
        auto t = tableau_from_flags(preset, seed_file, static_cast<std::size_t>(col) + 1,
                                    order + 1);
        return t.col_gf(col, order);
    }
    if (id == "es-column") {
        if (family.empty()) throw std::invalid_argument("series es-column requires --family");
        SequenceSpec spec = SequenceSpec::parse(family, family_params(r, k));
        return es_column_gf(Series(order, spec.values(static_cast<long long>(order))));
    }
    throw std::invalid_argument("unknown series id: " + id);
}

}  // namespace detail

/**
 * Run the command line against explicit streams. All configuration comes in
 * through flags; identical invocations produce byte-identical output.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tableau and integer-sequence identity toolkit"};
    app.require_subcommand(1);

    // table
    std::string table_family;
    long long table_n = 0;
    std::optional<long long> table_r, table_k;
    std::string table_format = "csv";
    bool table_header = false;
    detail::Output table_out;
    auto* table = app.add_subcommand("table", "print one sequence family row");
    table->add_option("family", table_family)->required();
    table->add_option("--n", table_n, "largest index, inclusive")->required();
    table->add_option("--r", table_r, "order for the hyper families");
    table->add_option("--k", table_k, "cutoff for the incomplete families");
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--header", table_header);
    table->add_option("--output", table_out.path);

    // series
    std::string series_id;
    long long series_order = 0;
    std::optional<long long> series_k, series_r, series_n;
    std::string series_family, series_preset = "hyperharmonic", series_seeds;
    std::string series_format = "csv";
    bool series_header = false;
    detail::Output series_out;
    auto* series = app.add_subcommand("series", "expand a generating function");
    series->add_option("id", series_id)->required();
    series->add_option("--order", series_order)->required();
    series->add_option("--k", series_k);
    series->add_option("--r", series_r);
    series->add_option("--n", series_n);
    series->add_option("--family", series_family, "seed family for es-column");
    series->add_option("--preset", series_preset, "tableau preset for sym-row / sym-col");
    series->add_option("--seeds", series_seeds, "seed JSON document for sym-row / sym-col");
    series->add_option("--format", series_format)->check(CLI::IsMember({"csv", "json"}));
    series->add_flag("--header", series_header);
    series->add_option("--output", series_out.path);

    // matrix
    std::string matrix_source;
    long long matrix_rows = 0, matrix_cols = 0;
    std::string matrix_seeds;
    std::string matrix_format = "csv";
    bool matrix_header = false;
    detail::Output matrix_out;
    auto* matrix = app.add_subcommand("matrix", "dump a symmetric-tableau rectangle");
    matrix->add_option("preset", matrix_source, "preset name (omit when using --seeds)");
    matrix->add_option("--seeds", matrix_seeds, "seed JSON document");
    matrix->add_option("--rows", matrix_rows, "largest row index k, inclusive")->required();
    matrix->add_option("--cols", matrix_cols, "largest column index n, inclusive")->required();
    matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"csv", "json"}));
    matrix->add_flag("--header", matrix_header);
    matrix->add_option("--output", matrix_out.path);

    // check
    std::string check_id = "all";
    std::string check_variant;
    long long check_order = 0;
    std::uint64_t check_seed = kDefaultRngSeed;
    std::vector<std::string> check_max;
    std::string check_format = "json";
    bool check_header = false;
    detail::Output check_out;
    auto* check = app.add_subcommand("check", "run identity checks");
    check->add_option("id", check_id, "identity id, id prefix, or 'all'");
    check->add_option("--variant", check_variant);
    check->add_option("--order", check_order, "series comparison order");
    check->add_option("--rng-seed", check_seed, "seed for randomized domains");
    check->add_option("--max", check_max, "raise a parameter bound, e.g. --max n=20")
        ->take_all();
    check->add_option("--format", check_format)->check(CLI::IsMember({"csv", "json"}));
    check->add_flag("--header", check_header);
    check->add_option("--output", check_out.path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (table->parsed()) {
            SequenceSpec spec =
                SequenceSpec::parse(table_family, detail::family_params(table_r, table_k));
            auto values = spec.values(table_n);
            std::string text;
            if (table_format == "csv") {
                if (table_header) text += detail::index_header(values.size()) + "\n";
                text += detail::join_csv(values) + "\n";
            } else {
                Json j;
                j["family"] = table_family;
                Json params = Json::object();
                for (const auto& [name, value] : spec.params) params[name] = value;
                j["params"] = std::move(params);
                j["n"] = table_n;
                Json arr = Json::array();
                for (const auto& v : values) arr.push_back(v.to_string());
                j["values"] = std::move(arr);
                text = j.dump() + "\n";
            }
            table_out.write(out, text);
            return kExitOk;
        }

        if (series->parsed()) {
            if (series_order < 0) throw std::invalid_argument("--order must be nonnegative");
            Series s = detail::series_by_name(series_id, series_k, series_r, series_n,
                                              series_family, series_preset, series_seeds,
                                              static_cast<std::size_t>(series_order));
            std::string text;
            if (series_format == "csv") {
                if (series_header) text += detail::index_header(s.coeffs().size()) + "\n";
                text += detail::join_csv(s.coeffs()) + "\n";
            } else {
                text = to_json(s).dump() + "\n";
            }
            series_out.write(out, text);
            return kExitOk;
        }

        if (matrix->parsed()) {
            if (matrix_rows < 0 || matrix_cols < 0) {
                throw std::invalid_argument("--rows and --cols must be nonnegative");
            }
            if (matrix_source.empty() && matrix_seeds.empty()) {
                throw std::invalid_argument("matrix needs a preset name or --seeds");
            }
            SymmetricTableau t = detail::tableau_from_flags(
                matrix_source, matrix_seeds, static_cast<std::size_t>(matrix_cols) + 1,
                static_cast<std::size_t>(matrix_rows) + 1);
            std::string text;
            if (matrix_format == "csv") {
                if (matrix_header) {
                    text += detail::index_header(static_cast<std::size_t>(matrix_cols) + 1) + "\n";
                }
                for (long long k = 0; k <= matrix_rows; ++k) {
                    std::vector<Rational> row;
                    for (long long n = 0; n <= matrix_cols; ++n) row.push_back(t.entry(n, k));
                    text += detail::join_csv(row) + "\n";
                }
            } else {
                Json j;
                j["rows"] = matrix_rows;
                j["cols"] = matrix_cols;
                Json entries = Json::array();
                for (long long k = 0; k <= matrix_rows; ++k) {
                    Json row = Json::array();
                    for (long long n = 0; n <= matrix_cols; ++n) {
                        row.push_back(t.entry(n, k).to_string());
                    }
                    entries.push_back(std::move(row));
                }
                j["entries"] = std::move(entries);
                text = j.dump() + "\n";
            }
            matrix_out.write(out, text);
            return kExitOk;
        }

        // check
        RunOptions opts;
        if (check_order > 0) opts.order = static_cast<std::size_t>(check_order);
        opts.rng_seed = check_seed;
        for (const auto& item : check_max) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("--max expects name=value, got: " + item);
            }
            opts.max_overrides[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        }

        std::vector<IdentityReport> reports;
        if (check_id == "all") {
            reports = run_suite("", opts);
        } else {
            bool exact = false;
            for (const auto& d : registry()) exact = exact || d.id == check_id;
            if (exact) {
                if (!check_variant.empty()) {
                    reports.push_back(run_identity(check_id, check_variant, opts));
                } else {
                    for (const auto& v : find_identity(check_id).variants) {
                        reports.push_back(run_identity(check_id, v.name, opts));
                    }
                }
            } else {
                reports = run_suite(check_id, opts);
                if (reports.empty()) throw std::invalid_argument("unknown identity: " + check_id);
            }
        }

        std::string text;
        if (check_format == "json") {
            text = to_json(reports).dump() + "\n";
        } else {
            if (check_header) text += "identity,variant,tested,failures,verdict\n";
            for (const auto& r : reports) {
                text += r.id + "," + r.variant + "," + std::to_string(r.tested) + "," +
                        std::to_string(r.failure_count) + "," + to_string(r.verdict) + "\n";
            }
        }
        check_out.write(out, text);
        return exit_code_for(reports);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace seidel::cli
