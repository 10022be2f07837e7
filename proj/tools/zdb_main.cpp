// zdb: explicit zero-density bounds for the Riemann zeta function.
// Subcommands: bound, table, optimize, verify.
// Exit codes: 0 success, 1 usage/malformed input, 2 parameter validation
// failure, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdb/density_bounds.hpp"
#include "zdb/kv.hpp"
#include "zdb/optimizer.hpp"
#include "zdb/verification/checks.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

std::string resolve_output(const std::string& path) {
    // ZDB_OUTPUT_DIR supplies a default directory for bare file names.
    const char* dir = std::getenv("ZDB_OUTPUT_DIR");
    if (dir && !path.empty() && path.find('/') == std::string::npos)
        return std::string(dir) + "/" + path;
    return path;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(resolve_output(path));
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

zdb::TableFormat parse_format(const std::string& f) {
    if (f == "pretty") return zdb::TableFormat::pretty;
    if (f == "csv") return zdb::TableFormat::csv;
    if (f == "tsv") return zdb::TableFormat::tsv;
    throw CLI::ValidationError("--format must be pretty, csv or tsv");
}

struct BoundArgs {
    double sigma = 0.0;
    bool have_T = false;
    double T = 0.0;
    bool table1_defaults = false, table2_defaults = false;
    std::string params_file;
    std::vector<std::string> sets;  // name=value overrides
    std::string form = "log";
    bool show_constants = false;
};

zdb::ParameterSet assemble_params(const BoundArgs& a) {
    zdb::ParameterSet p;
    bool seeded = false;
    if (a.table1_defaults || a.table2_defaults) {
        if (a.table1_defaults) {
            for (const auto& r : zdb::table1_rows())
                if (std::fabs(r.sigma - a.sigma) < 1e-9) {
                    p = zdb::table1_params(r);
                    seeded = true;
                }
        } else {
            for (const auto& r : zdb::table2_rows())
                if (std::fabs(r.sigma - a.sigma) < 1e-9) {
                    p = zdb::table2_params(r);
                    seeded = true;
                }
        }
        if (!seeded)
            throw CLI::ValidationError("sigma is not a published table row; "
                                       "pass explicit parameters instead");
    }
    p.sigma = a.sigma;
    if (!a.params_file.empty()) {
        std::ifstream is(a.params_file);
        if (!is) throw std::runtime_error("cannot open params file: " + a.params_file);
        std::string text((std::istreambuf_iterator<char>(is)),
                         std::istreambuf_iterator<char>());
        zdb::apply_params(p, zdb::parse_key_values(text));
    }
    for (const auto& kv : a.sets) zdb::apply_params(p, zdb::parse_key_values(kv));
    if (a.have_T) p.T = a.T;
    return p;
}

std::string bound_to_text(const zdb::BoundResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "form = %s\nA = %.17g\nB = %.17g\nvalue = %.17g\n",
                  r.form == zdb::BoundForm::log_form ? "log" : "power", r.A, r.B,
                  r.value);
    return buf;
}

int cmd_bound(const BoundArgs& a, const std::string& out_path) {
    zdb::ParameterSet p = assemble_params(a);
    const auto violations = zdb::validate_params(p);
    if (!violations.empty()) {
        std::cerr << "parameter validation failed:\n";
        for (const auto& v : violations)
            std::cerr << "  " << v.condition << "  (" << v.source << ")\n";
        return kExitValidation;
    }
    const zdb::BoundResult r = a.form == "power" ? zdb::bound_power_form(p)
                                                 : zdb::bound_log_form(p);
    std::string text = zdb::params_to_key_value(p) + bound_to_text(r);
    if (p.delta < 1.0)
        text += "# note: delta < 1; admissible here, outside the headline "
                "statement's range\n";
    if (a.show_constants) text += zdb::to_key_value(zdb::eval_constant_bundle(p));
    write_out(out_path, text);
    return kExitOk;
}

int run_verify(const std::string& lemma, std::int64_t X, double tau, double delta,
               unsigned seed, const std::string& out_path, bool csv) {
    using namespace zdb;
    std::vector<LemmaReport> reports;
    auto add = [&reports](const LemmaReport& r) { reports.push_back(r); };
    if (lemma == "mobius") {
        const auto [r1, r2] = check_mobius_sums(X > 0 ? X : 1700);
        add(r1);
        add(r2);
    } else if (lemma == "lambda") {
        for (const auto& r : check_lambda_sums(X > 0 ? X : 1000, delta, 10'000'000))
            add(r);
    } else if (lemma == "divisor") {
        const auto [r1, r2] = check_divisor_sums(X > 0 ? X : 47, tau);
        add(r1);
        add(r2);
    } else if (lemma == "mv") {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> u(50);
        for (double& x : u) x = dist(rng);
        add(check_mv_inequality(u, 0.0, 500.0));
    } else if (lemma == "zeta") {
        const double ts[] = {3.0, 10.0, 100.0, 1000.0};
        for (const auto& r : check_zeta_bounds(ts, 0.3)) add(r);
    } else if (lemma == "weight") {
        std::vector<double> ts;
        for (int i = 0; i <= 99; ++i) ts.push_back(1.0 + i * 101.0);
        for (const auto& r : check_weight_bounds(0.5, 1e4, 0.105, 1002.0, ts))
            add(r);
    } else if (lemma == "moment") {
        const auto [c, s] = check_smoothing_and_convexity(
            X > 0 ? X : 10, 50.0, 0.5, 0.75, 1.1, 0.3);
        add(c);
        add(s);
    } else {
        std::cerr << "unknown lemma '" << lemma
                  << "' (mobius, lambda, divisor, mv, zeta, weight, moment)\n";
        return kExitUsage;
    }
    write_out(out_path, format_reports(reports, csv));
    bool ok = true;
    for (const auto& r : reports)
        if (r.in_hypothesis() && !r.pass) ok = false;
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit zero-density bounds for the Riemann zeta function"};
    app.require_subcommand(1);

    BoundArgs ba;
    std::string out_path, format = "pretty";

    auto* bound = app.add_subcommand("bound", "evaluate one N(sigma,T) bound");
    bound->add_option("--sigma", ba.sigma, "abscissa in (1/2, 1)")->required();
    auto* topt = bound->add_option("--T", ba.T, "height T >= H0");
    bound->add_flag("--table1-defaults", ba.table1_defaults,
                    "seed parameters from the published table-1 row at sigma");
    bound->add_flag("--table2-defaults", ba.table2_defaults,
                    "seed parameters from the published table-2 row at sigma");
    bound->add_option("--params-file", ba.params_file,
                      "key-value file (name = value, '#' comments)");
    bound->add_option("--set", ba.sets, "inline override, e.g. --set 'alpha = 0.1'");
    bound->add_option("--form", ba.form, "log | power")
        ->check(CLI::IsMember({"log", "power"}));
    bound->add_flag("--show-constants", ba.show_constants,
                    "append the full constant bundle");
    bound->add_option("--output", out_path, "write to file instead of stdout");

    std::string table_source = "paper";
    int table_which = 1;
    double table_sigma = 0.0;
    auto* table = app.add_subcommand("table", "regenerate a published table");
    table->add_option("--which", table_which, "1 or 2")->check(CLI::Range(1, 2));
    table->add_option("--source", table_source, "paper | optimizer")
        ->check(CLI::IsMember({"paper", "optimizer"}));
    table->add_option("--sigma", table_sigma, "single row (default: all rows)");
    table->add_option("--format", format, "pretty | csv | tsv");
    table->add_option("--output", out_path, "write to file instead of stdout");

    double opt_sigma = 0.0;
    std::string opt_mode = "table1";
    std::string grid_file;
    auto* optimize = app.add_subcommand("optimize", "search for the best parameters");
    optimize->add_option("--sigma", opt_sigma, "abscissa in (1/2, 1)")->required();
    optimize->add_option("--mode", opt_mode, "table1 (min A) | table2 (min bound)")
        ->check(CLI::IsMember({"table1", "table2"}));
    optimize->add_option("--grid-file", grid_file,
                         "key-value grid overrides (grid_k, grid_alpha, ...)");
    optimize->add_option("--output", out_path, "write to file instead of stdout");

    std::string lemma;
    std::int64_t verify_X = 0;
    double verify_tau = 2.0, verify_delta = 0.303;
    unsigned verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run a lemma oracle");
    verify->add_option("--lemma", lemma,
                       "mobius | lambda | divisor | mv | zeta | weight | moment")
        ->required();
    verify->add_option("--X", verify_X, "instance size");
    verify->add_option("--tau", verify_tau, "exponent for divisor sums");
    verify->add_option("--delta", verify_delta, "delta for lambda sums");
    verify->add_option("--seed", verify_seed, "seed for random instances");
    verify->add_option("--format", format, "pretty | csv | tsv");
    verify->add_option("--output", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) {
            ba.have_T = topt->count() > 0;
            return cmd_bound(ba, out_path);
        }
        if (table->parsed()) {
            const auto src = table_source == "paper" ? zdb::ParamsSource::paper_fixed
                                                     : zdb::ParamsSource::optimizer;
            std::vector<double> sigmas;
            if (table_sigma > 0.0) {
                sigmas.push_back(table_sigma);
            } else if (table_which == 1) {
                for (const auto& r : zdb::table1_rows()) sigmas.push_back(r.sigma);
            } else {
                for (const auto& r : zdb::table2_rows()) sigmas.push_back(r.sigma);
            }
            const auto fmt = parse_format(format);
            write_out(out_path, table_which == 1
                                    ? zdb::format_table1(zdb::emit_table1(sigmas, src), fmt)
                                    : zdb::format_table2(zdb::emit_table2(sigmas, src), fmt));
            return kExitOk;
        }
        if (optimize->parsed()) {
            zdb::SearchConfig cfg;
            cfg.objective = opt_mode == "table1" ? zdb::Objective::min_A
                                                 : zdb::Objective::min_bound_at_H0;
            if (!grid_file.empty()) {
                std::ifstream is(grid_file);
                if (!is) throw std::runtime_error("cannot open grid file: " + grid_file);
                std::string text((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
                for (const auto& [key, val] : zdb::parse_key_values(text)) {
                    if (key == "grid_k") cfg.grid_k = int(val);
                    else if (key == "grid_alpha") cfg.grid_alpha = int(val);
                    else if (key == "grid_delta") cfg.grid_delta = int(val);
                    else if (key == "grid_d") cfg.grid_d = int(val);
                    else if (key == "refine_rounds") cfg.refine_rounds = int(val);
                    else if (key == "max_evals") cfg.max_evals = long(val);
                    else throw std::invalid_argument("unknown grid key '" + key + "'");
                }
            }
            const zdb::MinimizeResult r = zdb::minimize(opt_sigma, cfg);
            write_out(out_path, zdb::params_to_key_value(r.params) +
                                    bound_to_text(r.bound));
            return kExitOk;
        }
        if (verify->parsed())
            return run_verify(lemma, verify_X, verify_tau, verify_delta, verify_seed,
                              out_path, format == "csv");
    } catch (const zdb::validation_error& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
