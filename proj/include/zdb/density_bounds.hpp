#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdb/constants.hpp"
#include "zdb/inputs.hpp"

// Final N(sigma,T) bounds in both forms, parameter validation, and the
// published table rows.

namespace zdb {

enum class BoundForm { log_form, power_form };

struct BoundResult {
    BoundForm form = BoundForm::power_form;
    double A = 0.0;      // scriptC1 / (2 pi d)
    double B = 0.0;      // scriptC2 / (2 pi d)
    double value = 0.0;  // the bound on N(sigma,T)
    ParameterSet params;
};

struct Violation {
    std::string condition;  // e.g. "sigma <= 1/2 + d/log H0"
    std::string source;     // the hypothesis it comes from
};

// Empty iff p satisfies every hypothesis of the final bound, including the
// computed conditions U > 1, V > 1, positive J groups, b6(kH0,mu-1) < 1.
std::vector<Violation> validate_params(const ParameterSet& p);

class validation_error : public std::runtime_error {
public:
    validation_error(std::string what, std::vector<Violation> v)
        : std::runtime_error(std::move(what)), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

// value = ((T-H) log T/(2 pi d)) log(1 + scriptC1 (log kT)^{2s}(log T)^{4(1-s)}
//         T^{(8/3)(1-s)}/(T-H)) + (scriptC2/(2 pi d)) (log T)^2.
// Throws validation_error listing the violated hypotheses when p is invalid.
BoundResult bound_log_form(const ParameterSet& p);

// value = A (log kT)^{2s} (log T)^{5-4s} T^{(8/3)(1-s)} + B (log T)^2.
BoundResult bound_power_form(const ParameterSet& p);

// Published parameter choices and reference values, one struct per row.
struct Table1Row {
    double sigma, k, mu, alpha, delta, d;
    double A, B;  // printed reference coefficients
};
struct Table2Row {
    double sigma, d;
    double inv_2pid, scriptC1, B, bound;  // printed reference columns
};

std::span<const Table1Row> table1_rows();
std::span<const Table2Row> table2_rows();

// Fixed non-row parameters behind each table: Table 1 uses H = H0 - 1 and
// eta = 0.25618; Table 2 uses k = 1, alpha = 0.324, delta = 0.300,
// eta = 0.2561, mu = 1.2453, H = H0 - 1e-6 at T = H0.
ParameterSet table1_params(const Table1Row& r);
ParameterSet table2_params(const Table2Row& r);

enum class ParamsSource { paper_fixed, optimizer };

// Computed rows in the paper's column layout.  sigma_list entries must match
// printed rows when source is paper_fixed.
std::vector<Table1Row> emit_table1(std::span<const double> sigma_list, ParamsSource source);
std::vector<Table2Row> emit_table2(std::span<const double> sigma_list, ParamsSource source);

enum class TableFormat { pretty, csv, tsv };

std::string format_table1(std::span<const Table1Row> rows, TableFormat fmt);
std::string format_table2(std::span<const Table2Row> rows, TableFormat fmt);

// Parsers for the machine formats (17 significant digit round trip).
std::vector<Table1Row> parse_table1_csv(const std::string& text, char sep = ',');
std::vector<Table2Row> parse_table2_csv(const std::string& text, char sep = ',');

}  // namespace zdb
