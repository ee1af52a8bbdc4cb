#pragma once

#include <string>

#include "sardquad/optimal_weights.hpp"
#include "sardquad/quadrature_engine.hpp"
#include "sardquad/sobolev_oracle.hpp"
#include "sardquad/validation.hpp"

namespace sardquad {

/// Fixed-significant-digit decimal serialization; byte-identical across runs
/// and platforms, no locale involvement.
std::string to_decimal_string(const BigFloat& x, int significant_digits = 40);

/// {"m":…, "N":…, "h":"1/N", "weights":[…], "d":[…], "roots":[…]} with
/// 40-significant-digit decimal strings.
std::string rule_to_json(const QuadratureRule& rule);

/// Weight table as CSV: header "beta,weight".
std::string rule_to_csv(const QuadratureRule& rule);

/// Validation report as JSON (residuals as 40-digit decimal strings,
/// optimality_residual null when N < 2m).
std::string report_to_json(const ValidationReport& report);

/// Exact golden-file schema: weights and multipliers as "num/den" strings.
std::string oracle_to_json(const OracleSolution& oracle);
OracleSolution oracle_from_json(const std::string& text);
OracleSolution read_golden_file(const std::string& path);
void write_golden_file(const std::string& path, const OracleSolution& oracle);

/// Operator diagnostics JSON for the CLI `operator` subcommand.
std::string operator_report_to_json(int m, long grid_count, mpfr_prec_t precision, long window);

/// Writes via a temp file in the same directory followed by a rename.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace sardquad
