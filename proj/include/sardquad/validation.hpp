#pragma once

#include <optional>
#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/optimal_weights.hpp"
#include "sardquad/sobolev_oracle.hpp"

namespace sardquad {

/// Acceptance thresholds, pinned once for the validators, the CLI and the
/// acceptance suite.
namespace tol {
inline constexpr double kOracleDeviation = 1e-10;        // max |C - C_oracle| / h
inline constexpr double kMomentResidual = 1e-12;         // rule moments, alpha < m
inline constexpr double kOperatorMomentResidual = 1e-30; // operator moments, k <= 4m
inline constexpr double kInverseResidual = 1e-30;        // h D * G - delta
inline constexpr double kOptimalityResidual = 1e-10;     // divided m-th differences of f - g
inline constexpr double kPerturbationFloor = 1e-5;       // detector sensitivity
inline constexpr long kInverseWindow = 20;
}  // namespace tol

struct ValidationReport {
    int m = 1;
    long grid_count = 1;
    mpfr_prec_t precision_requested = BigFloat::kDefaultPrecision;
    mpfr_prec_t precision_used = BigFloat::kDefaultPrecision;
    BigFloat oracle_deviation;
    std::vector<BigFloat> moment_residuals;           // alpha = 0..m-1
    std::vector<BigFloat> operator_moment_residuals;  // k = 0..4m
    BigFloat inverse_residual;
    std::optional<BigFloat> optimality_residual;  // absent when N < 2m
    bool pass = false;
};

/// Runs every validator for (m, N): closed form vs. exact oracle, rule
/// moments, operator moments, the inverse identity on the pinned window and
/// the optimality detector (when N >= 2m). When any residual lands within a
/// factor of 10 of its tolerance, the whole battery re-runs once at doubled
/// precision to separate method error from rounding; the report carries the
/// precision actually used. `oracle` substitutes a precomputed (e.g. golden-
/// file) solution for the in-process exact solve.
ValidationReport run_validators(int m, long grid_count,
                                mpfr_prec_t precision = BigFloat::kDefaultPrecision,
                                const OracleSolution* oracle = nullptr);

}  // namespace sardquad
