#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/optimal_weights.hpp"

namespace sardquad {

/// Test integrand on [0,1] with a double evaluator, an MPFR evaluator and a
/// closed-form integral (computable at any precision).
struct Integrand {
    std::string id;
    std::function<double(double)> f;
    std::function<BigFloat(const BigFloat&)> f_hp;
    std::function<BigFloat(mpfr_prec_t)> exact_integral;
};

/// Fixed corpus of 20 smooth functions: monomials poly0..poly8 plus
/// exp, expneg, sin1, cos1, sinpi, cospihalf, recip, invsq, sqrt1p, log1p, cosh.
const std::vector<Integrand>& corpus();
const Integrand* find_integrand(std::string_view id);

/// sum_beta C[beta] f(beta/N) with the weights rounded to double at the call
/// boundary (integrand noise dominates past double precision).
double integrate(const QuadratureRule& rule, const Integrand& f);

/// Same sum evaluated through the MPFR path at the given precision.
BigFloat integrate_hp(const QuadratureRule& rule, const Integrand& f, mpfr_prec_t precision);

struct ConvergenceRow {
    long grid_count;
    double error;
    double observed_order;  // NaN on the first row
};

struct ConvergenceReport {
    int m;
    std::string integrand;
    std::vector<ConvergenceRow> rows;
};

/// Absolute errors against the closed-form integral for each N, with the
/// observed order log(e_prev/e_cur) / log(N_cur/N_prev) per adjacent pair.
/// Evaluation runs through the MPFR path when precision > 53.
ConvergenceReport convergence_study(int m, const Integrand& f, const std::vector<long>& grid_counts,
                                    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

struct BaselineRow {
    std::string rule;
    double error;
};

/// Errors of the optimal rule, the trapezoid rule and Simpson's rule on the
/// same grid (Simpson requires even N).
std::vector<BaselineRow> baseline_compare(int m, const Integrand& f, long grid_count,
                                          mpfr_prec_t precision = BigFloat::kDefaultPrecision);

std::string to_csv(const ConvergenceReport& report);

}  // namespace sardquad
