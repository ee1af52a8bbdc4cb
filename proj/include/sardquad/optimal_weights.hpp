#pragma once

#include <stdexcept>
#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/euler_frobenius.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

/// Solution of the (m-1) x (m-1) boundary-layer system: the coefficients d_k
/// of the geometrically decaying corrections q_k^beta + q_k^(N-beta) that
/// deform the interior weight h near the endpoints.
struct BoundaryLayerSolution {
    int m = 1;
    long grid_count = 1;
    std::vector<BigFloat> d;  // empty for m = 1
    BigFloat condition;       // infinity-norm condition estimate of the system
};

/// Row j (1 <= j <= m-1):
///   sum_k d_k sum_{i=1}^{j} (q_k + (-1)^{i+1} q_k^{N+i}) / (q_k - 1)^{i+1} D^i0^j
///     = B_{j+1} / (j+1).
/// Solved by Gaussian elimination with full pivoting at working precision;
/// throws SingularBoundaryLayerSystem when a pivot vanishes at this
/// precision (callers retry at doubled precision).
struct SingularBoundaryLayerSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BoundaryLayerSolution solve_boundary_layer(int m, long grid_count, const RootSet& roots,
                                           mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// Closed quadrature rule on nodes beta/N, beta = 0..N.
struct QuadratureRule {
    int m = 1;
    long grid_count = 1;           // N
    Rational h;                    // 1/N
    std::vector<BigFloat> weights; // C[0..N]
    std::vector<BigFloat> d;       // boundary-layer coefficients (size m-1)
    std::vector<BigFloat> roots;   // q_1..q_{m-1}, ascending
    mpfr_prec_t precision = BigFloat::kDefaultPrecision;
};

/// Assembles the closed-form weights
///   C[0] = C[N] = h (1/2 - sum_k d_k (q_k - q_k^N) / (1 - q_k)),
///   C[beta]     = h (1 + sum_k d_k (q_k^beta + q_k^(N-beta))),  0 < beta < N,
/// mirroring the upper half so C[beta] = C[N-beta] holds bitwise.
/// Requires N >= m. On a singular boundary-layer solve, retries with doubled
/// precision up to 4096 bits before giving up.
QuadratureRule build_rule(int m, long grid_count, mpfr_prec_t precision = BigFloat::kDefaultPrecision);
QuadratureRule build_rule(int m, long grid_count, const RootSet& roots,
                          mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// Residuals |sum_beta C[beta] (h beta)^alpha - 1/(alpha+1)| for alpha = 0..m-1.
std::vector<BigFloat> validate_moments(const QuadratureRule& rule);

/// Optimality detector: with g[beta] = sum_g C[g] g_kernel(m, h(beta-g)) and
/// r[beta] = f_rhs(m, h beta) - g[beta] on beta = 0..N, returns
/// max_beta |D^m r[beta]| / h^m (divided m-th forward differences) — zero iff
/// r restricted to the grid is a polynomial of degree <= m-1, which is the
/// optimality condition. Requires N >= 2m.
BigFloat optimality_residual(const QuadratureRule& rule);

}  // namespace sardquad
