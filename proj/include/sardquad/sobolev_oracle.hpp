#pragma once

#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/optimal_weights.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

/// Exact-rational solution of the defining (N+1+m) x (N+1+m) linear system:
/// one kernel row per node plus m moment rows, unknowns C[0..N] and the
/// polynomial multipliers. Bit-for-bit reproducible ground truth for the
/// closed-form weights.
struct OracleSolution {
    int m = 1;
    long grid_count = 1;
    std::vector<Rational> weights;      // C[0..N]
    std::vector<Rational> multipliers;  // lambda_0..lambda_{m-1}
};

/// Assembles the system with exact rational entries, clears denominators row
/// by row, runs fraction-free (Bareiss) elimination over the integers and
/// back-substitutes exactly. The returned solution is verified by
/// substitution into the original rational system before it is returned;
/// a zero pivot column signals an assembly bug (std::logic_error).
OracleSolution solve_sobolev_system(int m, long grid_count);

/// max_beta |C[beta] - C_oracle[beta]| / h.
BigFloat compare(const QuadratureRule& rule, const OracleSolution& oracle);

}  // namespace sardquad
