#include "sardquad/sobolev_oracle.hpp"

#include <stdexcept>

#include "sardquad/combinatorics.hpp"
#include "sardquad/discrete_operator.hpp"

namespace sardquad {

namespace {

// Fraction-free (Bareiss) elimination on an integer augmented matrix.
// Entries stay exact divisors of minors, so every division below is exact.
void bareiss_eliminate(std::vector<std::vector<Int>>& a) {
    const size_t rows = a.size();
    const size_t cols = a.front().size();
    Int prev_pivot(1);
    for (size_t k = 0; k + 1 < rows; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < rows && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == rows) throw std::logic_error("sobolev oracle: zero pivot column (assembly bug)");
            std::swap(a[k], a[swap_row]);
        }
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j < cols; ++j) {
                Int num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    if (a[rows - 1][rows - 1] == 0) throw std::logic_error("sobolev oracle: singular system (assembly bug)");
}

}  // namespace

OracleSolution solve_sobolev_system(int m, long grid_count) {
    if (m < 1) throw std::invalid_argument("solve_sobolev_system: m must be >= 1");
    if (grid_count < m) throw std::invalid_argument("solve_sobolev_system: N must be >= m");

    const long n_count = grid_count;
    const size_t dim = static_cast<size_t>(n_count) + 1 + static_cast<size_t>(m);
    const Rational h = rational(1, n_count);

    // Rational form, kept for the substitution check.
    std::vector<std::vector<Rational>> sys(dim, std::vector<Rational>(dim + 1, Rational(0)));
    for (long beta = 0; beta <= n_count; ++beta) {
        auto& row = sys[static_cast<size_t>(beta)];
        for (long gamma = 0; gamma <= n_count; ++gamma)
            row[static_cast<size_t>(gamma)] = g_kernel(m, h * rational(beta - gamma));
        for (int alpha = 0; alpha < m; ++alpha)
            row[static_cast<size_t>(n_count) + 1 + static_cast<size_t>(alpha)] =
                (alpha == 0) ? Rational(1) : rational_pow(h * rational(beta), static_cast<unsigned long>(alpha));
        row[dim] = f_rhs(m, h * rational(beta));
    }
    for (int alpha = 0; alpha < m; ++alpha) {
        auto& row = sys[static_cast<size_t>(n_count) + 1 + static_cast<size_t>(alpha)];
        for (long gamma = 0; gamma <= n_count; ++gamma)
            row[static_cast<size_t>(gamma)] =
                (alpha == 0) ? Rational(1) : rational_pow(h * rational(gamma), static_cast<unsigned long>(alpha));
        row[dim] = rational(1, alpha + 1);
    }

    // Integer form: scale each row by the lcm of its denominators.
    std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim + 1));
    for (size_t r = 0; r < dim; ++r) {
        Int lcm(1);
        for (const auto& v : sys[r]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (size_t c = 0; c <= dim; ++c) {
            Rational scaled = sys[r][c] * Rational(lcm);
            if (scaled.get_den() != 1) throw std::logic_error("sobolev oracle: row scaling failed");
            a[r][c] = scaled.get_num();
        }
    }

    bareiss_eliminate(a);

    // Exact back-substitution in rationals.
    std::vector<Rational> x(dim, Rational(0));
    for (size_t r = dim; r-- > 0;) {
        Rational acc(a[r][dim]);
        for (size_t c = r + 1; c < dim; ++c) acc -= Rational(a[r][c]) * x[c];
        x[r] = acc / Rational(a[r][r]);
    }

    // Substitution check against the rational system: exact equality.
    for (size_t r = 0; r < dim; ++r) {
        Rational acc(0);
        for (size_t c = 0; c < dim; ++c) acc += sys[r][c] * x[c];
        if (acc != sys[r][dim]) throw std::logic_error("sobolev oracle: substitution check failed");
    }

    OracleSolution out;
    out.m = m;
    out.grid_count = n_count;
    out.weights.assign(x.begin(), x.begin() + n_count + 1);
    out.multipliers.assign(x.begin() + n_count + 1, x.end());
    return out;
}

BigFloat compare(const QuadratureRule& rule, const OracleSolution& oracle) {
    if (rule.m != oracle.m || rule.grid_count != oracle.grid_count)
        throw std::invalid_argument("compare: rule and oracle have different (m, N)");
    const mpfr_prec_t prec = rule.precision;
    BigFloat worst(0L, prec);
    for (size_t beta = 0; beta < rule.weights.size(); ++beta) {
        BigFloat dev = abs(rule.weights[beta] - oracle.weights[beta]);
        if (dev > worst) worst = dev;
    }
    return worst * rational(rule.grid_count);  // divide by h
}

}  // namespace sardquad
