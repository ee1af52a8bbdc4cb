#include "sardquad/optimal_weights.hpp"

#include <stdexcept>
#include <utility>

#include "sardquad/combinatorics.hpp"
#include "sardquad/discrete_operator.hpp"

namespace sardquad {

namespace {

// Dense Gaussian elimination with full pivoting. Solves A x = rhs for one or
// more right-hand sides; throws SingularBoundaryLayerSystem on a zero pivot.
std::vector<std::vector<BigFloat>> solve_full_pivot(std::vector<std::vector<BigFloat>> a,
                                                    std::vector<std::vector<BigFloat>> rhs,
                                                    mpfr_prec_t precision) {
    const int n = static_cast<int>(a.size());
    const int nrhs = static_cast<int>(rhs.size());
    std::vector<int> col_of(static_cast<size_t>(n));  // permutation of unknowns
    for (int i = 0; i < n; ++i) col_of[static_cast<size_t>(i)] = i;

    for (int step = 0; step < n; ++step) {
        int pr = step, pc = step;
        BigFloat best = abs(a[static_cast<size_t>(step)][static_cast<size_t>(step)]);
        for (int r = step; r < n; ++r)
            for (int c = step; c < n; ++c) {
                BigFloat v = abs(a[static_cast<size_t>(r)][static_cast<size_t>(c)]);
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (best.is_zero()) throw SingularBoundaryLayerSystem("boundary-layer system is singular at this precision");
        std::swap(a[static_cast<size_t>(step)], a[static_cast<size_t>(pr)]);
        for (int s = 0; s < nrhs; ++s)
            std::swap(rhs[static_cast<size_t>(s)][static_cast<size_t>(step)], rhs[static_cast<size_t>(s)][static_cast<size_t>(pr)]);
        if (pc != step) {
            for (int r = 0; r < n; ++r) std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(step)], a[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
            std::swap(col_of[static_cast<size_t>(step)], col_of[static_cast<size_t>(pc)]);
        }
        for (int r = step + 1; r < n; ++r) {
            BigFloat factor = a[static_cast<size_t>(r)][static_cast<size_t>(step)] / a[static_cast<size_t>(step)][static_cast<size_t>(step)];
            for (int c = step; c < n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * a[static_cast<size_t>(step)][static_cast<size_t>(c)];
            for (int s = 0; s < nrhs; ++s)
                rhs[static_cast<size_t>(s)][static_cast<size_t>(r)] -= factor * rhs[static_cast<size_t>(s)][static_cast<size_t>(step)];
        }
    }

    std::vector<std::vector<BigFloat>> solutions(static_cast<size_t>(nrhs),
                                                 std::vector<BigFloat>(static_cast<size_t>(n), BigFloat(0L, precision)));
    for (int s = 0; s < nrhs; ++s) {
        std::vector<BigFloat> y(static_cast<size_t>(n), BigFloat(0L, precision));
        for (int r = n - 1; r >= 0; --r) {
            BigFloat acc = rhs[static_cast<size_t>(s)][static_cast<size_t>(r)];
            for (int c = r + 1; c < n; ++c) acc -= a[static_cast<size_t>(r)][static_cast<size_t>(c)] * y[static_cast<size_t>(c)];
            y[static_cast<size_t>(r)] = acc / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
        }
        for (int r = 0; r < n; ++r) solutions[static_cast<size_t>(s)][static_cast<size_t>(col_of[static_cast<size_t>(r)])] = y[static_cast<size_t>(r)];
    }
    return solutions;
}

BigFloat inf_norm(const std::vector<std::vector<BigFloat>>& a, mpfr_prec_t precision) {
    BigFloat best(0L, precision);
    for (const auto& row : a) {
        BigFloat s(0L, precision);
        for (const auto& v : row) s += abs(v);
        if (s > best) best = s;
    }
    return best;
}

}  // namespace

BoundaryLayerSolution solve_boundary_layer(int m, long grid_count, const RootSet& roots, mpfr_prec_t precision) {
    if (m < 1) throw std::invalid_argument("solve_boundary_layer: m must be >= 1");
    if (grid_count < m) throw std::invalid_argument("solve_boundary_layer: N must be >= m");
    if (roots.m() != m) throw std::invalid_argument("solve_boundary_layer: root set does not match m");

    BoundaryLayerSolution out;
    out.m = m;
    out.grid_count = grid_count;
    out.condition = BigFloat(1L, precision);
    if (m == 1) return out;

    const int n = m - 1;
    const FiniteDifferenceTable deltas(n, n);
    const BernoulliTable bernoullis(m);

    std::vector<std::vector<BigFloat>> a(static_cast<size_t>(n),
                                         std::vector<BigFloat>(static_cast<size_t>(n), BigFloat(0L, precision)));
    std::vector<BigFloat> b(static_cast<size_t>(n), BigFloat(0L, precision));

    for (int j = 1; j <= n; ++j) {
        for (int k = 0; k < n; ++k) {
            const BigFloat q = roots.value(k).round_to(precision);
            BigFloat entry(0L, precision);
            for (int i = 1; i <= j; ++i) {
                BigFloat numer = pow_ui(q, static_cast<unsigned long>(grid_count + i));
                if (i % 2 == 0) numer = -numer;  // (-1)^{i+1} q^{N+i}
                numer = q + numer;
                BigFloat denom = pow_ui(q - 1L, static_cast<unsigned long>(i) + 1);
                entry += (numer / denom) * Rational(deltas.value(i, j));
            }
            a[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] = entry;
        }
        b[static_cast<size_t>(j - 1)] = BigFloat(bernoullis.value(j + 1) / Rational(j + 1), precision);
    }

    // solve for d and, column by column, for the inverse (condition estimate)
    std::vector<std::vector<BigFloat>> rhs;
    rhs.push_back(b);
    for (int c = 0; c < n; ++c) {
        std::vector<BigFloat> unit(static_cast<size_t>(n), BigFloat(0L, precision));
        unit[static_cast<size_t>(c)] = BigFloat(1L, precision);
        rhs.push_back(std::move(unit));
    }
    auto solutions = solve_full_pivot(a, std::move(rhs), precision);

    out.d = std::move(solutions[0]);
    std::vector<std::vector<BigFloat>> inverse(static_cast<size_t>(n),
                                               std::vector<BigFloat>(static_cast<size_t>(n), BigFloat(0L, precision)));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) inverse[static_cast<size_t>(r)][static_cast<size_t>(c)] = solutions[static_cast<size_t>(c + 1)][static_cast<size_t>(r)];
    out.condition = inf_norm(a, precision) * inf_norm(inverse, precision);
    return out;
}

QuadratureRule build_rule(int m, long grid_count, mpfr_prec_t precision) {
    mpfr_prec_t prec = precision;
    const mpfr_prec_t cap = std::max<mpfr_prec_t>(4096, precision);
    while (true) {
        try {
            RootSet roots = isolate_roots(m, prec);
            return build_rule(m, grid_count, roots, prec);
        } catch (const SingularBoundaryLayerSystem&) {
            if (prec >= cap) throw;
            prec = std::min<mpfr_prec_t>(prec * 2, cap);
        }
    }
}

QuadratureRule build_rule(int m, long grid_count, const RootSet& roots, mpfr_prec_t precision) {
    if (m < 1) throw std::invalid_argument("build_rule: m must be >= 1");
    if (grid_count < m) throw std::invalid_argument("build_rule: N must be >= m");

    const BoundaryLayerSolution layer = solve_boundary_layer(m, grid_count, roots, precision);
    const long n_count = grid_count;

    QuadratureRule rule;
    rule.m = m;
    rule.grid_count = n_count;
    rule.h = rational(1, n_count);
    rule.precision = precision;
    rule.d = layer.d;
    for (int k = 0; k < roots.size(); ++k) rule.roots.push_back(roots.value(k).round_to(precision));

    const BigFloat h(rule.h, precision);
    const int nroots = m - 1;

    std::vector<std::vector<BigFloat>> q_pow(static_cast<size_t>(nroots));
    for (int k = 0; k < nroots; ++k) {
        q_pow[static_cast<size_t>(k)].reserve(static_cast<size_t>(n_count) + 1);
        for (long beta = 0; beta <= n_count; ++beta)
            q_pow[static_cast<size_t>(k)].push_back(pow_ui(rule.roots[static_cast<size_t>(k)], static_cast<unsigned long>(beta)));
    }

    rule.weights.assign(static_cast<size_t>(n_count) + 1, BigFloat(0L, precision));

    // endpoints: h (1/2 - sum_k d_k (q_k - q_k^N) / (1 - q_k))
    BigFloat end_sum(0L, precision);
    for (int k = 0; k < nroots; ++k) {
        const BigFloat& q = rule.roots[static_cast<size_t>(k)];
        end_sum += rule.d[static_cast<size_t>(k)] * ((q - q_pow[static_cast<size_t>(k)][static_cast<size_t>(n_count)]) / (1L - q));
    }
    BigFloat endpoint = h * (BigFloat(rational(1, 2), precision) - end_sum);
    rule.weights.front() = endpoint;
    rule.weights.back() = endpoint;

    // interior, mirrored so symmetry is structural
    for (long beta = 1; beta * 2 <= n_count; ++beta) {
        BigFloat s(0L, precision);
        for (int k = 0; k < nroots; ++k)
            s += rule.d[static_cast<size_t>(k)] *
                 (q_pow[static_cast<size_t>(k)][static_cast<size_t>(beta)] + q_pow[static_cast<size_t>(k)][static_cast<size_t>(n_count - beta)]);
        BigFloat w = h * (s + 1L);
        rule.weights[static_cast<size_t>(beta)] = w;
        rule.weights[static_cast<size_t>(n_count - beta)] = w;
    }
    return rule;
}

std::vector<BigFloat> validate_moments(const QuadratureRule& rule) {
    std::vector<BigFloat> residuals;
    residuals.reserve(static_cast<size_t>(rule.m));
    for (int alpha = 0; alpha < rule.m; ++alpha) {
        BigFloat acc(0L, rule.precision);
        for (long beta = 0; beta <= rule.grid_count; ++beta) {
            const Rational x = rule.h * rational(beta);
            const Rational xa = (alpha == 0) ? Rational(1) : rational_pow(x, static_cast<unsigned long>(alpha));
            acc += rule.weights[static_cast<size_t>(beta)] * xa;
        }
        residuals.push_back(abs(acc - rational(1, alpha + 1)));
    }
    return residuals;
}

BigFloat optimality_residual(const QuadratureRule& rule) {
    const int m = rule.m;
    const long n_count = rule.grid_count;
    if (n_count < 2 * m) throw std::invalid_argument("optimality_residual: requires N >= 2m");

    const mpfr_prec_t prec = rule.precision;
    std::vector<BigFloat> r;
    r.reserve(static_cast<size_t>(n_count) + 1);
    for (long beta = 0; beta <= n_count; ++beta) {
        BigFloat g(0L, prec);
        for (long gamma = 0; gamma <= n_count; ++gamma)
            g += rule.weights[static_cast<size_t>(gamma)] * g_kernel(m, rule.h * rational(beta - gamma));
        r.push_back(BigFloat(f_rhs(m, rule.h * rational(beta)), prec) - g);
    }

    // divided m-th forward differences
    for (int pass = 0; pass < m; ++pass)
        for (size_t i = 0; i + 1 < r.size() - static_cast<size_t>(pass); ++i) r[i] = r[i + 1] - r[i];
    r.resize(r.size() - static_cast<size_t>(m));

    const Rational h_pow_m = rational_pow(rule.h, static_cast<unsigned long>(m));
    BigFloat worst(0L, prec);
    for (const auto& v : r) {
        BigFloat scaled = abs(v) / h_pow_m;
        if (scaled > worst) worst = scaled;
    }
    return worst;
}

}  // namespace sardquad
