#include "sardquad/quadrature_engine.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace sardquad {

namespace {

Integrand monomial(int k) {
    Integrand f;
    f.id = "poly" + std::to_string(k);
    f.f = [k](double x) { return k == 0 ? 1.0 : std::pow(x, k); };
    f.f_hp = [k](const BigFloat& x) { return k == 0 ? BigFloat(1L, x.precision()) : pow_ui(x, static_cast<unsigned long>(k)); };
    f.exact_integral = [k](mpfr_prec_t prec) { return BigFloat(rational(1, k + 1), prec); };
    return f;
}

std::vector<Integrand> build_corpus() {
    std::vector<Integrand> c;
    for (int k = 0; k <= 8; ++k) c.push_back(monomial(k));

    c.push_back({"exp", [](double x) { return std::exp(x); },
                 [](const BigFloat& x) { return exp(x); },
                 [](mpfr_prec_t p) { return exp(BigFloat(1L, p)) - 1L; }});
    c.push_back({"expneg", [](double x) { return std::exp(-x); },
                 [](const BigFloat& x) { return exp(-x); },
                 [](mpfr_prec_t p) { return 1L - exp(BigFloat(-1L, p)); }});
    c.push_back({"sin1", [](double x) { return std::sin(x); },
                 [](const BigFloat& x) { return sin(x); },
                 [](mpfr_prec_t p) { return 1L - cos(BigFloat(1L, p)); }});
    c.push_back({"cos1", [](double x) { return std::cos(x); },
                 [](const BigFloat& x) { return cos(x); },
                 [](mpfr_prec_t p) { return sin(BigFloat(1L, p)); }});
    c.push_back({"sinpi", [](double x) { return std::sin(M_PI * x); },
                 [](const BigFloat& x) { return sin(BigFloat::pi(x.precision()) * x); },
                 [](mpfr_prec_t p) { return BigFloat(2L, p) / BigFloat::pi(p); }});
    c.push_back({"cospihalf", [](double x) { return std::cos(M_PI * x / 2.0); },
                 [](const BigFloat& x) { return cos(BigFloat::pi(x.precision()) * x / 2L); },
                 [](mpfr_prec_t p) { return BigFloat(2L, p) / BigFloat::pi(p); }});
    c.push_back({"recip", [](double x) { return 1.0 / (1.0 + x); },
                 [](const BigFloat& x) { return BigFloat(1L, x.precision()) / (x + 1L); },
                 [](mpfr_prec_t p) { return log(BigFloat(2L, p)); }});
    c.push_back({"invsq", [](double x) { return 1.0 / (1.0 + x * x); },
                 [](const BigFloat& x) { return BigFloat(1L, x.precision()) / (x * x + 1L); },
                 [](mpfr_prec_t p) { return BigFloat::pi(p) / 4L; }});
    c.push_back({"sqrt1p", [](double x) { return std::sqrt(1.0 + x); },
                 [](const BigFloat& x) { return sqrt(x + 1L); },
                 [](mpfr_prec_t p) { return (4L * sqrt(BigFloat(2L, p)) - 2L) / 3L; }});
    c.push_back({"log1p", [](double x) { return std::log(1.0 + x); },
                 [](const BigFloat& x) { return log(x + 1L); },
                 [](mpfr_prec_t p) { return 2L * log(BigFloat(2L, p)) - 1L; }});
    c.push_back({"cosh", [](double x) { return std::cosh(x); },
                 [](const BigFloat& x) { return cosh(x); },
                 [](mpfr_prec_t p) { return sinh(BigFloat(1L, p)); }});
    return c;
}

double integrate_weights(const std::vector<double>& weights, long n_count, const Integrand& f) {
    double acc = 0.0;
    for (long beta = 0; beta <= n_count; ++beta)
        acc += weights[static_cast<size_t>(beta)] * f.f(static_cast<double>(beta) / static_cast<double>(n_count));
    return acc;
}

double error_hp(const QuadratureRule& rule, const Integrand& f, mpfr_prec_t precision) {
    if (precision > 53 && f.f_hp && f.exact_integral) {
        BigFloat approx = integrate_hp(rule, f, precision);
        return abs(approx - f.exact_integral(precision)).to_double();
    }
    double approx = integrate(rule, f);
    double exact = f.exact_integral(64).to_double();
    return std::fabs(approx - exact);
}

}  // namespace

const std::vector<Integrand>& corpus() {
    static const std::vector<Integrand> c = build_corpus();
    return c;
}

const Integrand* find_integrand(std::string_view id) {
    for (const auto& f : corpus())
        if (f.id == id) return &f;
    return nullptr;
}

double integrate(const QuadratureRule& rule, const Integrand& f) {
    double acc = 0.0;
    const long n_count = rule.grid_count;
    for (long beta = 0; beta <= n_count; ++beta)
        acc += rule.weights[static_cast<size_t>(beta)].to_double() *
               f.f(static_cast<double>(beta) / static_cast<double>(n_count));
    return acc;
}

BigFloat integrate_hp(const QuadratureRule& rule, const Integrand& f, mpfr_prec_t precision) {
    if (!f.f_hp) throw std::invalid_argument("integrate_hp: integrand '" + f.id + "' lacks a high-precision evaluator");
    BigFloat acc(0L, precision);
    for (long beta = 0; beta <= rule.grid_count; ++beta) {
        BigFloat x(rule.h * rational(beta), precision);
        acc += rule.weights[static_cast<size_t>(beta)].round_to(precision) * f.f_hp(x);
    }
    return acc;
}

ConvergenceReport convergence_study(int m, const Integrand& f, const std::vector<long>& grid_counts,
                                    mpfr_prec_t precision) {
    if (!f.exact_integral) throw std::invalid_argument("convergence_study: integrand lacks a reference integral");
    for (size_t i = 0; i < grid_counts.size(); ++i) {
        if (grid_counts[i] < std::max<long>(m, 2))
            throw std::invalid_argument("convergence_study: every N must be >= max(m, 2)");
        if (i > 0 && grid_counts[i] <= grid_counts[i - 1])
            throw std::invalid_argument("convergence_study: N values must be strictly increasing");
    }

    ConvergenceReport report;
    report.m = m;
    report.integrand = f.id;
    double prev_error = 0.0;
    for (size_t i = 0; i < grid_counts.size(); ++i) {
        const long n_count = grid_counts[i];
        QuadratureRule rule = build_rule(m, n_count, precision);
        double err = error_hp(rule, f, precision);
        double order = std::numeric_limits<double>::quiet_NaN();
        if (i > 0 && err > 0.0 && prev_error > 0.0)
            order = std::log(prev_error / err) /
                    std::log(static_cast<double>(n_count) / static_cast<double>(grid_counts[i - 1]));
        report.rows.push_back({n_count, err, order});
        prev_error = err;
    }
    return report;
}

std::vector<BaselineRow> baseline_compare(int m, const Integrand& f, long grid_count, mpfr_prec_t precision) {
    if (grid_count % 2 != 0) throw std::invalid_argument("baseline_compare: Simpson's rule needs even N");
    if (!f.exact_integral) throw std::invalid_argument("baseline_compare: integrand lacks a reference integral");

    const double exact = f.exact_integral(std::max<mpfr_prec_t>(precision, 64)).to_double();
    const double h = 1.0 / static_cast<double>(grid_count);

    QuadratureRule rule = build_rule(m, grid_count, precision);
    double optimal_err = std::fabs(integrate(rule, f) - exact);

    std::vector<double> trap(static_cast<size_t>(grid_count) + 1, h);
    trap.front() = h / 2.0;
    trap.back() = h / 2.0;
    double trapezoid_err = std::fabs(integrate_weights(trap, grid_count, f) - exact);

    std::vector<double> simpson(static_cast<size_t>(grid_count) + 1, 0.0);
    for (long beta = 0; beta <= grid_count; ++beta) {
        double c = (beta == 0 || beta == grid_count) ? 1.0 : (beta % 2 == 1 ? 4.0 : 2.0);
        simpson[static_cast<size_t>(beta)] = c * h / 3.0;
    }
    double simpson_err = std::fabs(integrate_weights(simpson, grid_count, f) - exact);

    return {{"optimal", optimal_err}, {"trapezoid", trapezoid_err}, {"simpson", simpson_err}};
}

std::string to_csv(const ConvergenceReport& report) {
    std::string out = "N,error,observed_order\n";
    char buf[128];
    for (const auto& row : report.rows) {
        if (std::isfinite(row.observed_order))
            std::snprintf(buf, sizeof buf, "%ld,%.12e,%.4f\n", row.grid_count, row.error, row.observed_order);
        else
            std::snprintf(buf, sizeof buf, "%ld,%.12e,\n", row.grid_count, row.error);
        out += buf;
    }
    return out;
}

}  // namespace sardquad
