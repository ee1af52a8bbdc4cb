#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sardquad/quadrature_engine.hpp"

using namespace sardquad;

TEST_CASE("corpus: 20 smooth functions, each with a consistent reference integral") {
    CHECK(corpus().size() == 20);
    for (const auto& f : corpus()) {
        // crude Richardson check that the stated integral is the right constant
        const long n = 512;
        double acc = 0.0;
        for (long i = 0; i < n; ++i) acc += f.f((i + 0.5) / n) / n;
        CHECK(std::fabs(acc - f.exact_integral(64).to_double()) < 1e-4);
        // double and MPFR evaluators agree
        for (double x : {0.0, 0.3, 1.0})
            CHECK(f.f_hp(BigFloat(x, 64)).to_double() == doctest::Approx(f.f(x)).epsilon(1e-12));
    }
    CHECK(find_integrand("exp") != nullptr);
    CHECK(find_integrand("poly3") != nullptr);
    CHECK(find_integrand("nope") == nullptr);
}

TEST_CASE("integrate: frozen trapezoid values on N = 2") {
    const QuadratureRule rule = build_rule(1, 2, 256);
    CHECK(integrate(rule, *find_integrand("poly1")) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(integrate(rule, *find_integrand("poly2")) == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("exactness on polynomials of degree <= m-1") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int m = 1; m <= 5; ++m) {
        const QuadratureRule rule = build_rule(m, 12, 256);
        for (int rep = 0; rep < 5; ++rep) {
            // random rational-coefficient polynomial of degree m-1
            std::vector<int> c(static_cast<size_t>(m));
            for (auto& v : c) v = coef(rng);
            double approx = 0.0;
            for (long beta = 0; beta <= rule.grid_count; ++beta) {
                const double x = static_cast<double>(beta) / static_cast<double>(rule.grid_count);
                double px = 0.0;
                for (int i = m - 1; i >= 0; --i) px = px * x + c[static_cast<size_t>(i)] / 3.0;
                approx += rule.weights[static_cast<size_t>(beta)].to_double() * px;
            }
            double exact = 0.0;
            for (int i = 0; i < m; ++i) exact += c[static_cast<size_t>(i)] / 3.0 / (i + 1);
            CHECK(std::fabs(approx - exact) < 1e-12);
        }
    }
}

TEST_CASE("recorded baseline: m = 2, N = 10 on x^3") {
    const QuadratureRule rule = build_rule(2, 10, 256);
    const double err = std::fabs(integrate(rule, *find_integrand("poly3")) - 0.25);
    CHECK(err == doctest::Approx(1.44337e-4).epsilon(1e-3));
}

TEST_CASE("linearity of the weighted sum") {
    const QuadratureRule rule = build_rule(2, 9, 256);
    const Integrand& f = *find_integrand("exp");
    const Integrand& g = *find_integrand("sinpi");
    Integrand combo;
    combo.id = "combo";
    combo.f = [&](double x) { return 2.0 * f.f(x) - 0.5 * g.f(x); };
    const double lhs = integrate(rule, combo);
    const double rhs = 2.0 * integrate(rule, f) - 0.5 * integrate(rule, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("convergence study: trapezoid order 2 on exp") {
    const auto report = convergence_study(1, *find_integrand("exp"), {4, 8, 16, 32}, 256);
    REQUIRE(report.rows.size() == 4);
    CHECK(std::isnan(report.rows[0].observed_order));
    CHECK(report.rows.back().observed_order == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("convergence study: degree <= m-1 polynomials are flat at zero error") {
    const auto report = convergence_study(2, *find_integrand("poly1"), {4, 8}, 256);
    for (const auto& row : report.rows) CHECK(row.error < 1e-12);
}

TEST_CASE("convergence study: recorded orders for m = 2 and m = 3 on exp") {
    // regression baselines from the certified build: on smooth integrands
    // with nonvanishing boundary derivatives these rules come in at O(h^(m+1))
    const auto r2 = convergence_study(2, *find_integrand("exp"), {4, 8, 16, 32, 64}, 256);
    for (size_t i = 1; i < r2.rows.size(); ++i) {
        CHECK(r2.rows[i].error < r2.rows[i - 1].error);
        CHECK(r2.rows[i].observed_order > 2.0);
    }
    CHECK(r2.rows.back().observed_order == doctest::Approx(3.0).epsilon(0.02));

    const auto r3 = convergence_study(3, *find_integrand("exp"), {4, 8, 16, 32, 64}, 256);
    for (size_t i = 1; i < r3.rows.size(); ++i) {
        CHECK(r3.rows[i].error < r3.rows[i - 1].error);
        CHECK(r3.rows[i].observed_order > 3.0);
    }
    CHECK(r3.rows.back().observed_order == doctest::Approx(4.0).epsilon(0.03));
}

TEST_CASE("convergence study validates its inputs") {
    CHECK_THROWS_AS(convergence_study(3, *find_integrand("exp"), {2, 4}, 256), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(1, *find_integrand("exp"), {8, 4}, 256), std::invalid_argument);
}

TEST_CASE("baseline comparison") {
    SUBCASE("m = 1: optimal and trapezoid coincide") {
        const auto rows = baseline_compare(1, *find_integrand("exp"), 16, 256);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].error == doctest::Approx(rows[1].error).epsilon(1e-12));
    }
    SUBCASE("constant integrand: every rule is exact") {
        for (const auto& row : baseline_compare(2, *find_integrand("poly0"), 8, 256))
            CHECK(row.error < 1e-14);
    }
    SUBCASE("m = 2 on exp beats the trapezoid") {
        const auto rows = baseline_compare(2, *find_integrand("exp"), 16, 256);
        CHECK(rows[0].error <= rows[1].error);
    }
    SUBCASE("odd N is rejected (Simpson)") {
        CHECK_THROWS_AS(baseline_compare(2, *find_integrand("exp"), 9, 256), std::invalid_argument);
    }
}

TEST_CASE("worst-case error over the corpus: optimal <= trapezoid for m >= 2") {
    for (int m : {2, 3})
        for (long n : {8L, 16L}) {
            double worst_opt = 0.0, worst_trap = 0.0;
            for (const auto& f : corpus()) {
                const auto rows = baseline_compare(m, f, n, 256);
                worst_opt = std::max(worst_opt, rows[0].error);
                worst_trap = std::max(worst_trap, rows[1].error);
            }
            CHECK(worst_opt <= worst_trap);
        }
}

TEST_CASE("csv serialization of a study") {
    const auto report = convergence_study(1, *find_integrand("exp"), {4, 8}, 256);
    const std::string csv = to_csv(report);
    CHECK(csv.rfind("N,error,observed_order\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("4,") != std::string::npos);
}
