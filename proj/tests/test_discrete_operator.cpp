#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sardquad/combinatorics.hpp"
#include "sardquad/discrete_operator.hpp"

using namespace sardquad;

TEST_CASE("g_kernel: odd power times sign makes an even, non-negative kernel") {
    CHECK(g_kernel(1, rational(0)) == Rational(0));
    CHECK(g_kernel(3, rational(0)) == Rational(0));
    CHECK(g_kernel(1, rational(1, 2)) == rational(1, 4));
    CHECK(g_kernel(2, rational(-1, 3)) == rational(1, 324));
    for (int m = 1; m <= 4; ++m)
        for (long num = -6; num <= 6; ++num) {
            const Rational x = rational(num, 5);
            CHECK(g_kernel(m, x) == g_kernel(m, -x));
            CHECK(sign(g_kernel(m, x)) >= 0);
        }
}

TEST_CASE("f_rhs: endpoint and midpoint values; domain is [0,1]") {
    CHECK(f_rhs(1, rational(0)) == rational(1, 4));
    CHECK(f_rhs(3, rational(0)) == rational(1, 1440));
    CHECK(f_rhs(1, rational(1, 2)) == rational(1, 8));
    CHECK(f_rhs(2, rational(1, 2)) == rational(1, 384));
    CHECK(f_rhs(2, rational(1)) == f_rhs(2, rational(0)));
    CHECK_THROWS_AS(f_rhs(2, rational(-1, 10)), std::domain_error);
    CHECK_THROWS_AS(f_rhs(2, rational(11, 10)), std::domain_error);
}

TEST_CASE("convolution: delta is the identity, [1,1]*[1,1] = [1,2,1], support adds") {
    DiscreteSignal<Rational> delta{0, {Rational(1)}};
    DiscreteSignal<Rational> b{3, {rational(2), rational(-1), rational(5)}};
    auto id = convolve(delta, b);
    CHECK(id.lo == b.lo);
    CHECK(id.values == b.values);

    DiscreteSignal<Rational> ones{0, {Rational(1), Rational(1)}};
    auto sq = convolve(ones, ones);
    CHECK(sq.lo == 0);
    CHECK(sq.values == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});

    DiscreteSignal<Rational> a{-2, {Rational(1), Rational(1), Rational(1)}};
    auto c = convolve(a, b);
    CHECK(c.lo == a.lo + b.lo);
    CHECK(c.hi() == a.hi() + b.hi());
}

TEST_CASE("m = 1 stencil: (1, -2, 1)/h^2 and even symmetry") {
    const RootSet roots = isolate_roots(1, 256);
    const DiscreteOperator op(1, 4, roots, 256);
    CHECK(op.value_exact(0) == rational(-32));  // -2/h^2 = -2*16
    CHECK(op.value_exact(1) == rational(16));
    CHECK(op.value_exact(-1) == rational(16));
    CHECK(op.value_exact(5) == Rational(0));
    CHECK(op.value(0) == BigFloat(-32L));
    CHECK(op.value(3).is_zero());
}

TEST_CASE("values are even in beta") {
    for (int m = 1; m <= 4; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        const DiscreteOperator op(m, 7, roots, 256);
        for (long beta = 0; beta <= 6; ++beta) CHECK(op.value(beta) == op.value(-beta));
    }
}

TEST_CASE("values decay geometrically with ratio max|q_k|") {
    for (int m = 2; m <= 5; ++m) {
        const long n = 10;
        const RootSet roots = isolate_roots(m, 256);
        const DiscreteOperator op(m, n, roots, 256);
        // |D(beta)| <= scale * sum_k |A_k| * r^beta for |beta| >= 2, with the
        // amplitudes reassembled here from the roots and E_{2m-1}
        const EFPolynomial e_odd = ef_by_recurrence(2 * m - 1);
        BigFloat amplitude(0L, 256);
        for (int k = 0; k < roots.size(); ++k) {
            const BigFloat& q = roots.value(k);
            amplitude += abs(pow_ui(1L - q, static_cast<unsigned long>(2 * m + 1)) / (q * e_odd.eval(q)));
        }
        const Int scale_int = factorial(static_cast<unsigned long>(2 * m - 1)) *
                              int_pow(Int(n), static_cast<unsigned long>(2 * m));
        const BigFloat scale(scale_int, 256);
        const BigFloat r = roots.max_abs();
        for (long beta = 2; beta <= 40; ++beta) {
            const BigFloat bound = scale * amplitude * pow_ui(r, static_cast<unsigned long>(beta));
            CHECK(abs(op.value(beta)) <= bound * BigFloat(1.0000001, 256));
        }
    }
}

TEST_CASE("m = 2 central value matches the closed form at q = -2 + sqrt(3)") {
    const RootSet roots = isolate_roots(2, 256);
    const DiscreteOperator op(2, 10, roots, 256);
    const BigFloat q = sqrt(BigFloat(3L, 256)) - 2L;
    // (3!/h^4)(-8 + (1-q)^5/(q E_3(q))), E_3(x) = 1 + 11x + 11x^2 + x^3
    const EFPolynomial e3 = ef_by_recurrence(3);
    const BigFloat expected =
        BigFloat(6L * 10000L, 256) * (pow_ui(1L - q, 5) / (q * e3.eval(q)) - 8L);
    CHECK(abs(op.value(0) - expected) < 1e-60);
}

TEST_CASE("inverse identity: exactly zero for m = 1") {
    const RootSet roots = isolate_roots(1, 256);
    for (long n : {2L, 3L, 7L}) {
        const DiscreteOperator op(1, n, roots, 256);
        CHECK(op.inverse_residual(20).is_zero());
    }
}

TEST_CASE("inverse identity: residual below 1e-30 at 256 bits, m = 2..5") {
    for (int m = 2; m <= 5; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        const DiscreteOperator op(m, 10, roots, 256);
        CHECK(op.inverse_residual(20) < 1e-30);
    }
}

TEST_CASE("inverse identity: residual floor tracks precision, not the check window") {
    // the summation window is precision-driven (always past the check
    // window), so the residual is a rounding floor: widening W leaves it
    // at tolerance level while raising precision pushes it down by orders
    const RootSet coarse = isolate_roots(2, 64);
    const DiscreteOperator op64(2, 10, coarse, 64);
    const RootSet fine = isolate_roots(2, 256);
    const DiscreteOperator op256(2, 10, fine, 256);
    const BigFloat r64 = op64.inverse_residual(20);
    const BigFloat r256 = op256.inverse_residual(20);
    CHECK(r256 < r64);
    CHECK(r256 * BigFloat(1e30, 256) < r64);  // at least ~30 orders apart
    for (long w : {20L, 40L, 60L}) CHECK(op256.inverse_residual(w) < 1e-30);
}

TEST_CASE("operator moments: exact for m = 1") {
    const RootSet roots = isolate_roots(1, 256);
    const DiscreteOperator op(1, 6, roots, 256);
    for (int k = 0; k <= 4; ++k) CHECK(op.moment_residual(k).is_zero());
    CHECK(op.moment_expected(2) == Rational(2));
    CHECK(op.moment_expected(4) == rational_pow(rational(1, 6), 2) * Rational(24) * rational(1, 6) / Rational(2));
}

TEST_CASE("operator moments: zero through 2m-1, (2m)! at 2m, zero to 4m-1, Bernoulli value at 4m") {
    for (int m = 2; m <= 5; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        const DiscreteOperator op(m, 10, roots, 256);
        for (int k = 0; k <= 4 * m; ++k) CHECK(op.moment_residual(k) < 1e-30);
        // spot-check the expected values themselves
        CHECK(op.moment_expected(2 * m) == Rational(factorial(static_cast<unsigned long>(2 * m))));
        CHECK(op.moment_expected(2 * m - 1) == Rational(0));
        CHECK(op.moment_expected(4 * m - 1) == Rational(0));
    }
}

TEST_CASE("moment residual against a deliberately wrong expectation is large") {
    const RootSet roots = isolate_roots(3, 256);
    const DiscreteOperator op(3, 10, roots, 256);
    // k = 2m moment is (2m)! = 720; the raw moment must sit near it
    CHECK(abs(op.moment(6) - BigFloat(720L)) < 1e-30);
    CHECK(abs(op.moment(6) - BigFloat(719L)) > 0.5);
}

TEST_CASE("independent statement of the 2m-th moment identity") {
    // [D_m, beta^(2m)] = (2m)! tested on its own, not via the residual helper
    for (int m = 1; m <= 5; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        const DiscreteOperator op(m, 8, roots, 256);
        const int k = 2 * m;
        const long t = op.truncation_limit(k);
        BigFloat acc(0L, 256);
        for (long beta = -t; beta <= t; ++beta)
            acc += op.value(beta) * rational_pow(op.h() * rational(beta), static_cast<unsigned long>(k));
        CHECK(abs(acc - BigFloat(factorial(static_cast<unsigned long>(2 * m)), 256)) < 1e-30);
    }
}
