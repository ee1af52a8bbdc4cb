#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sardquad/combinatorics.hpp"
#include "sardquad/euler_frobenius.hpp"

using namespace sardquad;

TEST_CASE("small polynomials are the known ones") {
    CHECK(ef_by_recurrence(0) == EFPolynomial({1}));
    CHECK(ef_by_recurrence(1) == EFPolynomial({1, 1}));
    CHECK(ef_by_recurrence(2) == EFPolynomial({1, 4, 1}));
    CHECK(ef_by_recurrence(3) == EFPolynomial({1, 11, 11, 1}));
    CHECK(ef_by_euler_formula(1) == EFPolynomial({1, 1}));
    CHECK(ef_by_euler_formula(2) == EFPolynomial({1, 4, 1}));
    CHECK(ef_by_euler_formula(3) == EFPolynomial({1, 11, 11, 1}));
    CHECK(ef_by_finite_differences(0) == EFPolynomial({1}));
    CHECK(ef_by_finite_differences(2) == EFPolynomial({1, 4, 1}));
}

TEST_CASE("three independent constructions agree exactly for k <= 12") {
    for (int k = 0; k <= 12; ++k) {
        const EFPolynomial a = ef_by_recurrence(k);
        CHECK(a == ef_by_euler_formula(k));
        CHECK(a == ef_by_finite_differences(k));
    }
}

TEST_CASE("structural invariants: unit ends, palindromy, positivity, coefficient sum") {
    for (int k = 0; k <= 12; ++k) {
        const EFPolynomial e = ef_by_recurrence(k);
        REQUIRE(e.degree() == k);
        CHECK(e.coeff(0) == 1);
        CHECK(e.coeff(k) == 1);
        Int sum(0);
        for (int s = 0; s <= k; ++s) {
            CHECK(e.coeff(s) > 0);
            CHECK(e.coeff(s) == e.coeff(k - s));
            sum += e.coeff(s);
        }
        CHECK(sum == factorial(static_cast<unsigned long>(k) + 1));
    }
}

TEST_CASE("m = 1 has no roots by definition") {
    const RootSet roots = isolate_roots(1, 256);
    CHECK(roots.size() == 0);
    CHECK(roots.max_abs().is_zero());
}

TEST_CASE("m = 2 root is -2 + sqrt(3) to 1e-70 at 256 bits") {
    const RootSet roots = isolate_roots(2, 256);
    REQUIRE(roots.size() == 1);
    const BigFloat expected = sqrt(BigFloat(3L, 256)) - 2L;
    CHECK(abs(roots.value(0) - expected) < 1e-70);
}

TEST_CASE("m = 3: both roots make E_4 vanish at working precision") {
    const RootSet roots = isolate_roots(3, 256);
    REQUIRE(roots.size() == 2);
    const EFPolynomial e4 = ef_by_recurrence(4);
    for (int i = 0; i < 2; ++i) CHECK(abs(e4.eval(roots.value(i))) < 1e-70);
}

TEST_CASE("root isolation for m <= 8: count, interval, ordering, sign certification") {
    for (int m = 2; m <= 8; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        REQUIRE(roots.size() == m - 1);
        const EFPolynomial e = ef_by_recurrence(2 * m - 2);
        for (int i = 0; i < roots.size(); ++i) {
            const RootEnclosure& enc = roots.enclosure(i);
            CHECK(enc.lo > rational(-1));
            CHECK(enc.hi < rational(0));
            CHECK(e.sign_at(enc.lo) * e.sign_at(enc.hi) < 0);
            CHECK(enc.hi - enc.lo <= rational_pow(rational(1, 2), 256));
            if (i > 0) CHECK(roots.enclosure(i - 1).hi < enc.lo);
            CHECK(roots.value(i) < 0.0);
            CHECK(roots.value(i) > -1.0);
        }
    }
}

TEST_CASE("reciprocal pairing: 1/q is a root of the same polynomial") {
    for (int m = 2; m <= 8; ++m) {
        const RootSet roots = isolate_roots(m, 256);
        const EFPolynomial e = ef_by_recurrence(2 * m - 2);
        for (int i = 0; i < roots.size(); ++i) {
            const BigFloat inv = BigFloat(1L, 256) / roots.value(i);
            // relative to the leading term |1/q|^(2m-2)
            const BigFloat rel = abs(e.eval(inv)) / pow_ui(abs(inv), static_cast<unsigned long>(2 * m - 2));
            CHECK(rel <= pow_ui(BigFloat(rational(1, 2), 256), 128));
        }
    }
}

TEST_CASE("isolation at doubled precision narrows the enclosure accordingly") {
    const RootSet coarse = isolate_roots(4, 128);
    const RootSet fine = isolate_roots(4, 512);
    REQUIRE(coarse.size() == fine.size());
    CHECK(fine.enclosure_width() <= pow_ui(BigFloat(rational(1, 2), 64), 512));
    for (int i = 0; i < coarse.size(); ++i)
        CHECK(abs(coarse.value(i).round_to(512) - fine.value(i)) < pow_ui(BigFloat(rational(1, 2), 64), 126));
}
