#include "sardquad/euler_frobenius.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sardquad/combinatorics.hpp"

namespace sardquad {

EFPolynomial ef_by_recurrence(int k) {
    if (k < 0) throw std::invalid_argument("ef_by_recurrence: negative degree");
    EFPolynomial e({1});
    const EFPolynomial x({0, 1});
    const EFPolynomial x_one_minus_x({0, 1, -1});  // x(1-x)
    for (int i = 1; i <= k; ++i) {
        EFPolynomial kx_plus_one({1});
        kx_plus_one = kx_plus_one + x * Int(i);
        e = kx_plus_one * e + x_one_minus_x * e.derivative();
    }
    return e;
}

EFPolynomial ef_by_euler_formula(int k) {
    if (k < 0) throw std::invalid_argument("ef_by_euler_formula: negative degree");
    std::vector<Int> coeffs(static_cast<size_t>(k) + 1, Int(0));
    for (int s = 0; s <= k; ++s) {
        Int acc(0);
        for (int j = 0; j <= s; ++j) {
            Int term = binomial(static_cast<unsigned long>(k) + 2, static_cast<unsigned long>(j)) *
                       int_pow(Int(s + 1 - j), static_cast<unsigned long>(k) + 1);
            if (j % 2 != 0)
                acc -= term;
            else
                acc += term;
        }
        coeffs[static_cast<size_t>(s)] = acc;
    }
    return EFPolynomial(std::move(coeffs));
}

EFPolynomial ef_by_finite_differences(int k) {
    if (k < 0) throw std::invalid_argument("ef_by_finite_differences: negative degree");
    // sum_{i=1}^{k+1} D^i0^{k+1} (x-1)^{k+1-i}, expanded in ascending powers
    std::vector<Int> coeffs(static_cast<size_t>(k) + 1, Int(0));
    for (int i = 1; i <= k + 1; ++i) {
        const Int w = delta_power(i, k + 1).get_num();
        const int p = k + 1 - i;  // expand (x-1)^p
        for (int t = 0; t <= p; ++t) {
            Int term = w * binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(t));
            if ((p - t) % 2 != 0)
                coeffs[static_cast<size_t>(t)] -= term;
            else
                coeffs[static_cast<size_t>(t)] += term;
        }
    }
    return EFPolynomial(std::move(coeffs));
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Primitive integer multiple with the same sign pattern (positive scaling
// only, so Sturm sign counts are untouched). Keeps the chain's coefficients
// at subresultant size instead of letting rational remainders explode.
IntPolynomial primitive_part(const RatPoly& p) {
    Int l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z;
    z.reserve(p.size());
    Int g(0);
    for (const auto& c : p) {
        Rational scaled = c * Rational(l);
        z.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(z));
}

RatPoly remainder(const IntPolynomial& a, const IntPolynomial& b) {
    RatPoly num(a.coefficients().size());
    for (size_t i = 0; i < num.size(); ++i) num[i] = Rational(a.coefficients()[i]);
    const auto& den = b.coefficients();
    while (num.size() >= den.size() && !num.empty()) {
        Rational factor = num.back() / Rational(den.back());
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * Rational(den[i]);
        num.pop_back();
        trim(num);
    }
    return num;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        RatPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(primitive_part(r));
    }
    return seq;
}

int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

RootSet::RootSet(int m, std::vector<RootEnclosure> enclosures, mpfr_prec_t precision)
    : m_(m), precision_(precision), enclosures_(std::move(enclosures)), width_(0L, precision), max_abs_(0L, precision) {
    values_.reserve(enclosures_.size());
    for (const auto& e : enclosures_) {
        Rational mid = (e.lo + e.hi) / 2;
        values_.emplace_back(mid, precision);
        BigFloat w = BigFloat(Rational(e.hi - e.lo), precision);
        if (w > width_) width_ = w;
        BigFloat a = abs(values_.back());
        if (a > max_abs_) max_abs_ = a;
    }
}

RootSet isolate_roots(int m, mpfr_prec_t precision) {
    if (m < 1) throw std::invalid_argument("isolate_roots: m must be >= 1");
    if (m == 1) return RootSet(1, {}, precision);

    const IntPolynomial e = ef_by_recurrence(2 * m - 2);
    const auto sturm = sturm_sequence(e);
    const Rational minus_one = rational(-1);
    const Rational zero = rational(0);

    auto count_in = [&](const Rational& a, const Rational& b) {
        return sign_variations(sturm, a) - sign_variations(sturm, b);
    };

    if (count_in(minus_one, zero) != m - 1)
        throw std::logic_error("isolate_roots: Sturm count in (-1,0) != m-1");

    // Split until every interval brackets exactly one root. Endpoints are
    // dyadic rationals; the only rational candidates for roots of E_k are
    // +-1, so bisection points never land on a root.
    std::deque<RootEnclosure> work{{minus_one, zero}};
    std::vector<RootEnclosure> isolated;
    while (!work.empty()) {
        RootEnclosure iv = work.front();
        work.pop_front();
        int n = count_in(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    if (static_cast<int>(isolated.size()) != m - 1)
        throw std::logic_error("isolate_roots: isolation produced wrong root count");

    // Narrow each bracket by sign bisection to width 2^(-precision).
    Rational target = rational_pow(rational(1, 2), static_cast<unsigned long>(precision));
    for (auto& iv : isolated) {
        int sign_lo = e.sign_at(iv.lo);
        if (sign_lo == 0 || e.sign_at(iv.hi) == 0 || sign_lo == e.sign_at(iv.hi))
            throw std::logic_error("isolate_roots: bracket does not straddle a sign change");
        while (iv.hi - iv.lo > target) {
            Rational mid = (iv.lo + iv.hi) / 2;
            int s = e.sign_at(mid);
            if (s == 0) throw std::logic_error("isolate_roots: exact rational root is impossible for E_k");
            if (s == sign_lo)
                iv.lo = mid;
            else
                iv.hi = mid;
        }
    }

    std::sort(isolated.begin(), isolated.end(),
              [](const RootEnclosure& a, const RootEnclosure& b) { return a.lo < b.lo; });
    return RootSet(m, std::move(isolated), precision);
}

}  // namespace sardquad
