#pragma once

#include <stdexcept>

#include "sardquad/bigfloat.hpp"
#include "sardquad/combinatorics.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

/// sum_{g=0}^{n-1} g^k via the Bernoulli expansion
///   sum = sum_{j=1}^{k+1} k! B_{k+1-j} / (j! (k+1-j)!) n^j.
Rational power_sum(int k, long n);

namespace detail {

inline Rational convert_like(const Rational& x, const Rational&) { return x; }
inline BigFloat convert_like(const Rational& x, const BigFloat& like) { return BigFloat(x, like.precision()); }
inline Rational convert_like(const Int& x, const Rational&) { return Rational(x); }
inline BigFloat convert_like(const Int& x, const BigFloat& like) { return BigFloat(x, like.precision()); }

inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_one(const BigFloat& q) { return q == 1L; }

}  // namespace detail

/// sum_{g=0}^{n-1} q^g g^k through the two-term finite-difference expansion
///   1/(1-q) sum_{i=0}^{k} (q/(1-q))^i D^i0^k
///   - q^n/(1-q) sum_{i=0}^{k} (q/(1-q))^i D^i g^k |_{g=n},
/// where D^i is the i-th forward difference. Singular at q = 1; callers use
/// power_sum there.
template <typename T>
T geometric_power_sum(const T& q, int k, long n) {
    if (k < 0) throw std::invalid_argument("geometric_power_sum: negative power");
    if (n < 1) throw std::invalid_argument("geometric_power_sum: n must be positive");
    if (detail::is_one(q)) throw std::domain_error("geometric_power_sum: q = 1 is singular");

    const T one = detail::convert_like(Rational(1), q);
    const T inv_one_minus_q = one / (one - q);
    const T ratio = q * inv_one_minus_q;  // q/(1-q)

    T head = detail::convert_like(Rational(0), q);
    T tail = head;
    T ratio_pow = one;
    for (int i = 0; i <= k; ++i) {
        head += ratio_pow * detail::convert_like(delta_power(i, k), q);
        tail += ratio_pow * detail::convert_like(delta_power_at(i, k, n), q);
        ratio_pow *= ratio;
    }

    T q_pow_n = one;
    {
        // binary exponentiation so the BigFloat instantiation stays tight
        T base = q;
        long e = n;
        while (e > 0) {
            if (e & 1) q_pow_n *= base;
            base *= base;
            e >>= 1;
        }
    }
    return inv_one_minus_q * head - q_pow_n * inv_one_minus_q * tail;
}

}  // namespace sardquad
