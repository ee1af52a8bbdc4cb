#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sardquad {

// Exact arbitrary-precision integers and rationals. Rationals are kept in
// canonical form (lowest terms, positive denominator) at all times; gmp
// arithmetic preserves canonical form, so only construction needs care.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const Int& num) { return Rational(num); }

// Parses "p", "-p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    return rational(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return Rational(::abs(q)); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace sardquad
