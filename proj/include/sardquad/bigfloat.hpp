#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "sardquad/rational.hpp"

namespace sardquad {

/// Arbitrary-precision binary float (MPFR-backed, round-to-nearest).
///
/// Every value carries its own precision in bits. Binary operations round the
/// result to the minimum of the operand precisions; operations with exact
/// scalars (long, Int, Rational) keep the float operand's precision.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    BigFloat() { mpfr_init2(v_, kDefaultPrecision); mpfr_set_zero(v_, 1); }

    explicit BigFloat(long value, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    explicit BigFloat(double value, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }

    explicit BigFloat(const Int& value, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    explicit BigFloat(const Rational& value, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    // Accepts anything mpfr_set_str does, e.g. "1.25e-3".
    explicit BigFloat(const std::string& decimal, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: bad decimal literal '" + decimal + "'");
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, o.precision()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, o.precision()); mpfr_swap(v_, o.v_); }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat zero(mpfr_prec_t prec) { return BigFloat(0L, prec); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    /// Copy rounded to a (possibly different) precision.
    BigFloat round_to(mpfr_prec_t prec) const {
        BigFloat r(0L, prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal scientific notation with the given number of significant
    /// digits; locale-independent (built from mpfr_get_str).
    std::string str(int significant_digits = 40) const;

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define SARDQUAD_BF_BINOP(op, fn)                                                 \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {           \
        BigFloat r(0L, std::min(a.precision(), b.precision()));                   \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                          \
        return r;                                                                 \
    }
    SARDQUAD_BF_BINOP(+, mpfr_add)
    SARDQUAD_BF_BINOP(-, mpfr_sub)
    SARDQUAD_BF_BINOP(*, mpfr_mul)
    SARDQUAD_BF_BINOP(/, mpfr_div)
#undef SARDQUAD_BF_BINOP

    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(0L, a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(0L, a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(0L, a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) { return a + (-b); }
    friend BigFloat operator-(long a, const BigFloat& b) {
        BigFloat r(0L, b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator*(const BigFloat& a, const Rational& b) {
        BigFloat r(0L, a.precision());
        mpfr_mul_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const Rational& a, const BigFloat& b) { return b * a; }
    friend BigFloat operator/(const BigFloat& a, const Rational& b) {
        BigFloat r(0L, a.precision());
        mpfr_div_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const Rational& b) {
        BigFloat r(0L, a.precision());
        mpfr_add_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const Rational& b) {
        BigFloat r(0L, a.precision());
        mpfr_sub_q(r.v_, a.v_, b.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
    friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cosh(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sinh(const BigFloat& a) {
        BigFloat r(0L, a.precision());
        mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    /// a^e by binary exponentiation, correctly rounded.
    friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
        BigFloat r(0L, a.precision());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

    static BigFloat pi(mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r(0L, prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

}  // namespace sardquad
