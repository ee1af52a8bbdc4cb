#pragma once

#include <initializer_list>
#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

/// Dense univariate polynomial with exact integer coefficients, ascending
/// powers. The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int i) const;
    const std::vector<Int>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const;
    BigFloat eval(const BigFloat& x) const;
    Int eval(const Int& x) const;

    /// Exact sign of p(x) at a rational point, via the homogenized integer
    /// Horner scheme (no rounding anywhere).
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    /// Multiply by x^k.
    IntPolynomial shifted(int k) const;

  private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace sardquad
