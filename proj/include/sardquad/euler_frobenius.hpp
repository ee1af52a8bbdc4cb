#pragma once

#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/polynomial.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

// Euler-Frobenius polynomials E_k: palindromic, positive integer
// coefficients, unit ends, coefficient sum (k+1)!, all roots real, negative,
// distinct and closed under x -> 1/x. Three independent constructions are
// provided and cross-checked in the tests; the recurrence is the production
// path.
using EFPolynomial = IntPolynomial;

/// E_k from E_0 = 1 via  E_k = (kx + 1) E_{k-1} + x(1 - x) E_{k-1}'.
EFPolynomial ef_by_recurrence(int k);

/// Coefficients a_s = sum_{j=0}^{s} (-1)^j C(k+2, j) (s+1-j)^{k+1}.
EFPolynomial ef_by_euler_formula(int k);

/// Expansion of (x-1)^{k+1} sum_{i=1}^{k+1} D^i0^{k+1} / (x-1)^i.
EFPolynomial ef_by_finite_differences(int k);

/// One certified root bracket: exact rational endpoints with opposite signs
/// of E_{2m-2}.
struct RootEnclosure {
    Rational lo;
    Rational hi;
};

/// The m-1 roots of E_{2m-2} inside (-1, 0), isolated by a Sturm sequence
/// over exact rationals and narrowed by exact-sign bisection. Roots are
/// sorted ascending; `value(k)` is the enclosure midpoint rounded to the
/// requested precision.
class RootSet {
  public:
    RootSet(int m, std::vector<RootEnclosure> enclosures, mpfr_prec_t precision);

    int m() const { return m_; }
    int size() const { return static_cast<int>(values_.size()); }
    mpfr_prec_t precision() const { return precision_; }

    const BigFloat& value(int k) const { return values_.at(static_cast<size_t>(k)); }
    const RootEnclosure& enclosure(int k) const { return enclosures_.at(static_cast<size_t>(k)); }
    const BigFloat& enclosure_width() const { return width_; }

    /// Largest |q_k| (zero for m = 1); bounds every geometric tail downstream.
    const BigFloat& max_abs() const { return max_abs_; }

  private:
    int m_;
    mpfr_prec_t precision_;
    std::vector<RootEnclosure> enclosures_;
    std::vector<BigFloat> values_;
    BigFloat width_;
    BigFloat max_abs_;
};

/// Isolates the roots of E_{2m-2} in (-1, 0) to enclosure width 2^(-precision).
/// Throws std::logic_error if the Sturm count there is not m-1 (an arithmetic
/// bug, not a user error).
RootSet isolate_roots(int m, mpfr_prec_t precision = BigFloat::kDefaultPrecision);

}  // namespace sardquad
