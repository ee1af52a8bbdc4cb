#pragma once

#include <vector>

#include "sardquad/bigfloat.hpp"
#include "sardquad/euler_frobenius.hpp"
#include "sardquad/rational.hpp"

namespace sardquad {

/// Odd-power kernel x^{2m-1} sign(x) / (2 (2m-1)!)  (equal to
/// |x|^{2m-1} / (2 (2m-1)!), so even and non-negative).
Rational g_kernel(int m, const Rational& x);

/// Right-hand side (x^{2m} + (1-x)^{2m}) / (2 (2m)!); defined for x in [0,1].
Rational f_rhs(int m, const Rational& x);

/// Finitely supported sequence indexed by beta; zero outside [lo, hi].
template <typename T>
struct DiscreteSignal {
    long lo = 0;
    std::vector<T> values;

    long hi() const { return lo + static_cast<long>(values.size()) - 1; }

    T at(long beta, const T& zero = T{}) const {
        if (beta < lo || beta > hi()) return zero;
        return values[static_cast<size_t>(beta - lo)];
    }
};

/// (a*b)[beta] = sum_g a[g] b[beta-g]; support is the Minkowski sum.
template <typename T>
DiscreteSignal<T> convolve(const DiscreteSignal<T>& a, const DiscreteSignal<T>& b) {
    DiscreteSignal<T> c;
    if (a.values.empty() || b.values.empty()) return c;
    c.lo = a.lo + b.lo;
    T zero = a.values.front() - a.values.front();  // zero of matching kind/precision
    c.values.assign(a.values.size() + b.values.size() - 1, zero);
    for (size_t i = 0; i < a.values.size(); ++i)
        for (size_t j = 0; j < b.values.size(); ++j)
            c.values[i + j] += a.values[i] * b.values[j];
    return c;
}

/// Discrete analogue of d^{2m}/dx^{2m} on the grid of step h = 1/N:
/// the even sequence whose convolution with g_kernel samples inverts to the
/// discrete delta (scaled by 1/h). Values come from the closed form with the
/// geometric terms A_k q_k^|beta|, A_k = (1-q_k)^{2m+1} / (q_k E_{2m-1}(q_k)),
/// plus corrections 1 at |beta| = 1 and -2^{2m-1} at beta = 0, the whole
/// thing scaled by (2m-1)!/h^{2m}.
class DiscreteOperator {
  public:
    DiscreteOperator(int m, long grid_count, const RootSet& roots,
                     mpfr_prec_t precision = BigFloat::kDefaultPrecision);

    int m() const { return m_; }
    long grid_count() const { return grid_count_; }
    const Rational& h() const { return h_; }
    mpfr_prec_t precision() const { return precision_; }
    const RootSet& roots() const { return roots_; }

    /// Closed-form value at beta (even in beta).
    BigFloat value(long beta) const;

    /// m = 1 only: the stencil is rational-valued and exact.
    Rational value_exact(long beta) const;

    /// Truncation index: smallest T with max|q_k|^T < 2^(-precision),
    /// enlarged until the geometric-times-polynomial tail ratio for power k
    /// is summable with headroom.
    long truncation_limit(int k) const;

    /// sum_beta value(beta) (h beta)^k over |beta| <= truncation_limit(k).
    BigFloat moment(int k) const;

    /// Exact expected moment: 0 for k < 2m except k = 2m -> (2m)!, zero again
    /// up to 4m-1, and h^{2m}(4m)! B_{2m}/(2m)! at k = 4m.
    Rational moment_expected(int k) const;

    /// |moment(k) - expected| plus a certified geometric tail bound.
    BigFloat moment_residual(int k) const;

    /// max over |beta| <= window of |h (D * g_kernel)[beta] - delta[beta]|,
    /// with the convolution summed over |g| <= max(window + 2m, precision-
    /// driven truncation limit) and a certified tail bound added. Exactly
    /// zero for m = 1 (computed in rational arithmetic there).
    BigFloat inverse_residual(long window) const;

  private:
    BigFloat tail_bound(int poly_power, long from, long shift) const;

    int m_;
    long grid_count_;
    Rational h_;
    RootSet roots_;
    mpfr_prec_t precision_;
    BigFloat scale_;               // (2m-1)! / h^{2m} = (2m-1)! N^{2m}, exact
    std::vector<BigFloat> q_;      // roots at working precision
    std::vector<BigFloat> a_;      // A_k
};

}  // namespace sardquad
