#pragma once

#include <vector>

#include "sardquad/rational.hpp"

namespace sardquad {

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Bernoulli numbers B_0..B_n, first-kind convention (B_1 = -1/2), computed
/// once by the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
class BernoulliTable {
  public:
    explicit BernoulliTable(int n_max);

    const Rational& value(int n) const;
    int max_index() const { return static_cast<int>(b_.size()) - 1; }

  private:
    std::vector<Rational> b_;
};

Rational bernoulli(int n);

/// Forward differences of the power function at zero: entry(i, j) holds the
/// i-th difference of g^j evaluated at g = 0. Integer-valued; zero above the
/// diagonal, j! on it.
class FiniteDifferenceTable {
  public:
    FiniteDifferenceTable(int i_max, int j_max);

    const Int& value(int i, int j) const;
    int max_order() const { return i_max_; }
    int max_power() const { return j_max_; }

  private:
    int i_max_;
    int j_max_;
    std::vector<Int> entries_;  // row-major (i, j)
};

// Alternating-sum form: sum_{a=0}^{i} (-1)^{i-a} C(i,a) a^j  (0^0 = 1).
Rational delta_power(int i, int j);

// i-th forward difference of g^k at g = n (needed by the finite-difference
// expansion of geometric power sums).
Int delta_power_at(int i, int k, long n);

}  // namespace sardquad
