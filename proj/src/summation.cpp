#include "sardquad/summation.hpp"

namespace sardquad {

Rational power_sum(int k, long n) {
    if (k < 0) throw std::invalid_argument("power_sum: negative power");
    if (n <= 0) return Rational(0);

    const BernoulliTable bernoulli_table(k + 1);
    const Int k_factorial = factorial(static_cast<unsigned long>(k));
    Rational acc(0);
    Rational n_pow(1);
    const Rational n_rat = rational(n);
    for (int j = 1; j <= k + 1; ++j) {
        n_pow *= n_rat;
        const Int denom = factorial(static_cast<unsigned long>(j)) * factorial(static_cast<unsigned long>(k + 1 - j));
        acc += rational(k_factorial, denom) * bernoulli_table.value(k + 1 - j) * n_pow;
    }
    return acc;
}

}  // namespace sardquad
