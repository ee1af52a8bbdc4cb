#include "sardquad/combinatorics.hpp"

#include <stdexcept>

namespace sardquad {

BernoulliTable::BernoulliTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("BernoulliTable: negative size");
    b_.reserve(static_cast<size_t>(n_max) + 1);
    b_.push_back(Rational(1));
    for (int n = 1; n <= n_max; ++n) {
        Rational acc(0);
        for (int j = 0; j < n; ++j)
            acc += Rational(binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(j))) * b_[static_cast<size_t>(j)];
        b_.push_back(rational(-acc.get_num(), acc.get_den() * (n + 1)));
    }
}

const Rational& BernoulliTable::value(int n) const {
    if (n < 0 || n > max_index()) throw std::out_of_range("BernoulliTable::value");
    return b_[static_cast<size_t>(n)];
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    return BernoulliTable(n).value(n);
}

FiniteDifferenceTable::FiniteDifferenceTable(int i_max, int j_max)
    : i_max_(i_max), j_max_(j_max) {
    if (i_max < 0 || j_max < 0) throw std::invalid_argument("FiniteDifferenceTable: negative size");
    entries_.resize(static_cast<size_t>(i_max + 1) * static_cast<size_t>(j_max + 1));
    for (int i = 0; i <= i_max; ++i)
        for (int j = 0; j <= j_max; ++j) {
            Rational v = delta_power(i, j);
            entries_[static_cast<size_t>(i) * static_cast<size_t>(j_max + 1) + static_cast<size_t>(j)] = v.get_num();
        }
}

const Int& FiniteDifferenceTable::value(int i, int j) const {
    if (i < 0 || i > i_max_ || j < 0 || j > j_max_) throw std::out_of_range("FiniteDifferenceTable::value");
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(j_max_ + 1) + static_cast<size_t>(j)];
}

Rational delta_power(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("delta_power: negative argument");
    if (i > j) return Rational(0);
    Int acc(0);
    for (int a = 0; a <= i; ++a) {
        Int term = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(a));
        if (j == 0) {
            // a^0 = 1, including a = 0
        } else {
            term *= int_pow(Int(a), static_cast<unsigned long>(j));
        }
        if ((i - a) % 2 != 0)
            acc -= term;
        else
            acc += term;
    }
    return Rational(acc);
}

Int delta_power_at(int i, int k, long n) {
    if (i < 0 || k < 0) throw std::invalid_argument("delta_power_at: negative order");
    Int acc(0);
    for (int a = 0; a <= i; ++a) {
        Int base(n + a);
        Int term = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(a));
        if (k == 0) {
            // base^0 = 1
        } else {
            term *= int_pow(base, static_cast<unsigned long>(k));
        }
        if ((i - a) % 2 != 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

}  // namespace sardquad
