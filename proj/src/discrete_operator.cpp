#include "sardquad/discrete_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "sardquad/combinatorics.hpp"

namespace sardquad {

Rational g_kernel(int m, const Rational& x) {
    if (m < 1) throw std::invalid_argument("g_kernel: m must be >= 1");
    const Rational num = rational_pow(abs(x), static_cast<unsigned long>(2 * m - 1));
    return num / Rational(2 * factorial(static_cast<unsigned long>(2 * m - 1)));
}

Rational f_rhs(int m, const Rational& x) {
    if (m < 1) throw std::invalid_argument("f_rhs: m must be >= 1");
    if (sgn(x) < 0 || x > 1) throw std::domain_error("f_rhs: x outside [0,1]");
    const Rational num = rational_pow(x, static_cast<unsigned long>(2 * m)) +
                         rational_pow(Rational(1) - x, static_cast<unsigned long>(2 * m));
    return num / Rational(2 * factorial(static_cast<unsigned long>(2 * m)));
}

DiscreteOperator::DiscreteOperator(int m, long grid_count, const RootSet& roots, mpfr_prec_t precision)
    : m_(m),
      grid_count_(grid_count),
      h_(rational(1, grid_count)),
      roots_(roots),
      precision_(precision),
      scale_(0L, precision) {
    if (m < 1) throw std::invalid_argument("DiscreteOperator: m must be >= 1");
    if (grid_count < 1) throw std::invalid_argument("DiscreteOperator: grid count must be >= 1");
    if (roots.m() != m || roots.size() != m - 1)
        throw std::invalid_argument("DiscreteOperator: root set does not match m");

    const Int scale_int =
        factorial(static_cast<unsigned long>(2 * m - 1)) * int_pow(Int(grid_count), static_cast<unsigned long>(2 * m));
    scale_ = BigFloat(scale_int, precision);

    const EFPolynomial e_odd = ef_by_recurrence(2 * m - 1);
    q_.reserve(static_cast<size_t>(m - 1));
    a_.reserve(static_cast<size_t>(m - 1));
    for (int k = 0; k < m - 1; ++k) {
        BigFloat q = roots.value(k).round_to(precision);
        BigFloat numer = pow_ui(1L - q, static_cast<unsigned long>(2 * m + 1));
        BigFloat denom = q * e_odd.eval(q);
        q_.push_back(q);
        a_.push_back(numer / denom);
    }
}

BigFloat DiscreteOperator::value(long beta) const {
    const unsigned long b = static_cast<unsigned long>(beta < 0 ? -beta : beta);
    BigFloat acc(0L, precision_);
    for (size_t k = 0; k < q_.size(); ++k) acc += a_[k] * pow_ui(q_[k], b);
    if (b == 1) acc = acc + 1L;
    if (b == 0) acc -= BigFloat(int_pow(Int(2), static_cast<unsigned long>(2 * m_ - 1)), precision_);
    return scale_ * acc;
}

Rational DiscreteOperator::value_exact(long beta) const {
    if (m_ != 1) throw std::logic_error("DiscreteOperator::value_exact: only the m = 1 stencil is rational");
    const long b = beta < 0 ? -beta : beta;
    const Rational n_sq(Int(grid_count_) * Int(grid_count_));
    if (b == 0) return -2 * n_sq;
    if (b == 1) return n_sq;
    return Rational(0);
}

long DiscreteOperator::truncation_limit(int k) const {
    if (m_ == 1) return 1;  // finite support
    double r = roots_.max_abs().to_double();
    r = std::nextafter(r, 1.0);
    // 64 guard bits keep the certified tail bound well below the rounding
    // floor of the truncated sum itself
    const double bits = static_cast<double>(precision_) + 64.0;
    long t = static_cast<long>(std::ceil(bits * std::log(2.0) / -std::log(r))) + 1;
    if (t < 4 * m_ + 2) t = 4 * m_ + 2;
    // grow until the polynomial factor cannot outrun the geometric decay:
    // r (1 + 1/(t+1))^k <= (1+r)/2 < 1
    const double target = (1.0 + r) / 2.0;
    while (r * std::pow(1.0 + 1.0 / static_cast<double>(t + 1), k) > target) t *= 2;
    return t;
}

BigFloat DiscreteOperator::moment(int k) const {
    if (k < 0) throw std::invalid_argument("DiscreteOperator::moment: negative power");
    if (m_ == 1) {
        // exact: only beta in {-1, 0, 1} contribute
        Rational acc(0);
        for (long beta = -1; beta <= 1; ++beta) {
            Rational x = h_ * rational(beta);
            Rational xk = (k == 0) ? Rational(1) : rational_pow(x, static_cast<unsigned long>(k));
            acc += value_exact(beta) * xk;
        }
        return BigFloat(acc, precision_);
    }
    const long t = truncation_limit(k);
    BigFloat acc(0L, precision_);
    for (long beta = -t; beta <= t; ++beta) {
        Rational x = h_ * rational(beta);
        Rational xk = (k == 0) ? Rational(1) : rational_pow(x, static_cast<unsigned long>(k));
        acc += value(beta) * xk;
    }
    return acc;
}

Rational DiscreteOperator::moment_expected(int k) const {
    if (k < 0 || k > 4 * m_) throw std::out_of_range("DiscreteOperator::moment_expected: k outside [0, 4m]");
    if (k == 2 * m_) return Rational(factorial(static_cast<unsigned long>(2 * m_)));
    if (k == 4 * m_) {
        const Rational b2m = bernoulli(2 * m_);
        return rational_pow(h_, static_cast<unsigned long>(2 * m_)) *
               Rational(factorial(static_cast<unsigned long>(4 * m_))) * b2m /
               Rational(factorial(static_cast<unsigned long>(2 * m_)));
    }
    return Rational(0);
}

BigFloat DiscreteOperator::tail_bound(int poly_power, long from, long shift) const {
    // bounds scale * sum_k |A_k| sum_{g >= from} |q_k|^g (h (g + shift))^poly_power
    // by the first term over 1 - rho with rho = |q| ((from+1+shift)/(from+shift))^p.
    BigFloat bound(0L, precision_);
    const Rational h_first = h_ * rational(from + shift);
    for (size_t k = 0; k < q_.size(); ++k) {
        BigFloat aq = abs(q_[k]);
        BigFloat first = abs(a_[k]) * pow_ui(aq, static_cast<unsigned long>(from)) *
                         BigFloat(rational_pow(h_first, static_cast<unsigned long>(poly_power)), precision_);
        BigFloat growth(Rational(rational(from + 1 + shift) / rational(from + shift)), precision_);
        BigFloat rho = aq * pow_ui(growth, static_cast<unsigned long>(poly_power));
        if (!(rho < 1.0))
            throw std::logic_error("DiscreteOperator::tail_bound: tail ratio not summable; truncation too short");
        bound += first / (1L - rho);
    }
    return scale_ * bound;
}

BigFloat DiscreteOperator::moment_residual(int k) const {
    const BigFloat expected(moment_expected(k), precision_);
    BigFloat residual = abs(moment(k) - expected);
    if (m_ == 1) return residual;  // exact path
    const long t = truncation_limit(k);
    // both tails, doubled again as rounding slack on the bound itself
    residual += 4L * tail_bound(k, t + 1, 0);
    return residual;
}

BigFloat DiscreteOperator::inverse_residual(long window) const {
    if (window < 2 * m_) throw std::invalid_argument("DiscreteOperator::inverse_residual: window must be >= 2m");

    if (m_ == 1) {
        // the (1, -2, 1)/h^2 stencil against |x|/2 is exact; compute in
        // rationals and report the true (zero) residual
        Rational worst(0);
        for (long beta = -window; beta <= window; ++beta) {
            Rational conv(0);
            for (long g = -1; g <= 1; ++g)  // stencil support
                conv += value_exact(g) * g_kernel(1, h_ * rational(beta - g));
            Rational r = h_ * conv - (beta == 0 ? Rational(1) : Rational(0));
            if (abs(r) > worst) worst = abs(r);
        }
        return BigFloat(worst, precision_);
    }

    long t = truncation_limit(2 * m_ - 1);
    if (t < window + 2 * m_) t = window + 2 * m_;

    DiscreteSignal<BigFloat> d;
    d.lo = -t;
    d.values.reserve(static_cast<size_t>(2 * t + 1));
    for (long beta = -t; beta <= t; ++beta) d.values.push_back(value(beta));

    DiscreteSignal<BigFloat> g;
    g.lo = -(t + window);
    g.values.reserve(static_cast<size_t>(2 * (t + window) + 1));
    for (long gamma = -(t + window); gamma <= t + window; ++gamma)
        g.values.push_back(BigFloat(g_kernel(m_, h_ * rational(gamma)), precision_));

    const DiscreteSignal<BigFloat> conv = convolve(d, g);

    const BigFloat zero(0L, precision_);
    BigFloat worst(0L, precision_);
    for (long beta = -window; beta <= window; ++beta) {
        BigFloat r = conv.at(beta, zero) * h_;
        if (beta == 0) r = r - 1L;
        r = abs(r);
        if (r > worst) worst = r;
    }
    // truncated |g| > t portion, both sides, with |beta - g| <= g + window
    BigFloat tail = 2L * tail_bound(2 * m_ - 1, t + 1, window) * h_;
    return worst + 2L * tail;
}

}  // namespace sardquad
