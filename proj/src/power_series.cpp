#include "indexforge/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace indexforge {

PowerSeries PowerSeries::constant(const Rational& c, int order)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(order + 1));
    coeffs[0] = c;
    return PowerSeries(std::move(coeffs));
}

PowerSeries PowerSeries::exponential(const Rational& a, int order)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(order + 1));
    Rational term(1);
    for (int k = 0; k <= order; ++k) {
        coeffs[static_cast<std::size_t>(k)] = term;
        term = term * a / (k + 1);
    }
    return PowerSeries(std::move(coeffs));
}

Rational PowerSeries::coefficient(int i) const
{
    if (i < 0 || i > order()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

PowerSeries PowerSeries::truncated(int order) const
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(order + 1));
    for (int i = 0; i <= order; ++i) {
        coeffs[static_cast<std::size_t>(i)] = coefficient(i);
    }
    return PowerSeries(std::move(coeffs));
}

PowerSeries PowerSeries::inverse() const
{
    if (coeffs_.empty() || coeffs_[0] == 0) {
        throw std::domain_error("power series with zero constant term is not invertible");
    }
    const int n = order();
    std::vector<Rational> inv(static_cast<std::size_t>(n + 1));
    inv[0] = Rational(1) / coeffs_[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            acc += coeffs_[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
        }
        inv[static_cast<std::size_t>(k)] = -acc * inv[0];
    }
    return PowerSeries(std::move(inv));
}

PowerSeries PowerSeries::log() const
{
    if (coeffs_.empty() || coeffs_[0] != 1) {
        throw std::domain_error("log requires constant term 1");
    }
    // (log f)' = f' / f
    const int n = order();
    std::vector<Rational> deriv(static_cast<std::size_t>(std::max(n, 1)));
    for (int i = 1; i <= n; ++i) {
        deriv[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * i;
    }
    const PowerSeries quotient = PowerSeries(deriv) * truncated(n - 1 < 0 ? 0 : n - 1).inverse();
    std::vector<Rational> out(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
        out[static_cast<std::size_t>(i)] = quotient.coefficient(i - 1) / i;
    }
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::exp() const
{
    if (!coeffs_.empty() && coeffs_[0] != 0) {
        throw std::domain_error("exp requires constant term 0");
    }
    // g = exp(f) satisfies k g_k = sum_{i=1}^k i f_i g_{k-i}
    const int n = order();
    std::vector<Rational> g(static_cast<std::size_t>(n + 1));
    g[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            acc += coeffs_[static_cast<std::size_t>(i)] * i * g[static_cast<std::size_t>(k - i)];
        }
        g[static_cast<std::size_t>(k)] = acc / k;
    }
    return PowerSeries(std::move(g));
}

PowerSeries PowerSeries::scaled(const Rational& a) const
{
    PowerSeries out = *this;
    Rational power(1);
    for (auto& c : out.coeffs_) {
        c *= power;
        power *= a;
    }
    return out;
}

PowerSeries PowerSeries::shifted_down() const
{
    if (!coeffs_.empty() && coeffs_[0] != 0) {
        throw std::domain_error("cannot divide by x: nonzero constant term");
    }
    if (coeffs_.size() <= 1) {
        return PowerSeries({Rational(0)});
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

bool PowerSeries::is_even() const
{
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool PowerSeries::is_odd() const
{
    for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

PowerSeries PowerSeries::in_square() const
{
    const bool even = is_even();
    if (!even && !is_odd()) {
        throw std::domain_error("series has neither even nor odd parity");
    }
    std::vector<Rational> out;
    for (std::size_t i = even ? 0 : 1; i < coeffs_.size(); i += 2) {
        out.push_back(coeffs_[i]);
    }
    if (out.empty()) {
        out.emplace_back(0);
    }
    return PowerSeries(std::move(out));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    // Product truncated at the smaller order: beyond it one factor is unknown.
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(std::max(n, 0) + 1));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            out[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries a_hat_series(int order)
{
    // sinh(z)/z with z = sqrt(y)/2: sum_k (y/4)^k / (2k+1)!
    std::vector<Rational> s(static_cast<std::size_t>(order + 1));
    for (int k = 0; k <= order; ++k) {
        Rational quarter_power(1);
        for (int i = 0; i < k; ++i) {
            quarter_power /= 4;
        }
        s[static_cast<std::size_t>(k)] = quarter_power / factorial(2 * k + 1);
    }
    return PowerSeries(std::move(s)).inverse();
}

PowerSeries l_series(int order)
{
    // sqrt(y) cosh(sqrt(y)) / sinh(sqrt(y)) = [sum y^k/(2k)!] / [sum y^k/(2k+1)!]
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    std::vector<Rational> s(static_cast<std::size_t>(order + 1));
    for (int k = 0; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = Rational(1) / factorial(2 * k);
        s[static_cast<std::size_t>(k)] = Rational(1) / factorial(2 * k + 1);
    }
    return PowerSeries(std::move(c)) * PowerSeries(std::move(s)).inverse();
}

}  // namespace indexforge
