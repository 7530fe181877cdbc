#pragma once

#include "indexforge/rational.hpp"

#include <vector>

namespace indexforge {

/// Truncated univariate power series c_0 + c_1 x + ... + c_N x^N over the rationals.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

    static PowerSeries constant(const Rational& c, int order);
    /// e^{a x} to the given order.
    static PowerSeries exponential(const Rational& a, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    /// Zero past the stored order.
    Rational coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;
    PowerSeries inverse() const;  // requires c_0 != 0
    PowerSeries log() const;      // requires c_0 == 1
    PowerSeries exp() const;      // requires c_0 == 0
    /// f(x) -> f(a x).
    PowerSeries scaled(const Rational& a) const;
    /// Divides by x; requires c_0 == 0.
    PowerSeries shifted_down() const;

    bool is_even() const;
    bool is_odd() const;
    /// For even f returns h with f(x) = h(x^2); for odd f returns h with f(x) = x h(x^2).
    PowerSeries in_square() const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const Rational& s);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Series in y = x^2 of (sqrt(y)/2) / sinh(sqrt(y)/2); the A-hat genus.
PowerSeries a_hat_series(int order);
/// Series in y = x^2 of sqrt(y) / tanh(sqrt(y)); the Hirzebruch L genus.
PowerSeries l_series(int order);

}  // namespace indexforge
