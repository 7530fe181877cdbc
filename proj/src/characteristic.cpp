#include "indexforge/characteristic.hpp"

#include <stdexcept>

namespace indexforge {

namespace {

int resolve(int ambient_dim, int max_degree)
{
    return max_degree < 0 ? ambient_dim : max_degree;
}

}  // namespace

std::vector<GradedClass> newton_power_sums(int ambient_dim, int kmax, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    std::vector<GradedClass> s;
    s.reserve(static_cast<std::size_t>(kmax + 1));
    s.emplace_back(ambient_dim, top);
    for (int k = 1; k <= kmax; ++k) {
        GradedClass sk = GradedClass::pontryagin(ambient_dim, k, top) * Rational(k % 2 == 1 ? k : -k);
        for (int i = 1; i < k; ++i) {
            const Rational sign(i % 2 == 1 ? 1 : -1);
            sk += GradedClass::pontryagin(ambient_dim, i, top) * s[static_cast<std::size_t>(k - i)] *
                  sign;
        }
        s.push_back(std::move(sk));
    }
    return s;
}

GradedClass multiplicative_sequence(const PowerSeries& f, int ambient_dim, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    if (f.coefficients().empty() || f[0] != 1) {
        throw std::invalid_argument("multiplicative sequence needs a series with f(0) = 1");
    }
    const int order = top / 4;
    const PowerSeries logf = f.truncated(order).log();
    const auto s = newton_power_sums(ambient_dim, order, top);

    GradedClass exponent(ambient_dim, top);
    for (int k = 1; k <= order; ++k) {
        exponent += s[static_cast<std::size_t>(k)] * logf[k];
    }
    std::vector<Rational> exp_coeffs;
    for (int k = 0; k <= order; ++k) {
        exp_coeffs.push_back(Rational(1) / factorial(k));
    }
    return evaluate_series(exp_coeffs, exponent);
}

GradedClass a_hat_class(int ambient_dim, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    return multiplicative_sequence(a_hat_series(top / 4), ambient_dim, top);
}

GradedClass l_class(int ambient_dim, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    return multiplicative_sequence(l_series(top / 4), ambient_dim, top);
}

RootExpression RootExpression::constant(const Rational& c)
{
    return RootExpression(Constant{c});
}

RootExpression RootExpression::root_sum(PowerSeries g)
{
    return RootExpression(Sum{std::move(g)});
}

RootExpression RootExpression::root_product(PowerSeries g)
{
    return RootExpression(Product{std::move(g)});
}

RootExpression operator+(const RootExpression& a, const RootExpression& b)
{
    return RootExpression(RootExpression::Add{std::make_shared<const RootExpression>(a),
                                              std::make_shared<const RootExpression>(b)});
}

RootExpression operator*(const RootExpression& a, const RootExpression& b)
{
    return RootExpression(RootExpression::Mul{std::make_shared<const RootExpression>(a),
                                              std::make_shared<const RootExpression>(b)});
}

RootExpression operator*(const Rational& s, const RootExpression& a)
{
    return RootExpression::constant(s) * a;
}

namespace {

struct Expander {
    int n;
    int top;

    int half() const { return n / 2; }
    // A root has degree 2, so a series in one root is needed through x^(top/2).
    int root_order() const { return top / 2; }

    GradedClass operator()(const RootExpression::Constant& c) const
    {
        return GradedClass::constant(n, c.value, top);
    }

    GradedClass operator()(const RootExpression::Sum& sum) const
    {
        const PowerSeries g = sum.g.truncated(root_order());
        if (!g.is_even()) {
            throw std::invalid_argument(
                "root sum is not invariant under x -> -x; it does not define a Pontryagin class");
        }
        const PowerSeries h = g.in_square();
        const auto s = newton_power_sums(n, h.order(), top);
        GradedClass out = GradedClass::constant(n, h[0] * half(), top);
        for (int k = 1; k <= h.order(); ++k) {
            out += s[static_cast<std::size_t>(k)] * h[k];
        }
        return out;
    }

    GradedClass operator()(const RootExpression::Product& prod) const
    {
        if (half() == 0) {
            return GradedClass::constant(n, Rational(1), top);
        }
        const PowerSeries g = prod.g.truncated(root_order() + 1);
        if (g.is_even() && g[0] != 0) {
            const Rational lead = g[0];
            const PowerSeries h = g.in_square() * (Rational(1) / lead);
            return multiplicative_sequence(h, n, top) * pow_rational(lead, half());
        }
        if (g.is_odd() && g.coefficient(1) != 0) {
            const Rational lead = g[1];
            const PowerSeries h = g.in_square() * (Rational(1) / lead);
            return GradedClass::euler(n, top) * multiplicative_sequence(h, n, top) *
                   pow_rational(lead, half());
        }
        throw std::invalid_argument(
            "root product must be even with nonzero constant term, or odd with nonzero linear "
            "term (one Euler factor)");
    }

    GradedClass operator()(const RootExpression::Add& add) const
    {
        return std::visit(*this, add.lhs->node()) + std::visit(*this, add.rhs->node());
    }

    GradedClass operator()(const RootExpression::Mul& mul) const
    {
        return std::visit(*this, mul.lhs->node()) * std::visit(*this, mul.rhs->node());
    }

    static Rational pow_rational(const Rational& base, int exponent)
    {
        Rational out(1);
        for (int i = 0; i < exponent; ++i) {
            out *= base;
        }
        return out;
    }
};

}  // namespace

GradedClass chern_root_expression(const RootExpression& expr, int ambient_dim, int max_degree)
{
    return std::visit(Expander{ambient_dim, resolve(ambient_dim, max_degree)}, expr.node());
}

GradedClass adams_character(int ambient_dim, int k, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    const int order = top / 2;
    const PowerSeries two_cosh =
        PowerSeries::exponential(Rational(k), order) + PowerSeries::exponential(Rational(-k), order);
    return chern_root_expression(RootExpression::root_sum(two_cosh), ambient_dim, top);
}

GradedClass exterior_power_character(int ambient_dim, int j, int max_degree)
{
    const int top = resolve(ambient_dim, max_degree);
    if (j < 0 || j > ambient_dim) {
        return GradedClass(ambient_dim, top);
    }
    // j E_j = sum_{i=1}^j (-1)^{i-1} E_{j-i} psi_i
    std::vector<GradedClass> e;
    e.push_back(GradedClass::constant(ambient_dim, Rational(1), top));
    std::vector<GradedClass> psi(1, GradedClass(ambient_dim, top));
    for (int i = 1; i <= j; ++i) {
        psi.push_back(adams_character(ambient_dim, i, top));
    }
    for (int m = 1; m <= j; ++m) {
        GradedClass acc(ambient_dim, top);
        for (int i = 1; i <= m; ++i) {
            const Rational sign(i % 2 == 1 ? 1 : -1);
            acc += e[static_cast<std::size_t>(m - i)] * psi[static_cast<std::size_t>(i)] * sign;
        }
        e.push_back(acc * Rational(1, m));
    }
    return e.back();
}

}  // namespace indexforge
