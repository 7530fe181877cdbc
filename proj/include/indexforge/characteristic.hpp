#pragma once

#include "indexforge/graded_class.hpp"
#include "indexforge/power_series.hpp"

#include <memory>
#include <variant>

namespace indexforge {

/// Power sums s_1..s_kmax of the squared Chern roots y_j = x_j^2, written in p_i = e_i(y)
/// by Newton's identities. Entry 0 is unused.
std::vector<GradedClass> newton_power_sums(int ambient_dim, int kmax, int max_degree = -1);

/// Multiplicative sequence K_f = prod_j f(y_j) for f(y) = 1 + c_1 y + ..., truncated to
/// `max_degree` (default n). Throws std::invalid_argument when f(0) != 1.
GradedClass multiplicative_sequence(const PowerSeries& f, int ambient_dim, int max_degree = -1);

GradedClass a_hat_class(int ambient_dim, int max_degree = -1);
GradedClass l_class(int ambient_dim, int max_degree = -1);

/// A symmetric expression in the formal Chern roots x_1..x_l of a real oriented rank-n bundle.
///
/// Leaves are either a sum over roots  sum_j g(x_j)  or a product  prod_j g(x_j)  for a power
/// series g in one root; leaves combine by +, * and rational scaling.
class RootExpression {
public:
    static RootExpression constant(const Rational& c);
    static RootExpression root_sum(PowerSeries g);
    static RootExpression root_product(PowerSeries g);

    friend RootExpression operator+(const RootExpression& a, const RootExpression& b);
    friend RootExpression operator*(const RootExpression& a, const RootExpression& b);
    friend RootExpression operator*(const Rational& s, const RootExpression& a);

    struct Constant {
        Rational value;
    };
    struct Sum {
        PowerSeries g;
    };
    struct Product {
        PowerSeries g;
    };
    struct Add {
        std::shared_ptr<const RootExpression> lhs, rhs;
    };
    struct Mul {
        std::shared_ptr<const RootExpression> lhs, rhs;
    };
    using Node = std::variant<Constant, Sum, Product, Add, Mul>;

    const Node& node() const { return node_; }

private:
    explicit RootExpression(Node node) : node_(std::move(node)) {}
    Node node_;
};

/// Expands a symmetric root expression into p_I (and at most e^1 per product leaf) through
/// `max_degree` (default n). Sums must be even in the root; products must be even, or odd
/// with nonzero linear term (one Euler factor). Anything else is rejected with
/// std::invalid_argument because it is not invariant under root sign flips.
GradedClass chern_root_expression(const RootExpression& expr, int ambient_dim,
                                  int max_degree = -1);

/// sum over the 2l roots {+-x_j} of e^{k root}: the Chern character of the k-th Adams
/// operation of the complexified tangent bundle.
GradedClass adams_character(int ambient_dim, int k, int max_degree = -1);

/// ch(Lambda^j T_C) as the j-th elementary symmetric function of {e^{+-x_i}}, by Newton's
/// identities on the Adams characters. Zero for j < 0 or j > n.
GradedClass exterior_power_character(int ambient_dim, int j, int max_degree = -1);

}  // namespace indexforge
