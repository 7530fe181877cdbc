#pragma once

#include "indexforge/partition.hpp"
#include "indexforge/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace indexforge {

/// A monomial p_I * e^a * ch_k in the characteristic-class ring.
///
/// The ch slot is linear: a monomial carries at most one Chern-character
/// factor (the twist slot), and `ch == -1` means no twist factor at all.
struct Monomial {
    Partition pontryagin;
    int euler = 0;
    int ch = -1;

    /// Cohomological degree for ambient dimension n: 4|I| + n a + 2k.
    int degree(int ambient_dim) const;
    std::string to_string() const;
    static Monomial parse(std::string_view text);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.ch != b.ch) {
            return a.ch < b.ch;
        }
        if (a.euler != b.euler) {
            return a.euler < b.euler;
        }
        return a.pontryagin < b.pontryagin;
    }
};

/// Truncated graded-commutative polynomial in p_1..p_l (deg 4i), e (deg n) and ch_k (deg 2k),
/// for ambient dimension n = 2l.
///
/// Products drop every monomial above `max_degree` (default n). A product e*e is rewritten
/// as p_l. Arithmetic returns new classes; `add_term` is the only in-place builder.
class GradedClass {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit GradedClass(int ambient_dim);
    GradedClass(int ambient_dim, int max_degree);

    static GradedClass constant(int ambient_dim, const Rational& c, int max_degree = -1);
    static GradedClass pontryagin(int ambient_dim, int i, int max_degree = -1);
    static GradedClass euler(int ambient_dim, int max_degree = -1);
    static GradedClass chern_character(int ambient_dim, int k, int max_degree = -1);
    /// ch_0 + ch_1 + ... + ch_l: the Chern character of a generic twist.
    static GradedClass generic_twist(int ambient_dim, int max_degree = -1);
    static GradedClass monomial(int ambient_dim, const Monomial& m, const Rational& c,
                                int max_degree = -1);

    int ambient_dim() const { return dim_; }
    int half_dim() const { return dim_ / 2; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const& { return terms_; }
    // By value on temporaries so `c.part(d).terms()` is safe in a range-for.
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    /// Homogeneous part of one degree.
    GradedClass part(int degree) const;
    GradedClass truncated(int max_degree) const;
    /// Same terms, reinterpreted with a larger truncation bound.
    GradedClass with_max_degree(int max_degree) const;

    /// Strips one factor of e from every monomial; throws if some monomial has none.
    GradedClass divided_by_euler() const;
    /// ch_k -> s * ch_k for every k.
    GradedClass scaled_twist(const Rational& s) const;

    /// Monomials sorted by degree, then ch slot, then Euler factor, then canonical partition order.
    std::vector<std::pair<Monomial, Rational>> canonical_terms() const;
    std::string to_string() const;

    GradedClass& operator+=(const GradedClass& other);
    GradedClass& operator-=(const GradedClass& other);
    GradedClass& operator*=(const Rational& s);
    GradedClass operator-() const;

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
    friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend bool operator==(const GradedClass& a, const GradedClass& b);

    /// Adds c * m, rewriting e^2 and dropping it when above max_degree.
    void add_term(Monomial m, const Rational& c);

private:
    void check_compatible(const GradedClass& other) const;

    int dim_;
    int max_degree_;
    Terms terms_;
};

/// Power-series evaluation sum_k c_k X^k in the truncated ring; X must have no degree-0 part.
GradedClass evaluate_series(const std::vector<Rational>& coefficients, const GradedClass& x);

}  // namespace indexforge
