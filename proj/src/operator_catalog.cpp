#include "indexforge/operator_catalog.hpp"

#include "indexforge/characteristic.hpp"

#include <stdexcept>

namespace indexforge {

OperatorSpec::OperatorSpec(OperatorFamily family, int n, int j, int mu)
    : family_(family), n_(n), j_(j), mu_(mu)
{
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("cataloged operators live in even dimension >= 2, got n = " +
                                    std::to_string(n));
    }
}

OperatorSpec OperatorSpec::dirac(int n)
{
    return OperatorSpec(OperatorFamily::Dirac, n, 0, 0);
}

OperatorSpec OperatorSpec::higher_dirac(int j, int n)
{
    if (j < 0 || j > n / 2 - 1) {
        throw std::invalid_argument("higher Dirac operator needs 0 <= j <= " +
                                    std::to_string(n / 2 - 1) + ", got j = " + std::to_string(j));
    }
    return OperatorSpec(OperatorFamily::HigherDirac, n, j, 0);
}

OperatorSpec OperatorSpec::rarita_schwinger(int n)
{
    if (n < 4) {
        throw std::invalid_argument("Rarita-Schwinger operator needs n >= 4");
    }
    return OperatorSpec(OperatorFamily::RaritaSchwinger, n, 1, 0);
}

OperatorSpec OperatorSpec::higher_signature(int mu)
{
    if (mu < 0) {
        throw std::invalid_argument("higher signature operator needs mu >= 0");
    }
    return OperatorSpec(OperatorFamily::HigherSignature, 4, 0, mu);
}

Structure OperatorSpec::structure() const
{
    return family_ == OperatorFamily::HigherSignature ? Structure::Oriented : Structure::Spin;
}

std::string OperatorSpec::name() const
{
    switch (family_) {
    case OperatorFamily::Dirac:
        return "dirac";
    case OperatorFamily::HigherDirac:
        return "higher-dirac";
    case OperatorFamily::RaritaSchwinger:
        return "rarita-schwinger";
    case OperatorFamily::HigherSignature:
        return "higher-signature";
    }
    return {};
}

ChiralData chiral_data(const OperatorSpec& spec)
{
    const int n = spec.n();
    const int l = n / 2;
    std::vector<Rational> w;
    if (spec.family() == OperatorFamily::HigherSignature) {
        w = {Rational(spec.mu() + 1), Rational(spec.mu())};
    } else {
        for (int i = 0; i < l; ++i) {
            w.push_back(i < spec.j() ? Rational(3, 2) : Rational(1, 2));
        }
    }
    DominantWeight positive(std::move(w), n);
    DominantWeight negative = module_type(positive).conjugate;
    const Integer rank = weyl_dim(positive);
    return {std::move(positive), std::move(negative), rank};
}

GradedClass higher_dirac_integrand(int j, int n)
{
    if (n < 2 || n % 2 != 0 || j < 0 || j > n / 2 - 1) {
        throw std::invalid_argument("higher Dirac integrand needs even n and 0 <= j <= n/2 - 1");
    }
    const GradedClass bundle = exterior_power_character(n, j) + exterior_power_character(n, j - 1);
    return bundle * a_hat_class(n);
}

GradedClass rarita_schwinger_integrand(int n)
{
    return higher_dirac_integrand(1, n);
}

GradedClass dirac_euler_quotient(int n, int max_degree)
{
    const int top = max_degree < 0 ? n : max_degree;
    // 2 sinh(x/2)/x as a series in x
    std::vector<Rational> c(static_cast<std::size_t>(top / 2 + 2));
    Rational term(1);
    for (std::size_t k = 0; k < c.size(); k += 2) {
        c[k] = term;
        term /= Rational(4 * static_cast<long>((k + 2) * (k + 3)));
    }
    GradedClass q = chern_root_expression(RootExpression::root_product(PowerSeries(c)), n, top);
    return (n / 2) % 2 == 0 ? q : -q;
}

GradedClass c1_branch(Branch branch, int max_degree)
{
    const Rational s = branch == Branch::Plus ? Rational(2) : Rational(-2);
    return GradedClass::pontryagin(4, 1, max_degree) + GradedClass::euler(4, max_degree) * s;
}

GradedClass signature_ch_closed_form(int mu, Branch branch)
{
    const Rational m(mu);
    const Rational a = m / 6 + m * m / 2 + m * m * m / 3;
    return GradedClass::constant(4, 1 + 2 * m) + c1_branch(branch) * a;
}

GradedClass signature_shifted_ch_closed_form(int mu, Branch branch)
{
    const Rational m(mu);
    const Rational a = Rational(2, 3) * (m * m * m + 3 * m * m + 2 * m);
    return GradedClass::constant(4, 4 * (m + 1)) + c1_branch(branch) * a +
           GradedClass::pontryagin(4, 1) * (m + 1);
}

SignatureCharacters signature_ch_recurrence(int mu_max, Branch branch, int max_degree)
{
    if (mu_max < 0) {
        throw std::invalid_argument("mu_max must be >= 0");
    }
    // ch V_{(1,+-1)} = 1 + 2 cosh(sqrt(c)) = 3 + c + c^2/12, ch V_{(1,0)} = ch T_C.
    const GradedClass c = c1_branch(branch, max_degree);
    const GradedClass one = GradedClass::constant(4, Rational(1), max_degree);
    const GradedClass seed = one * Rational(3) + c + c * c * Rational(1, 12);
    const GradedClass vector_rep = adams_character(4, 1, max_degree);

    SignatureCharacters out;
    out.diagonal = {one, seed};
    for (int mu = 1; mu <= mu_max; ++mu) {
        const auto i = static_cast<std::size_t>(mu);
        out.diagonal.push_back(out.diagonal[i] * (seed - one) - out.diagonal[i - 1]);
    }
    out.shifted = {vector_rep};
    for (int mu = 1; mu <= mu_max; ++mu) {
        const auto i = static_cast<std::size_t>(mu);
        out.shifted.push_back(out.diagonal[i] * vector_rep - out.shifted[i - 1]);
    }
    return out;
}

GradedClass higher_signature_integrand(int mu)
{
    if (mu < 0) {
        throw std::invalid_argument("higher signature operator needs mu >= 0");
    }
    const int top = 8;
    const auto plus = signature_ch_recurrence(mu, Branch::Plus, top);
    const auto minus = signature_ch_recurrence(mu, Branch::Minus, top);
    const auto i = static_cast<std::size_t>(mu);
    // W+ = V(mu,mu) + V(mu+1,-mu) + V(mu+1,mu+1), W- the conjugate modules.
    const GradedClass w_plus = plus.diagonal[i] + minus.shifted[i] + plus.diagonal[i + 1];
    const GradedClass w_minus = minus.diagonal[i] + plus.shifted[i] + minus.diagonal[i + 1];
    const GradedClass quotient = (w_plus - w_minus).divided_by_euler().truncated(4);
    const GradedClass ahat = a_hat_class(4);
    return quotient * ahat * ahat;
}

GradedClass integrand(const OperatorSpec& spec)
{
    switch (spec.family()) {
    case OperatorFamily::Dirac: {
        const int n = spec.n();
        const GradedClass ahat = a_hat_class(n);
        const GradedClass q = dirac_euler_quotient(n) * ahat * ahat;
        return (n / 2) % 2 == 0 ? q : -q;
    }
    case OperatorFamily::HigherDirac:
    case OperatorFamily::RaritaSchwinger:
        return higher_dirac_integrand(spec.j(), spec.n());
    case OperatorFamily::HigherSignature:
        return higher_signature_integrand(spec.mu());
    }
    throw std::logic_error("unknown operator family");
}

GradedClass twisted_integrand(const OperatorSpec& spec)
{
    return GradedClass::generic_twist(spec.n()) * integrand(spec);
}

}  // namespace indexforge
