#include "indexforge/index_engine.hpp"

#include <memory>
#include <sstream>
#include <string>

namespace indexforge {

namespace {

void check_compatible(const OperatorSpec& spec, const ManifoldDescriptor& M)
{
    if (M.dim != spec.n()) {
        std::ostringstream msg;
        msg << spec.name() << " acts in dimension " << spec.n() << " but " << M.name
            << " has dimension " << M.dim;
        throw std::invalid_argument(msg.str());
    }
    if (spec.structure() == Structure::Spin && !M.spin) {
        throw StructureMismatch(spec.name() + " needs a spin structure; " + M.name +
                                " is not spin");
    }
}

ManifoldDescriptor retwisted(const ManifoldDescriptor& M, const std::optional<Twist>& twist)
{
    if (!twist) {
        return M;
    }
    return with_twist(M, *twist);
}

}  // namespace

Rational evaluate_index(const OperatorSpec& spec, const ManifoldDescriptor& M,
                        const std::optional<Twist>& twist)
{
    check_compatible(spec, M);
    // The generic twist pairs to the plain integrand against the trivial line, so one path
    // covers both cases.
    return pair(twisted_integrand(spec), retwisted(M, twist));
}

std::vector<CoefficientVector::Key> coefficient_keys(int n)
{
    if (n < 0) {
        throw std::invalid_argument("negative dimension");
    }
    std::vector<CoefficientVector::Key> keys;
    for (int k = n / 2; k >= 0; --k) {
        if ((n - 2 * k) % 4 != 0) {
            continue;
        }
        for (const Partition& I : partitions((n - 2 * k) / 4)) {
            keys.emplace_back(k, I);
        }
    }
    return keys;
}

CoefficientVector::CoefficientVector(int n) : n_(n)
{
    for (auto& key : coefficient_keys(n)) {
        entries_.emplace(std::move(key), Rational(0));
    }
}

const Rational& CoefficientVector::at(int k, const Partition& I) const
{
    const auto it = entries_.find({k, I});
    if (it == entries_.end()) {
        throw std::out_of_range("no coefficient (" + std::to_string(k) + ", " + I.to_string() +
                                ") in dimension " + std::to_string(n_));
    }
    return it->second;
}

void CoefficientVector::set(int k, const Partition& I, const Rational& value)
{
    const auto it = entries_.find({k, I});
    if (it == entries_.end()) {
        throw std::out_of_range("no coefficient (" + std::to_string(k) + ", " + I.to_string() +
                                ") in dimension " + std::to_string(n_));
    }
    it->second = value;
}

std::vector<CoefficientVector::Key> CoefficientVector::canonical_keys() const
{
    return coefficient_keys(n_);
}

GradedClass CoefficientVector::to_class() const
{
    GradedClass c(n_);
    for (const auto& [key, value] : entries_) {
        if (value != 0) {
            c += GradedClass::monomial(n_, Monomial{key.second, 0, key.first}, value);
        }
    }
    return c;
}

CoefficientVector coefficients_of(const GradedClass& twisted)
{
    const int n = twisted.ambient_dim();
    CoefficientVector v(n);
    for (const auto& [m, c] : twisted.part(n).terms()) {
        if (m.euler != 0 || m.ch < 0) {
            throw std::invalid_argument("term " + m.to_string() +
                                        " does not fit the ch_k p_I coefficient shape");
        }
        v.set(m.ch, m.pontryagin, c);
    }
    return v;
}

IndexOracle index_oracle(const OperatorSpec& spec)
{
    auto density = std::make_shared<const GradedClass>(twisted_integrand(spec));
    return [spec, density](const ManifoldDescriptor& M) {
        check_compatible(spec, M);
        return pair(*density, M);
    };
}

IndexOracle induced_oracle(const CoefficientVector& v)
{
    auto density = std::make_shared<const GradedClass>(v.to_class());
    return [density](const ManifoldDescriptor& M) { return pair(*density, M); };
}

GeneratorSet default_generators(int max_k)
{
    GeneratorSet g;
    if (max_k >= 1) {
        g.emplace(1, builtin_manifold("K3"));
    }
    for (int i = 2; i <= max_k; ++i) {
        g.emplace(i, quaternionic_projective(i));
    }
    return g;
}

ManifoldDescriptor generator_product(const Partition& J, const GeneratorSet& generators)
{
    std::vector<ManifoldDescriptor> factors;
    for (const int part : J.parts()) {
        const auto it = generators.find(part);
        if (it == generators.end()) {
            throw std::invalid_argument("no generator of dimension " + std::to_string(4 * part));
        }
        if (it->second.dim != 4 * part) {
            throw std::invalid_argument("generator " + it->second.name + " should have dimension " +
                                        std::to_string(4 * part));
        }
        factors.push_back(it->second);
    }
    return product(factors);
}

RationalMatrix thom_matrix(int k, const GeneratorSet& generators)
{
    const std::vector<Partition> parts = partitions(k);
    const auto size = static_cast<Eigen::Index>(parts.size());
    RationalMatrix a(size, size);
    for (Eigen::Index row = 0; row < size; ++row) {
        const ManifoldDescriptor M = generator_product(parts[row], generators);
        for (Eigen::Index col = 0; col < size; ++col) {
            a(row, col) = M.pontryagin_number(parts[col]);
        }
    }
    return a;
}

SingularSystem::SingularSystem(int k_, int weight_)
    : std::runtime_error("singular Thom system in block ch_" + std::to_string(k_) +
                         " over partitions of " + std::to_string(weight_)),
      k(k_),
      weight(weight_)
{
}

CoefficientVector coefficient_match(const IndexOracle& oracle, int n, const Rational& c1,
                                    const GeneratorSet& generators)
{
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("coefficient matching needs an even dimension >= 0");
    }
    if (c1 == 0) {
        throw std::invalid_argument("c1 of the CP1 line must be nonzero");
    }
    GeneratorSet gens = generators.empty() ? default_generators(n / 4) : generators;

    CoefficientVector result(n);
    for (int k = n / 2; k >= 0; --k) {
        if ((n - 2 * k) % 4 != 0) {
            continue;
        }
        const int w = (n - 2 * k) / 4;
        const std::vector<Partition> parts = partitions(w);
        const RationalMatrix a = thom_matrix(w, gens);
        const ManifoldDescriptor base = cp1_twist_power(k, c1).manifold();
        Rational scale(1);
        for (int i = 0; i < k; ++i) {
            scale *= c1;
        }

        RationalVector b(a.rows());
        for (std::size_t row = 0; row < parts.size(); ++row) {
            const ManifoldDescriptor M = product(base, generator_product(parts[row], gens));
            b(static_cast<Eigen::Index>(row)) = oracle(M) / scale;
        }
        const auto x = bareiss_solve(a, b);
        if (!x) {
            throw SingularSystem(k, w);
        }
        for (std::size_t col = 0; col < parts.size(); ++col) {
            result.set(k, parts[col], (*x)(static_cast<Eigen::Index>(col)));
        }
    }
    return result;
}

}  // namespace indexforge
