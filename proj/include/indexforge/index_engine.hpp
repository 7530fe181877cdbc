#pragma once

#include "indexforge/exact_solve.hpp"
#include "indexforge/graded_class.hpp"
#include "indexforge/manifold.hpp"
#include "indexforge/operator_catalog.hpp"
#include "indexforge/partition.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace indexforge {

/// Raised when a spin-requiring operator meets a manifold without a spin structure.
struct StructureMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// ind D^xi = <ch(xi) * integrand(spec), [M]>. `twist` replaces the twist carried by M when
/// given; without either, xi is the trivial line.
Rational evaluate_index(const OperatorSpec& spec, const ManifoldDescriptor& M,
                        const std::optional<Twist>& twist = std::nullopt);

/// Coefficients b_{k,I} of sum_k ch_k(xi) sum_I b_{k,I} p_I over all k with (n - 2k)/4 integral.
class CoefficientVector {
public:
    using Key = std::pair<int, Partition>;

    /// All entries zero.
    explicit CoefficientVector(int n);

    int n() const { return n_; }
    const std::map<Key, Rational>& entries() const { return entries_; }
    const Rational& at(int k, const Partition& I) const;
    /// Throws std::out_of_range for a key outside the shape.
    void set(int k, const Partition& I, const Rational& value);

    /// Keys in canonical order: k descending, then partitions in canonical order.
    std::vector<Key> canonical_keys() const;
    /// The class sum b_{k,I} ch_k p_I.
    GradedClass to_class() const;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

private:
    int n_;
    std::map<Key, Rational> entries_;
};

/// Keys (k, I) with 2k + 4|I| = n, canonical order.
std::vector<CoefficientVector::Key> coefficient_keys(int n);

/// Reads the coefficient shape out of a twisted integrand. Euler terms are rejected.
CoefficientVector coefficients_of(const GradedClass& twisted);

using IndexOracle = std::function<Rational(const ManifoldDescriptor&)>;

/// Oracle M -> evaluate_index(spec, M) using the twist carried by M.
IndexOracle index_oracle(const OperatorSpec& spec);
/// Oracle M -> <v.to_class(), [M]>.
IndexOracle induced_oracle(const CoefficientVector& v);

/// Generators M_i of dimension 4i. Default: M_1 = K3, M_i = HP^i.
using GeneratorSet = std::map<int, ManifoldDescriptor>;
GeneratorSet default_generators(int max_k);

/// Product M_J of generators over the parts of J; the point for the empty partition.
ManifoldDescriptor generator_product(const Partition& J, const GeneratorSet& generators);

/// (p_I[M_J]) with rows J and columns I running over partitions of k in canonical order.
RationalMatrix thom_matrix(int k, const GeneratorSet& generators);

struct SingularSystem : std::runtime_error {
    SingularSystem(int k, int weight);
    int k;       // ch degree of the offending block
    int weight;  // partition weight of the block
};

/// Solves for the coefficient vector reproducing `oracle` on (CP^1)^k x M_J carrying
/// xi^{(x) k}, one block per k.
CoefficientVector coefficient_match(const IndexOracle& oracle, int n,
                                    const Rational& c1 = default_cp1_c1(),
                                    const GeneratorSet& generators = {});

}  // namespace indexforge
