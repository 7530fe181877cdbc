#pragma once

#include "indexforge/graded_class.hpp"
#include "indexforge/partition.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace indexforge {

/// Twisted characteristic numbers <ch_k(xi) p_I, [M]> of a bundle xi over M, keyed by (k, I)
/// with 2k + 4|I| = dim M, for the reference orientation. An absent ch_0 entry reads as
/// rank * p_I[M] on the carrying manifold.
struct Twist {
    Rational rank;
    std::map<std::pair<int, Partition>, Rational> numbers;

    Rational number(int k, const Partition& I) const;
    friend bool operator==(const Twist&, const Twist&) = default;
};

struct ManifoldDescriptor {
    std::string name;
    int dim = 0;
    int orientation = 1;
    /// p_I[M] for every partition I of dim/4, for the reference orientation. Empty unless
    /// 4 divides dim.
    std::map<Partition, Rational> pontryagin_numbers;
    long long euler_char = 0;
    /// Signature for the current orientation; present exactly when 4 divides dim.
    std::optional<long long> signature;
    bool spin = false;
    std::optional<Twist> twist;

    Rational pontryagin_number(const Partition& I) const;
    /// Twisted numbers of the attached twist, or of the trivial line bundle if none.
    Rational twisted_number(int k, const Partition& I) const;
    Rational twist_rank() const;

    friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

/// <c, [M]>: top-degree part of c evaluated on M. p_I and ch_k p_I pair through the stored
/// numbers times the orientation; e pairs to the Euler characteristic (orientation free, as
/// e(TM) flips together with [M]). Throws std::invalid_argument on a dimension mismatch.
Rational pair(const GradedClass& c, const ManifoldDescriptor& M);

/// Cartesian product. Pontryagin and twisted numbers by the Whitney product formula;
/// twists are combined by external tensor product (a missing twist is the trivial line).
ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

/// Product of a list, left to right; the empty product is the point.
ManifoldDescriptor product(const std::vector<ManifoldDescriptor>& factors);

ManifoldDescriptor reverse_orientation(const ManifoldDescriptor& M);

/// Same manifold with a different twist. Missing ch_0 entries are filled in as rank * p_I[M].
ManifoldDescriptor with_twist(ManifoldDescriptor M, Twist twist);

/// Whitney sum of two twists on the same manifold.
Twist direct_sum(const Twist& a, const Twist& b);
/// N copies of a twist.
Twist scaled(const Twist& t, const Rational& N);

/// The line bundle xi^{(x) j} over (CP^1)^j, xi = T CP^1 with int_{CP^1} c_1(xi) = c1.
struct Cp1TwistPower {
    int j;
    Rational c1;

    /// <ch_k(xi^{(x) j}), [(CP^1)^k]> summed over the C(j,k) choices of k factors:
    /// binomial(j,k) c1^k, zero for k > j.
    Rational partial_pairing(int k) const;
    /// (CP^1)^j carrying xi^{(x) j}.
    ManifoldDescriptor manifold() const;
};

/// Default value of int_{CP^1} c_1(T CP^1) used by coefficient matching.
inline Rational default_cp1_c1() { return Rational(-2); }

Cp1TwistPower cp1_twist_power(int j, const Rational& c1 = default_cp1_c1());

/// Built-in descriptors: point, CP1, CP2, K3, HP<j> (j >= 1), T<n> (n >= 1).
/// Throws std::invalid_argument for an unknown name.
ManifoldDescriptor builtin_manifold(const std::string& name);
/// Names of the shipped generator set.
std::vector<std::string> shipped_manifold_names();

/// Quaternionic projective space from p = (1+u)^{2j+2} (1+4u)^{-1}, u^j[HP^j] = 1.
ManifoldDescriptor quaternionic_projective(int j);

/// Checks the schema invariants and the signature gate (and A-hat integrality for spin
/// manifolds); throws std::invalid_argument with a diagnostic.
void validate(const ManifoldDescriptor& M);

/// JSON text of an untwisted descriptor.
std::string to_json(const ManifoldDescriptor& M);
/// Parses and validates; `source` labels diagnostics.
ManifoldDescriptor from_json(const std::string& text, const std::string& source = "<string>");

ManifoldDescriptor load_descriptor(const std::filesystem::path& path);
void save_descriptor(const std::filesystem::path& path, const ManifoldDescriptor& M);

/// All *.json descriptors of a directory keyed by name; throws on duplicates.
std::map<std::string, ManifoldDescriptor> load_library(const std::filesystem::path& dir);

}  // namespace indexforge
