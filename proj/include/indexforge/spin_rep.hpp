#pragma once

#include "indexforge/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace indexforge {

/// Dominant weight of Spin(n) or SO(n), rank m = floor(n/2). Entries are all integers or
/// all in 1/2 + Z.
class DominantWeight {
public:
    /// Throws std::invalid_argument unless the entries form a dominant weight for n.
    DominantWeight(std::vector<Rational> entries, int n);

    /// Comma separated entries, e.g. "3/2,1/2".
    static DominantWeight parse(const std::string& text, int n);

    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    int n() const { return n_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    bool half_integral() const;

    /// "(3/2,1/2)"
    std::string to_string() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend bool operator<(const DominantWeight& a, const DominantWeight& b)
    {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Rational> entries_;
    int n_;
};

bool is_dominant(const std::vector<Rational>& entries, int n);

/// Dimension of V_lambda from the product over positive roots of B_m (n odd) or D_m (n even).
Integer weyl_dim(const DominantWeight& lambda);

/// A shift +e_i, -e_i (index 1..m) or the zero weight (index 0, sign 0).
struct Target {
    int index = 0;
    int sign = 0;

    static Target plus(int i) { return {i, 1}; }
    static Target minus(int i) { return {i, -1}; }
    static Target zero() { return {0, 0}; }

    bool is_zero() const { return index == 0; }
    Target negated() const { return {index, -sign}; }
    /// "+e1", "-e2", "0"
    std::string to_string() const;
    static Target parse(const std::string& text);

    friend bool operator==(const Target&, const Target&) = default;
    /// Display order: +e1, -e1, +e2, -e2, ..., 0.
    friend bool operator<(const Target& a, const Target& b);
};

using TargetSet = std::vector<Target>;

/// Sorted copy of a target set in display order.
TargetSet normalized(TargetSet set);

/// lambda + eps if that is dominant, std::nullopt otherwise.
std::optional<DominantWeight> shifted(const DominantWeight& lambda, const Target& eps);

/// Labels of the irreducible summands V_{lambda+eps} of R^n (x) V_lambda.
TargetSet fegan_targets(const DominantWeight& lambda);

/// Target sets I for which G_{lambda,I} is minimal elliptic, restricted to sets whose
/// elements all occur in fegan_targets(lambda).
std::vector<TargetSet> classify_minimal_elliptic(const DominantWeight& lambda);

struct GradientSelector {
    DominantWeight weight;
    TargetSet targets;
};

/// True iff D_{lambda,I} is an elliptic generalized gradient. Throws std::invalid_argument if
/// a target is not a summand of R^n (x) V_lambda or the set is empty or repeats an element.
bool is_elliptic_gradient(const GradientSelector& selector);

enum class DefectBranch { Plus, Minus };

/// dim V_{lambda-e1} + dim V_{lambda+-e2} - dim V_lambda for Spin(4). Requires
/// lambda1 - 1 >= lambda2 >= 0 (Plus) or lambda1 - 1 >= -lambda2 >= 0 (Minus).
Rational dim_defect(const DominantWeight& lambda, DefectBranch branch);

enum class ModuleType { I, II };

struct ModuleTypeResult {
    ModuleType type;
    DominantWeight conjugate;
};

/// Behaviour under the orientation reversing extension; n must be even.
ModuleTypeResult module_type(const DominantWeight& lambda);

}  // namespace indexforge
