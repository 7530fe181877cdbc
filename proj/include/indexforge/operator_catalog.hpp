#pragma once

#include "indexforge/graded_class.hpp"
#include "indexforge/spin_rep.hpp"

#include <string>
#include <vector>

namespace indexforge {

enum class OperatorFamily { Dirac, HigherDirac, RaritaSchwinger, HigherSignature };

enum class Structure { Spin, Oriented };

/// One cataloged chiral operator in dimension n = 2l.
class OperatorSpec {
public:
    static OperatorSpec dirac(int n);
    /// 0 <= j <= l-1; j = 0 is the Dirac operator, j = 1 Rarita-Schwinger.
    static OperatorSpec higher_dirac(int j, int n);
    static OperatorSpec rarita_schwinger(int n);
    /// n = 4 only.
    static OperatorSpec higher_signature(int mu);

    OperatorFamily family() const { return family_; }
    int n() const { return n_; }
    /// Exterior degree j of a higher Dirac operator (1 for Rarita-Schwinger, 0 for Dirac).
    int j() const { return j_; }
    int mu() const { return mu_; }
    Structure structure() const;
    /// Kebab-case name as used on the command line.
    std::string name() const;

    friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

private:
    OperatorSpec(OperatorFamily family, int n, int j, int mu);
    OperatorFamily family_;
    int n_;
    int j_;
    int mu_;
};

/// Weights of the positive and negative chiral halves.
struct ChiralData {
    DominantWeight positive;
    DominantWeight negative;
    Integer rank;
};

ChiralData chiral_data(const OperatorSpec& spec);

/// (ch Lambda^j T_C + ch Lambda^{j-1} T_C) * A-hat through degree n.
GradedClass higher_dirac_integrand(int j, int n);
GradedClass rarita_schwinger_integrand(int n);

/// (-1)^l prod_j 2 sinh(x_j/2)/x_j: the chiral character difference of the spinor module
/// divided by e, with the sign chosen so that (-1)^l * quotient * A-hat^2 = A-hat.
GradedClass dirac_euler_quotient(int n, int max_degree = -1);

enum class Branch { Plus, Minus };

/// c_1^{+-} = p_1 +- 2e in dimension 4.
GradedClass c1_branch(Branch branch, int max_degree = 4);

/// ch V_{(mu,+-mu)} = 1 + 2mu + (mu/6 + mu^2/2 + mu^3/3) c_1^{+-}.
GradedClass signature_ch_closed_form(int mu, Branch branch);

/// Closed form of ch V_{(mu+1,+-mu)} through degree 4:
/// 4(mu+1) + (2/3)(mu^3 + 3mu^2 + 2mu) c_1^{+-} + (mu+1) p_1.
GradedClass signature_shifted_ch_closed_form(int mu, Branch branch);

struct SignatureCharacters {
    /// ch V_{(mu,+-mu)} for mu = 0..mu_max+1.
    std::vector<GradedClass> diagonal;
    /// ch V_{(mu+1,+-mu)} for mu = 0..mu_max.
    std::vector<GradedClass> shifted;
};

/// Runs both character recurrences from the seeds ch V_{(1,+-1)} and ch V_{(1,0)}, keeping
/// terms through `max_degree` (4 or 8).
SignatureCharacters signature_ch_recurrence(int mu_max, Branch branch, int max_degree = 4);

/// Index integrand of P_mu^+ in dimension 4, assembled from the recurrences:
/// (ch W+ - ch W-)/e * A-hat^2, truncated to degree 4.
GradedClass higher_signature_integrand(int mu);

/// Twist-free integrand of a cataloged operator.
GradedClass integrand(const OperatorSpec& spec);

/// integrand(spec) with the generic twist ch_0 + ch_1 + ... + ch_l multiplied in.
GradedClass twisted_integrand(const OperatorSpec& spec);

}  // namespace indexforge
