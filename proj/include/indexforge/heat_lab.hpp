#pragma once

// Normal-coordinate Taylor recursions, the parametrix symbol recursion for scalar
// Laplace-type model operators, heat coefficients and flat-torus spectral oracles.

#include "indexforge/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace indexforge {

/// Exact element of Q(i). Symbols of differential operators pick up factors of -i from
/// D_x = -i d/dx, so the recursion runs over Gaussian rationals.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(int r) : re(r) {}
    ComplexRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
    std::string to_string() const;
};

/// Polynomial in `nvars` variables whose first `jet_vars` variables are truncated at total
/// degree `order` (order < 0: no truncation). JetPoly uses every variable as a jet variable;
/// symbols use x_1..x_n as jet variables and xi_1..xi_n untruncated.
template <typename C>
class Poly {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, C>;

    Poly() = default;
    Poly(int nvars, int jet_vars, int order) : nvars_(nvars), jet_vars_(jet_vars), order_(order)
    {
    }

    static Poly constant(int nvars, int jet_vars, int order, const C& c)
    {
        Poly p(nvars, jet_vars, order);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static Poly variable(int nvars, int jet_vars, int order, int var, const C& c = C(1))
    {
        Poly p(nvars, jet_vars, order);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(var)) = 1;
        p.add_term(std::move(e), c);
        return p;
    }

    int nvars() const { return nvars_; }
    int jet_vars() const { return jet_vars_; }
    int order() const { return order_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    int jet_degree(const Exponent& e) const
    {
        int d = 0;
        for (int v = 0; v < jet_vars_; ++v) {
            d += e[static_cast<std::size_t>(v)];
        }
        return d;
    }
    int free_degree(const Exponent& e) const
    {
        int d = 0;
        for (int v = jet_vars_; v < nvars_; ++v) {
            d += e[static_cast<std::size_t>(v)];
        }
        return d;
    }

    C coefficient(const Exponent& e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Exponent e, const C& c)
    {
        if (static_cast<int>(e.size()) != nvars_) {
            throw std::invalid_argument("exponent has the wrong number of variables");
        }
        if (order_ >= 0 && jet_degree(e) > order_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
        }
        if (is_zero_coeff(it->second)) {
            terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, C(0) - c);
        }
        return *this;
    }
    Poly& operator*=(const C& s)
    {
        if (is_zero_coeff(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c = c * s;
        }
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator*(const C& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_compatible(b);
        const int order = a.order_ < 0 ? b.order_ : b.order_ < 0 ? a.order_ : std::min(a.order_, b.order_);
        Poly out(a.nvars_, a.jet_vars_, order);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea);
                for (std::size_t v = 0; v < e.size(); ++v) {
                    e[v] += eb[v];
                }
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly derivative(int var) const
    {
        Poly out(nvars_, jet_vars_, order_);
        const auto v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            if (e.at(v) == 0) {
                continue;
            }
            Exponent d(e);
            --d[v];
            out.add_term(std::move(d), c * C(e[v]));
        }
        return out;
    }

    /// Terms of jet degree exactly k.
    Poly homogeneous(int k) const
    {
        Poly out(nvars_, jet_vars_, order_);
        for (const auto& [e, c] : terms_) {
            if (jet_degree(e) == k) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Sets every jet variable to zero.
    Poly at_origin() const { return homogeneous(0); }

    Poly with_order(int order) const
    {
        Poly out(nvars_, jet_vars_, order);
        for (const auto& [e, c] : terms_) {
            out.add_term(e, c);
        }
        return out;
    }

private:
    static bool is_zero_coeff(const C& c)
    {
        if constexpr (std::is_same_v<C, ComplexRational>) {
            return c.is_zero();
        } else {
            return c == 0;
        }
    }
    void check_compatible(const Poly& o) const
    {
        if (o.nvars_ != nvars_ || o.jet_vars_ != jet_vars_) {
            throw std::invalid_argument("polynomials over different variables");
        }
    }

    int nvars_ = 0;
    int jet_vars_ = 0;
    int order_ = -1;
    Terms terms_;
};

/// Truncated Taylor polynomial in x_1..x_n.
using JetPoly = Poly<Rational>;
JetPoly jet_zero(int n, int order);
JetPoly jet_constant(int n, int order, const Rational& c);
JetPoly jet_variable(int n, int order, int i);

/// n x n matrix of jets, entry (i, j).
struct JetMatrix {
    int n = 0;
    std::vector<JetPoly> entries;

    JetMatrix(int n, int order);
    JetPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }
    const JetPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

/// Frame components R^i_{klj} of the Riemann tensor along a synchronous frame, as jets.
struct CurvatureJets {
    int n = 0;
    int order = 0;
    std::vector<JetPoly> entries;

    CurvatureJets(int n, int order);
    JetPoly& at(int i, int k, int l, int j);
    const JetPoly& at(int i, int k, int l, int j) const;
};

/// Constant curvature preset normalized so that sum_{k,l} x^k x^l R^i_{klj} = (kappa/2)(r^2
/// delta_ij - x_i x_j); kappa = 1 is the unit round sphere.
CurvatureJets constant_curvature(int n, const Rational& kappa, int order);

/// Taylor expansion of (A^{-1})^i_j in normal coordinates up to `order`. The last slot of R is
/// moved to coordinates through the already-known lower orders of A^{-1}.
JetMatrix taylor_A_inverse(const CurvatureJets& R, int order);

/// g_ij = sum_k (A^{-1})^k_i (A^{-1})^k_j.
JetMatrix metric_jets(const JetMatrix& a_inverse);

/// Curvature K^mu_{nu lk} of a connection on a rank-r bundle over R^n, as jets.
struct ConnectionCurvatureJets {
    int n = 0;
    int rank = 1;
    int order = 0;
    std::vector<JetPoly> entries;

    ConnectionCurvatureJets(int n, int rank, int order);
    JetPoly& at(int mu, int nu, int l, int k);
    const JetPoly& at(int mu, int nu, int l, int k) const;
};

/// Christoffel symbols Gamma^mu_{k nu} of the connection, stored as at(mu, nu, k).
struct ConnectionJets {
    int n = 0;
    int rank = 1;
    std::vector<JetPoly> entries;

    ConnectionJets(int n, int rank, int order);
    JetPoly& at(int mu, int nu, int k);
    const JetPoly& at(int mu, int nu, int k) const;
};

/// Taylor expansion of Gamma^xi in a normal trivialization up to `order`.
ConnectionJets taylor_connection(const ConnectionCurvatureJets& K, int order);

/// Polynomial in (x_1..x_n, xi_1..xi_n) with x truncated.
using SymbolPoly = Poly<ComplexRational>;

/// P(x, xi) (|xi|^2 - lambda)^{-1-pole}.
struct SymbolTerm {
    int pole = 0;
    SymbolPoly P;
};
/// Sum of terms, at most one per pole order.
using Symbol = std::vector<SymbolTerm>;

/// Laplace-type operator |xi|^2 + a1(x, xi) + a0(x) with flat leading symbol.
struct ModelOperator {
    int n = 0;
    SymbolPoly a1;  // linear in xi
    SymbolPoly a0;  // free of xi
};

enum class HeatModel { Free, Potential, Landau };
HeatModel parse_heat_model(const std::string& name);
std::string to_string(HeatModel m);

SymbolPoly symbol_zero(int n, int order);
/// Lifts an x-jet into symbol variables.
SymbolPoly to_symbol(const JetPoly& v);

ModelOperator free_model(int n, int order);
/// -Laplacian + V.
ModelOperator potential_model(const JetPoly& V);
/// sum_k (D_k + A_k)^2 on R^2 with A = (B/2)(-x_2, x_1), D = -i d/dx.
ModelOperator landau_model(const Rational& B, int order);

/// b_{-2}, b_{-3}, ..., b_{-2-k_max}. The recursion comes from requiring the symbol of
/// (H - lambda) composed with the parametrix to be 1.
std::vector<Symbol> parametrix_recursion(const ModelOperator& H, int k_max);

struct HeatCoefficient {
    int order = 0;
    Rational value;               // Phi_k(0) divided by (4 pi)^{-n/2}
    int odd_moment_terms = 0;     // monomials dropped because some xi-exponent is odd
};

/// Phi_k at the origin from the residue of e^{-lambda} (|xi|^2 - lambda)^{-1-j}, which is
/// e^{-|xi|^2}/j!, and Gaussian moments. Throws if the result is not real.
HeatCoefficient heat_coefficient(const std::vector<Symbol>& terms, int n, int k);

/// Convenience: parametrix + extraction for orders 0..k_max.
std::vector<HeatCoefficient> heat_coefficients(const ModelOperator& H, int k_max);

// ---- spectral oracles on flat tori ----

/// Trigonometric potential on the circle of length 2 pi: c0 + sum_m cos_coeffs[m-1] cos(m x).
struct TrigPotential {
    double c0 = 0.0;
    std::vector<double> cos_coeffs;

    double value(double x) const;
    /// Taylor jet of V(x0 + y) in y up to `order`, coefficients converted exactly from double.
    JetPoly jet_at(double x0, int order) const;
};

/// Exact Taylor jet at the origin of sum_axis V(x_axis) on R^n for V = coeffs[0] +
/// sum_m coeffs[m] cos(m x).
JetPoly trig_potential_jet(const std::vector<Rational>& coeffs, int n, int order);

/// Eigenvalues of -d^2/dx^2 + V on the circle by Fourier-Galerkin with modes |k| <= modes.
std::vector<double> circle_spectrum(const TrigPotential& V, int modes);

/// tr exp(-t H) on T^n = (circle)^n for H = -Laplacian + sum_axis V(x_axis).
double torus_potential_trace(int n, const std::vector<double>& circle_eigenvalues, double t);

/// Least-squares fit y(t) ~ sum_i c_i t^{exponents_i}.
std::vector<double> fit_powers(const std::vector<double>& ts, const std::vector<double>& ys,
                               const std::vector<double>& exponents);

struct SpectralHeatFit {
    std::vector<double> integrated;  // integral over T^n of Phi_{2i} / (4 pi)^{-n/2}, i = 0..
    double max_residual = 0.0;
};

/// Fits tr exp(-tH) = sum_i (4 pi t)^{-n/2} t^i int Phi_{2i} on a small-t grid.
SpectralHeatFit torus_potential_fit(int n, const TrigPotential& V, int terms, int modes = 160);

/// Integral over T^n of the parametrix Phi_k (divided by (4 pi)^{-n/2}) by a uniform grid,
/// exact for trigonometric potentials of degree below `points`.
double integrated_parametrix_coefficient(int n, const TrigPotential& V, int k, int points = 16);

/// str exp(-t D^2) of the T^2 Dirac operator twisted by a line bundle of degree c, summed over
/// the Landau levels 2|c|k (multiplicity |c|) until the tail is below 1e-15.
double torus_spectral_supertrace(int c, double t);

struct SupertraceFit {
    std::vector<double> exponents;
    std::vector<double> coefficients;
    double max_deviation = 0.0;  // |str - c| over the grid
};

/// Fits the supertrace on t in [t_min, t_max] against t^{-1}, t^{-1/2}, 1, t^{1/2}, t.
SupertraceFit supertrace_fit(int c, double t_min = 0.05, double t_max = 20.0, int points = 40);

/// Spectrum of the untwisted-by-curvature Dirac operator on the flat torus of side L with a flat
/// twist (holonomy exponents `shift`): +-2 pi |k + shift| / L, each with multiplicity spinor_rank/2
/// per sign, n >= 2. Eigenvalues with |k_i| <= modes.
std::vector<double> free_torus_dirac_spectrum(int n, double L, const std::vector<double>& shift,
                                              int modes);

struct ScalingReport {
    double lambda = 1.0;
    double eigenvalue_deviation = 0.0;  // max |mu(lambda^2 g) - mu(g)/lambda|, relative
    double trace_deviation = 0.0;       // max relative deviation of the heat traces over t
};

/// Compares tr exp(-t D^2) for g -> lambda^2 g against tr exp(-(t/lambda^2) D^2) for the free
/// T^2 Dirac operator with a flat twist; both spectra come from the lattice independently.
ScalingReport scaling_check(double lambda, const std::vector<double>& ts = {0.05, 0.2, 1.0, 5.0});

}  // namespace indexforge
