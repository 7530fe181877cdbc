#include "indexforge/heat_lab.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace indexforge {

ComplexRational& ComplexRational::operator+=(const ComplexRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string ComplexRational::to_string() const
{
    std::ostringstream out;
    if (im == 0) {
        out << re;
    } else if (re == 0) {
        out << im << "i";
    } else {
        out << re << (im < 0 ? "-" : "+") << abs(im) << "i";
    }
    return out.str();
}

JetPoly jet_zero(int n, int order) { return JetPoly(n, n, order); }

JetPoly jet_constant(int n, int order, const Rational& c)
{
    return JetPoly::constant(n, n, order, c);
}

JetPoly jet_variable(int n, int order, int i) { return JetPoly::variable(n, n, order, i); }

JetMatrix::JetMatrix(int n_, int order)
    : n(n_), entries(static_cast<std::size_t>(n_ * n_), jet_zero(n_, order))
{
}

CurvatureJets::CurvatureJets(int n_, int order_)
    : n(n_), order(order_), entries(static_cast<std::size_t>(n_ * n_ * n_ * n_), jet_zero(n_, order_))
{
}

JetPoly& CurvatureJets::at(int i, int k, int l, int j)
{
    return entries.at(static_cast<std::size_t>(((i * n + k) * n + l) * n + j));
}

const JetPoly& CurvatureJets::at(int i, int k, int l, int j) const
{
    return entries.at(static_cast<std::size_t>(((i * n + k) * n + l) * n + j));
}

CurvatureJets constant_curvature(int n, const Rational& kappa, int order)
{
    CurvatureJets R(n, order);
    const Rational half = kappa / 2;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                for (int j = 0; j < n; ++j) {
                    const int v = (i == j && k == l) - (i == l && k == j);
                    if (v != 0) {
                        R.at(i, k, l, j) = jet_constant(n, order, half * v);
                    }
                }
            }
        }
    }
    return R;
}

JetMatrix taylor_A_inverse(const CurvatureJets& R, int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative Taylor order");
    }
    if (order >= 2 && R.order < order - 2) {
        throw std::invalid_argument("curvature jets of order " + std::to_string(R.order) +
                                    " cannot give A^{-1} to order " + std::to_string(order));
    }
    const int n = R.n;
    JetMatrix T(n, order);
    for (int i = 0; i < n; ++i) {
        T.at(i, i) = jet_constant(n, order, Rational(1));
    }
    std::vector<JetPoly> x;
    for (int k = 0; k < n; ++k) {
        x.push_back(jet_variable(n, order, k));
    }
    // Jacobi-type contraction Q^i_b = sum_{k,l} x^k x^l R^i_{klb}, as jets of order `order`.
    JetMatrix Q(n, order);
    for (int i = 0; i < n; ++i) {
        for (int b = 0; b < n; ++b) {
            JetPoly acc = jet_zero(n, order);
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    const JetPoly& r = R.at(i, k, l, b);
                    if (!r.is_zero()) {
                        acc += x[k] * x[l] * r.with_order(order);
                    }
                }
            }
            Q.at(i, b) = acc;
        }
    }
    for (int m = 2; m <= order; ++m) {
        const Rational scale(-2, m * m + m);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                JetPoly acc = jet_zero(n, order);
                for (int b = 0; b < n; ++b) {
                    if (!Q.at(i, b).is_zero()) {
                        acc += Q.at(i, b) * T.at(b, j);
                    }
                }
                T.at(i, j) += acc.homogeneous(m) * scale;
            }
        }
    }
    return T;
}

JetMatrix metric_jets(const JetMatrix& a_inverse)
{
    const int n = a_inverse.n;
    const int order = a_inverse.entries.empty() ? 0 : a_inverse.entries.front().order();
    JetMatrix g(n, order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                g.at(i, j) += a_inverse.at(k, i) * a_inverse.at(k, j);
            }
        }
    }
    return g;
}

ConnectionCurvatureJets::ConnectionCurvatureJets(int n_, int rank_, int order_)
    : n(n_),
      rank(rank_),
      order(order_),
      entries(static_cast<std::size_t>(rank_ * rank_ * n_ * n_), jet_zero(n_, order_))
{
}

JetPoly& ConnectionCurvatureJets::at(int mu, int nu, int l, int k)
{
    return entries.at(static_cast<std::size_t>(((mu * rank + nu) * n + l) * n + k));
}

const JetPoly& ConnectionCurvatureJets::at(int mu, int nu, int l, int k) const
{
    return entries.at(static_cast<std::size_t>(((mu * rank + nu) * n + l) * n + k));
}

ConnectionJets::ConnectionJets(int n_, int rank_, int order)
    : n(n_), rank(rank_), entries(static_cast<std::size_t>(rank_ * rank_ * n_), jet_zero(n_, order))
{
}

JetPoly& ConnectionJets::at(int mu, int nu, int k)
{
    return entries.at(static_cast<std::size_t>((mu * rank + nu) * n + k));
}

const JetPoly& ConnectionJets::at(int mu, int nu, int k) const
{
    return entries.at(static_cast<std::size_t>((mu * rank + nu) * n + k));
}

ConnectionJets taylor_connection(const ConnectionCurvatureJets& K, int order)
{
    if (order < 0) {
        throw std::invalid_argument("negative Taylor order");
    }
    if (order >= 1 && K.order < order - 1) {
        throw std::invalid_argument("curvature jets of order " + std::to_string(K.order) +
                                    " cannot give the connection to order " +
                                    std::to_string(order));
    }
    const int n = K.n;
    ConnectionJets G(n, K.rank, order);
    for (int mu = 0; mu < K.rank; ++mu) {
        for (int nu = 0; nu < K.rank; ++nu) {
            for (int k = 0; k < n; ++k) {
                JetPoly contracted = jet_zero(n, order);
                for (int l = 0; l < n; ++l) {
                    contracted += jet_variable(n, order, l) * K.at(mu, nu, l, k).with_order(order);
                }
                // degree-m part of the result is 2/(m+1) times the degree-m part of x^l K_{lk}
                JetPoly out = jet_zero(n, order);
                for (int m = 1; m <= order; ++m) {
                    out += contracted.homogeneous(m) * Rational(2, m + 1);
                }
                G.at(mu, nu, k) = out;
            }
        }
    }
    return G;
}

HeatModel parse_heat_model(const std::string& name)
{
    if (name == "free") {
        return HeatModel::Free;
    }
    if (name == "potential") {
        return HeatModel::Potential;
    }
    if (name == "landau") {
        return HeatModel::Landau;
    }
    throw std::invalid_argument("unknown heat model '" + name + "' (free, potential, landau)");
}

std::string to_string(HeatModel m)
{
    switch (m) {
    case HeatModel::Free:
        return "free";
    case HeatModel::Potential:
        return "potential";
    case HeatModel::Landau:
        return "landau";
    }
    return "?";
}

SymbolPoly symbol_zero(int n, int order) { return SymbolPoly(2 * n, n, order); }

SymbolPoly to_symbol(const JetPoly& v)
{
    const int n = v.nvars();
    SymbolPoly out = symbol_zero(n, v.order());
    for (const auto& [e, c] : v.terms()) {
        SymbolPoly::Exponent se(e);
        se.resize(static_cast<std::size_t>(2 * n), 0);
        out.add_term(std::move(se), ComplexRational(c));
    }
    return out;
}

ModelOperator free_model(int n, int order)
{
    return {n, symbol_zero(n, order), symbol_zero(n, order)};
}

ModelOperator potential_model(const JetPoly& V)
{
    const int n = V.nvars();
    return {n, symbol_zero(n, V.order()), to_symbol(V)};
}

ModelOperator landau_model(const Rational& B, int order)
{
    const int n = 2;
    auto x = [&](int i) { return SymbolPoly::variable(2 * n, n, order, i); };
    auto xi = [&](int i) { return SymbolPoly::variable(2 * n, n, order, n + i); };
    const ComplexRational half(B / 2);
    const SymbolPoly A1 = x(1) * -half;
    const SymbolPoly A2 = x(0) * half;
    // (D + A)^2 = D^2 + 2 A.D + (D.A) + |A|^2 and div A = 0 in this gauge
    SymbolPoly a1 = (A1 * xi(0) + A2 * xi(1)) * ComplexRational(2);
    SymbolPoly a0 = A1 * A1 + A2 * A2;
    return {n, a1, a0};
}

namespace {

ComplexRational minus_i_power(int p)
{
    switch (((p % 4) + 4) % 4) {
    case 0:
        return {Rational(1)};
    case 1:
        return {Rational(0), Rational(-1)};
    case 2:
        return {Rational(-1)};
    default:
        return {Rational(0), Rational(1)};
    }
}

void add_to(Symbol& s, int pole, const SymbolPoly& P)
{
    if (P.is_zero()) {
        return;
    }
    for (auto& term : s) {
        if (term.pole == pole) {
            term.P += P;
            return;
        }
    }
    s.push_back({pole, P});
}

void prune(Symbol& s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](const SymbolTerm& t) { return t.P.is_zero(); }),
            s.end());
    std::sort(s.begin(), s.end(), [](const SymbolTerm& a, const SymbolTerm& b) { return a.pole < b.pole; });
}

/// Multi-indices of length n and total size `size`.
void multi_indices(int n, int size, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == n - 1) {
        current.push_back(size);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int a = size; a >= 0; --a) {
        current.push_back(a);
        multi_indices(n, size - a, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> multi_indices(int n, int size)
{
    std::vector<std::vector<int>> out;
    if (n == 0) {
        return out;
    }
    std::vector<int> current;
    multi_indices(n, size, current, out);
    return out;
}

}  // namespace

std::vector<Symbol> parametrix_recursion(const ModelOperator& H, int k_max)
{
    const int n = H.n;
    if (k_max < 0) {
        throw std::invalid_argument("negative parametrix order");
    }
    for (const auto& [e, c] : H.a1.terms()) {
        if (H.a1.free_degree(e) != 1) {
            throw std::invalid_argument("a1 must be linear in xi");
        }
    }
    for (const auto& [e, c] : H.a0.terms()) {
        if (H.a0.free_degree(e) != 0) {
            throw std::invalid_argument("a0 must not depend on xi");
        }
    }
    const int order = k_max;
    SymbolPoly a2 = symbol_zero(n, order);
    for (int m = 0; m < n; ++m) {
        const SymbolPoly xi = SymbolPoly::variable(2 * n, n, order, n + m);
        a2 += xi * xi;
    }
    const SymbolPoly lower[2] = {H.a0.with_order(order), H.a1.with_order(order)};

    std::vector<Symbol> b;
    b.push_back({{0, SymbolPoly::constant(2 * n, n, order, ComplexRational(1))}});
    for (int k = 1; k <= k_max; ++k) {
        Symbol acc;
        for (int j = 0; j < k; ++j) {
            for (int l = 0; l <= 2; ++l) {
                const int size = k + l - 2 - j;
                if (size < 0 || size > l) {
                    continue;
                }
                const SymbolPoly& a = l == 2 ? a2 : lower[l];
                for (const auto& alpha : multi_indices(n, size)) {
                    SymbolPoly da = a;
                    Rational alpha_factorial(1);
                    for (int m = 0; m < n; ++m) {
                        for (int r = 0; r < alpha[m]; ++r) {
                            da = da.derivative(n + m);
                        }
                        alpha_factorial *= factorial(alpha[m]);
                    }
                    if (da.is_zero()) {
                        continue;
                    }
                    const ComplexRational scale =
                        minus_i_power(size) * ComplexRational(Rational(1) / alpha_factorial);
                    for (const SymbolTerm& term : b[static_cast<std::size_t>(j)]) {
                        SymbolPoly dx = term.P;
                        for (int m = 0; m < n; ++m) {
                            for (int r = 0; r < alpha[m]; ++r) {
                                dx = dx.derivative(m);
                            }
                        }
                        if (!dx.is_zero()) {
                            add_to(acc, term.pole, da * dx * scale);
                        }
                    }
                }
            }
        }
        // b_{-2-k} = -(|xi|^2 - lambda)^{-1} * acc
        Symbol next;
        for (const SymbolTerm& term : acc) {
            add_to(next, term.pole + 1, term.P * ComplexRational(-1));
        }
        prune(next);
        b.push_back(std::move(next));
    }
    return b;
}

HeatCoefficient heat_coefficient(const std::vector<Symbol>& terms, int n, int k)
{
    if (k < 0 || k >= static_cast<int>(terms.size())) {
        throw std::invalid_argument("heat coefficient order outside the parametrix range");
    }
    HeatCoefficient out;
    out.order = k;
    ComplexRational total;
    for (const SymbolTerm& term : terms[static_cast<std::size_t>(k)]) {
        const Rational residue = Rational(1) / factorial(term.pole);
        for (const auto& [e, c] : term.P.at_origin().terms()) {
            Rational moment(1);
            bool odd = false;
            for (int m = 0; m < n; ++m) {
                const int g = e[static_cast<std::size_t>(n + m)];
                if (g % 2 != 0) {
                    odd = true;
                    break;
                }
                // int xi^g e^{-xi^2} / sqrt(pi) = (g-1)!! / 2^{g/2}
                for (int f = g - 1; f > 1; f -= 2) {
                    moment *= f;
                }
                moment /= Rational(Integer(1) << (g / 2));
            }
            if (odd) {
                ++out.odd_moment_terms;
                continue;
            }
            total += c * ComplexRational(residue * moment);
        }
    }
    if (total.im != 0) {
        throw std::logic_error("heat coefficient Phi_" + std::to_string(k) + " is not real: " +
                               total.to_string());
    }
    out.value = total.re;
    return out;
}

std::vector<HeatCoefficient> heat_coefficients(const ModelOperator& H, int k_max)
{
    const std::vector<Symbol> b = parametrix_recursion(H, k_max);
    std::vector<HeatCoefficient> out;
    for (int k = 0; k <= k_max; ++k) {
        out.push_back(heat_coefficient(b, H.n, k));
    }
    return out;
}

double TrigPotential::value(double x) const
{
    double v = c0;
    for (std::size_t m = 0; m < cos_coeffs.size(); ++m) {
        v += cos_coeffs[m] * std::cos(static_cast<double>(m + 1) * x);
    }
    return v;
}

JetPoly TrigPotential::jet_at(double x0, int order) const
{
    JetPoly jet = jet_zero(1, order);
    double fact = 1.0;
    for (int d = 0; d <= order; ++d) {
        if (d > 0) {
            fact *= d;
        }
        double coeff = d == 0 ? c0 : 0.0;
        for (std::size_t mi = 0; mi < cos_coeffs.size(); ++mi) {
            const double m = static_cast<double>(mi + 1);
            // d-th derivative of cos(m x) at x0
            const double phase = std::cos(m * x0 + d * std::numbers::pi / 2);
            coeff += cos_coeffs[mi] * std::pow(m, d) * phase / fact;
        }
        jet.add_term({d}, Rational(coeff));
    }
    return jet;
}

JetPoly trig_potential_jet(const std::vector<Rational>& coeffs, int n, int order)
{
    JetPoly jet = jet_zero(n, order);
    for (int axis = 0; axis < n; ++axis) {
        for (std::size_t m = 0; m < coeffs.size(); ++m) {
            // cos(m y) = sum_p (-1)^p (m y)^{2p} / (2p)!
            for (int d = 0; d <= order; d += 2) {
                if (m == 0 && d > 0) {
                    break;
                }
                Rational c = coeffs[m] / factorial(d);
                for (int r = 0; r < d; ++r) {
                    c *= static_cast<long>(m);
                }
                if ((d / 2) % 2 == 1) {
                    c = -c;
                }
                JetPoly::Exponent e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(axis)] = d;
                jet.add_term(std::move(e), c);
            }
        }
    }
    return jet;
}

std::vector<double> circle_spectrum(const TrigPotential& V, int modes)
{
    const int size = 2 * modes + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
    for (int a = 0; a < size; ++a) {
        const double k = a - modes;
        h(a, a) = k * k + V.c0;
        for (std::size_t mi = 0; mi < V.cos_coeffs.size(); ++mi) {
            const int b = a + static_cast<int>(mi) + 1;
            if (b < size) {
                h(a, b) = h(b, a) = V.cos_coeffs[mi] / 2;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double torus_potential_trace(int n, const std::vector<double>& circle_eigenvalues, double t)
{
    double one = 0.0;
    for (const double e : circle_eigenvalues) {
        one += std::exp(-t * e);
    }
    return std::pow(one, n);
}

std::vector<double> fit_powers(const std::vector<double>& ts, const std::vector<double>& ys,
                               const std::vector<double>& exponents)
{
    if (ts.size() != ys.size() || ts.size() < exponents.size()) {
        throw std::invalid_argument("fit needs at least as many samples as unknowns");
    }
    const auto rows = static_cast<Eigen::Index>(ts.size());
    const auto cols = static_cast<Eigen::Index>(exponents.size());
    Eigen::MatrixXd a(rows, cols);
    Eigen::VectorXd y(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            a(r, c) = std::pow(ts[static_cast<std::size_t>(r)], exponents[static_cast<std::size_t>(c)]);
        }
        y(r) = ys[static_cast<std::size_t>(r)];
    }
    // column scaling keeps the QR well conditioned across wide t ranges
    Eigen::VectorXd scale = a.colwise().norm().transpose();
    for (Eigen::Index c = 0; c < cols; ++c) {
        a.col(c) /= scale(c);
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(y);
    std::vector<double> out(static_cast<std::size_t>(cols));
    for (Eigen::Index c = 0; c < cols; ++c) {
        out[static_cast<std::size_t>(c)] = x(c) / scale(c);
    }
    return out;
}

SpectralHeatFit torus_potential_fit(int n, const TrigPotential& V, int terms, int modes)
{
    const std::vector<double> spectrum = circle_spectrum(V, modes);
    std::vector<double> ts, ys, exponents;
    const int samples = 32;
    const double t_min = 0.01, t_max = 0.12;
    for (int s = 0; s < samples; ++s) {
        const double t = t_min + (t_max - t_min) * s / (samples - 1);
        ts.push_back(t);
        ys.push_back(torus_potential_trace(n, spectrum, t) * std::pow(4 * std::numbers::pi * t, n / 2.0));
    }
    for (int i = 0; i < terms; ++i) {
        exponents.push_back(i);
    }
    SpectralHeatFit fit;
    fit.integrated = fit_powers(ts, ys, exponents);
    for (std::size_t s = 0; s < ts.size(); ++s) {
        double model = 0.0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            model += fit.integrated[i] * std::pow(ts[s], exponents[i]);
        }
        fit.max_residual = std::max(fit.max_residual, std::abs(model - ys[s]));
    }
    return fit;
}

namespace {

/// Embeds a one-variable jet in variable `axis` of an n-variable jet.
JetPoly embed(const JetPoly& one, int n, int axis)
{
    JetPoly out = jet_zero(n, one.order());
    for (const auto& [e, c] : one.terms()) {
        JetPoly::Exponent ne(static_cast<std::size_t>(n), 0);
        ne[static_cast<std::size_t>(axis)] = e[0];
        out.add_term(std::move(ne), c);
    }
    return out;
}

}  // namespace

double integrated_parametrix_coefficient(int n, const TrigPotential& V, int k, int points)
{
    if (n < 1 || n > 3) {
        throw std::invalid_argument("parametrix quadrature supports 1 <= n <= 3");
    }
    const double h = 2 * std::numbers::pi / points;
    std::vector<JetPoly> jets;
    for (int p = 0; p < points; ++p) {
        jets.push_back(V.jet_at(p * h, k));
    }
    double total = 0.0;
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    while (true) {
        JetPoly jet = jet_zero(n, k);
        for (int axis = 0; axis < n; ++axis) {
            jet += embed(jets[static_cast<std::size_t>(index[static_cast<std::size_t>(axis)])], n, axis);
        }
        const std::vector<Symbol> b = parametrix_recursion(potential_model(jet), k);
        total += to_double(heat_coefficient(b, n, k).value);
        int axis = 0;
        while (axis < n && ++index[static_cast<std::size_t>(axis)] == points) {
            index[static_cast<std::size_t>(axis)] = 0;
            ++axis;
        }
        if (axis == n) {
            break;
        }
    }
    return total * std::pow(h, n);
}

double torus_spectral_supertrace(int c, double t)
{
    if (!(t > 0)) {
        throw std::invalid_argument("supertrace needs t > 0");
    }
    if (c == 0) {
        // free spectrum: both chiralities carry the same nonzero levels
        return 0.0;
    }
    const double mult = std::abs(c);
    const double gap = 2.0 * std::abs(c);
    double zero_side = 0.0;   // chirality carrying the zero modes: levels k >= 0
    double other_side = 0.0;  // levels k >= 1
    for (long k = 0;; ++k) {
        const double w = mult * std::exp(-t * gap * static_cast<double>(k));
        zero_side += w;
        if (k >= 1) {
            other_side += w;
        }
        if (w < 1e-17 * mult) {
            break;
        }
    }
    const double str = zero_side - other_side;
    return c > 0 ? str : -str;
}

SupertraceFit supertrace_fit(int c, double t_min, double t_max, int points)
{
    SupertraceFit fit;
    fit.exponents = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<double> ts, ys;
    for (int s = 0; s < points; ++s) {
        const double t = t_min * std::pow(t_max / t_min, static_cast<double>(s) / (points - 1));
        ts.push_back(t);
        ys.push_back(torus_spectral_supertrace(c, t));
        fit.max_deviation = std::max(fit.max_deviation, std::abs(ys.back() - c));
    }
    fit.coefficients = fit_powers(ts, ys, fit.exponents);
    return fit;
}

std::vector<double> free_torus_dirac_spectrum(int n, double L, const std::vector<double>& shift,
                                              int modes)
{
    if (n < 2) {
        throw std::invalid_argument("free torus Dirac spectrum needs n >= 2");
    }
    if (static_cast<int>(shift.size()) != n) {
        throw std::invalid_argument("flat twist needs one holonomy exponent per axis");
    }
    std::vector<double> out;
    std::vector<int> k(static_cast<std::size_t>(n), -modes);
    const int spinor_half = 1 << (n / 2 - 1);
    while (true) {
        double sq = 0.0;
        for (int a = 0; a < n; ++a) {
            const double q = k[static_cast<std::size_t>(a)] + shift[static_cast<std::size_t>(a)];
            sq += q * q;
        }
        const double mu = 2 * std::numbers::pi * std::sqrt(sq) / L;
        for (int r = 0; r < spinor_half; ++r) {
            out.push_back(mu);
            out.push_back(-mu);
        }
        int a = 0;
        while (a < n && ++k[static_cast<std::size_t>(a)] > modes) {
            k[static_cast<std::size_t>(a)] = -modes;
            ++a;
        }
        if (a == n) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ScalingReport scaling_check(double lambda, const std::vector<double>& ts)
{
    if (!(lambda > 0)) {
        throw std::invalid_argument("scaling factor must be positive");
    }
    const int n = 2;
    const double L = 1.0;
    const std::vector<double> shift{0.3, 0.1};
    const int modes = 40;
    const std::vector<double> base = free_torus_dirac_spectrum(n, L, shift, modes);
    const std::vector<double> scaled = free_torus_dirac_spectrum(n, lambda * L, shift, modes);

    ScalingReport report;
    report.lambda = lambda;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double expected = base[i] / lambda;
        const double dev = std::abs(scaled[i] - expected) / std::max(1.0, std::abs(expected));
        report.eigenvalue_deviation = std::max(report.eigenvalue_deviation, dev);
    }
    for (const double t : ts) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i < base.size(); ++i) {
            lhs += std::exp(-t * scaled[i] * scaled[i]);
            rhs += std::exp(-(t / (lambda * lambda)) * base[i] * base[i]);
        }
        report.trace_deviation = std::max(report.trace_deviation, std::abs(lhs - rhs) / rhs);
    }
    return report;
}

}  // namespace indexforge
