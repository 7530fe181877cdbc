#include "indexforge/heat_lab.hpp"
#include "indexforge/index_engine.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace indexforge;

namespace {

Rational factorial(int k)
{
    Rational f(1);
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

JetPoly x(int n, int order, int i) { return jet_variable(n, order, i); }

/// Normal-coordinate metric of the sphere of curvature kappa from the closed form
/// g = dr^2 + (sin^2(sqrt(kappa) r) / kappa) dtheta^2.
JetMatrix sphere_metric_oracle(int n, const Rational& kappa, int order)
{
    JetPoly r2 = jet_zero(n, order);
    for (int i = 0; i < n; ++i) {
        r2 += x(n, order, i) * x(n, order, i);
    }
    JetMatrix g(n, order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            JetPoly transverse = x(n, order, i) * x(n, order, j) * Rational(-1);
            if (i == j) {
                transverse += r2;
                g.at(i, j) += jet_constant(n, order, Rational(1));
            }
            // sin^2(s)/s^2 = sum_{m>=1} (-1)^{m+1} 2^{2m-1} s^{2m-2} / (2m)!
            JetPoly radial_power = jet_constant(n, order, Rational(1));
            Rational kappa_power(kappa);
            for (int m = 2; 2 * m - 2 <= order; ++m) {
                const Rational c = Rational((m % 2 == 0 ? -1 : 1) * (Integer(1) << (2 * m - 1))) *
                                   kappa_power / factorial(2 * m);
                g.at(i, j) += transverse * radial_power * c;
                radial_power = radial_power * r2;
                kappa_power *= kappa;
            }
        }
    }
    return g;
}

JetPoly random_jet(int n, int order, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    JetPoly p = jet_zero(n, order);
    for (int d = 0; d <= order; ++d) {
        for (int trial = 0; trial < 3; ++trial) {
            JetPoly::Exponent e(static_cast<std::size_t>(n), 0);
            for (int s = 0; s < d; ++s) {
                e[static_cast<std::size_t>(rng() % n)] += 1;
            }
            p.add_term(e, Rational(coeff(rng), 1 + static_cast<int>(rng() % 3)));
        }
    }
    return p;
}

Rational laplacian_at_origin(const JetPoly& V)
{
    Rational total(0);
    for (int i = 0; i < V.nvars(); ++i) {
        JetPoly::Exponent e(static_cast<std::size_t>(V.nvars()), 0);
        total += V.derivative(i).derivative(i).coefficient(e);
    }
    return total;
}

}  // namespace

TEST_CASE("gaussian rationals")
{
    const ComplexRational i(Rational(0), Rational(1));
    CHECK(i * i == ComplexRational(-1));
    CHECK((ComplexRational(Rational(1, 2), Rational(3)) - ComplexRational(Rational(1, 2))) ==
          ComplexRational(Rational(0), Rational(3)));
    CHECK(ComplexRational(Rational(1), Rational(-2)).to_string() == "1-2i");
}

TEST_CASE("jet arithmetic truncates")
{
    const JetPoly a = x(2, 3, 0) + jet_constant(2, 3, Rational(1));
    JetPoly p = a * a * a * a;
    for (const auto& [e, c] : p.terms()) {
        CHECK(p.jet_degree(e) <= 3);
    }
    CHECK(p.coefficient({3, 0}) == 4);
    CHECK(p.derivative(0).coefficient({2, 0}) == 12);
}

TEST_CASE("A^{-1} for flat space is the identity")
{
    for (int n = 1; n <= 4; ++n) {
        const JetMatrix T = taylor_A_inverse(CurvatureJets(n, 4), 6);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(T.at(i, j) == (i == j ? jet_constant(n, 6, Rational(1)) : jet_zero(n, 6)));
            }
        }
    }
}

TEST_CASE("A^{-1} second order term is -1/3 of the contracted curvature")
{
    std::mt19937 rng(3);
    const int n = 3;
    CurvatureJets R(n, 2);
    for (auto& r : R.entries) {
        r = jet_constant(n, 2, Rational(static_cast<int>(rng() % 7) - 3, 2));
    }
    const JetMatrix T = taylor_A_inverse(R, 4);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            JetPoly expected = jet_zero(n, 4);
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    expected += x(n, 4, k) * x(n, 4, l) * R.at(i, k, l, j).with_order(4);
                }
            }
            CHECK(T.at(i, j).homogeneous(2) == expected * Rational(-1, 3));
            CHECK(T.at(i, j).homogeneous(1).is_zero());
        }
    }
    CHECK_THROWS_AS(taylor_A_inverse(R, 5), std::invalid_argument);
}

TEST_CASE("sphere metric from the A^{-1} recursion")
{
    for (const int n : {2, 3}) {
        for (const Rational kappa : {Rational(1), Rational(-1), Rational(4, 9)}) {
            const int order = n == 2 ? 8 : 6;
            const JetMatrix g = metric_jets(taylor_A_inverse(constant_curvature(n, kappa, order - 2), order));
            const JetMatrix oracle = sphere_metric_oracle(n, kappa, order);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    CAPTURE(n);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(g.at(i, j) == oracle.at(i, j));
                    CHECK(g.at(i, j) == g.at(j, i));
                }
            }
        }
    }
}

TEST_CASE("metric jets stay symmetric for varying curvature")
{
    std::mt19937 rng(8);
    const int n = 3;
    CurvatureJets R(n, 3);
    // algebraic curvature tensor from a random symmetric form: R_iklj = h_ij h_kl - h_il h_kj
    std::vector<JetPoly> h(static_cast<std::size_t>(n * n), jet_zero(n, 3));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            h[static_cast<std::size_t>(i * n + j)] = h[static_cast<std::size_t>(j * n + i)] = random_jet(n, 1, rng);
        }
    }
    auto H = [&](int a, int b) { return h[static_cast<std::size_t>(a * n + b)]; };
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                for (int j = 0; j < n; ++j) {
                    R.at(i, k, l, j) = H(i, j) * H(k, l) - H(i, l) * H(k, j);
                }
            }
        }
    }
    const JetMatrix g = metric_jets(taylor_A_inverse(R, 5));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m <= 5; ++m) {
                CHECK(g.at(i, j).homogeneous(m) == g.at(j, i).homogeneous(m));
            }
        }
    }
}

TEST_CASE("connection recursion")
{
    SUBCASE("zero curvature")
    {
        const ConnectionJets G = taylor_connection(ConnectionCurvatureJets(3, 2, 3), 4);
        for (const auto& e : G.entries) {
            CHECK(e.is_zero());
        }
    }
    SUBCASE("uniform field gives the symmetric gauge")
    {
        // K = F/2 for a field F_12 = B; the symmetric gauge potential is (B/2)(-x2, x1)
        const Rational B(5, 3);
        ConnectionCurvatureJets K(2, 1, 0);
        K.at(0, 0, 0, 1) = jet_constant(2, 0, B / 2);
        K.at(0, 0, 1, 0) = jet_constant(2, 0, -B / 2);
        const ConnectionJets G = taylor_connection(K, 1);
        CHECK(G.at(0, 0, 0) == x(2, 1, 1) * (-B / 2));
        CHECK(G.at(0, 0, 1) == x(2, 1, 0) * (B / 2));
    }
    SUBCASE("linear curvature carries 2/3")
    {
        ConnectionCurvatureJets K(2, 1, 1);
        K.at(0, 0, 0, 1) = x(2, 1, 0);
        K.at(0, 0, 1, 0) = x(2, 1, 0) * Rational(-1);
        const ConnectionJets G = taylor_connection(K, 2);
        CHECK(G.at(0, 0, 1) == x(2, 2, 0) * x(2, 2, 0) * Rational(2, 3));
        CHECK(G.at(0, 0, 0) == x(2, 2, 0) * x(2, 2, 1) * Rational(-2, 3));
    }
    SUBCASE("radial gauge reproduces the field")
    {
        // F = d(alpha) for random alpha in 3 variables; K = F/2 must give dGamma = F.
        std::mt19937 rng(4);
        const int n = 3, order = 5;
        std::vector<JetPoly> alpha;
        for (int i = 0; i < n; ++i) {
            alpha.push_back(random_jet(n, order + 1, rng));
        }
        ConnectionCurvatureJets K(n, 1, order - 1);
        std::vector<JetPoly> F(static_cast<std::size_t>(n * n), jet_zero(n, order));
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                F[static_cast<std::size_t>(l * n + k)] =
                    (alpha[k].derivative(l) - alpha[l].derivative(k)).with_order(order);
                K.at(0, 0, l, k) = F[static_cast<std::size_t>(l * n + k)].with_order(order - 1) * Rational(1, 2);
            }
        }
        const ConnectionJets G = taylor_connection(K, order);
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                const JetPoly dG = G.at(0, 0, k).derivative(l) - G.at(0, 0, l).derivative(k);
                for (int m = 0; m < order; ++m) {
                    CHECK(dG.homogeneous(m) == F[static_cast<std::size_t>(l * n + k)].homogeneous(m));
                }
            }
        }
        // radial gauge condition x^k Gamma_k = 0
        JetPoly radial = jet_zero(n, order);
        for (int k = 0; k < n; ++k) {
            radial += x(n, order, k) * G.at(0, 0, k);
        }
        CHECK(radial.is_zero());
    }
    CHECK_THROWS_AS(taylor_connection(ConnectionCurvatureJets(2, 1, 0), 3), std::invalid_argument);
}

TEST_CASE("parametrix of the free operator")
{
    for (int n = 1; n <= 3; ++n) {
        const auto b = parametrix_recursion(free_model(n, 4), 4);
        REQUIRE(b.size() == 5);
        REQUIRE(b[0].size() == 1);
        CHECK(b[0][0].pole == 0);
        for (int k = 1; k <= 4; ++k) {
            CHECK(b[static_cast<std::size_t>(k)].empty());
        }
    }
}

TEST_CASE("parametrix with a constant potential")
{
    const int n = 2;
    const Rational V(7, 3);
    const auto b = parametrix_recursion(potential_model(jet_constant(n, 2, V)), 2);
    CHECK(b[1].empty());
    REQUIRE(b[2].size() == 1);
    CHECK(b[2][0].pole == 1);
    CHECK(b[2][0].P == SymbolPoly::constant(2 * n, n, 2, ComplexRational(-V)));
}

TEST_CASE("parametrix pole order and xi degree bounds")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 1 + trial % 3;
        std::vector<ModelOperator> models{potential_model(random_jet(n, 4, rng))};
        if (n == 2) {
            models.push_back(landau_model(Rational(2 + trial), 4));
        }
        for (const auto& H : models) {
            const auto b = parametrix_recursion(H, 4);
            for (int k = 0; k <= 4; ++k) {
                for (const auto& term : b[static_cast<std::size_t>(k)]) {
                    CHECK(term.pole <= k + 1);
                    for (const auto& [e, c] : term.P.terms()) {
                        CHECK(term.P.free_degree(e) <= k);
                    }
                }
            }
        }
    }
}

TEST_CASE("heat coefficients of the potential model")
{
    std::mt19937 rng(23);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const JetPoly V = random_jet(n, 5, rng);
            const auto phi = heat_coefficients(potential_model(V), 5);
            const Rational v0 = V.coefficient(JetPoly::Exponent(static_cast<std::size_t>(n), 0));
            CHECK(phi[0].value == 1);
            CHECK(phi[1].value == 0);
            CHECK(phi[2].value == -v0);
            CHECK(phi[3].value == 0);
            // second Seeley-DeWitt coefficient of -Laplacian + V: V^2/2 - Laplacian(V)/6
            CHECK(phi[4].value == v0 * v0 / 2 - laplacian_at_origin(V) / 6);
            CHECK(phi[5].value == 0);
        }
    }
}

TEST_CASE("heat coefficients of the Landau model")
{
    // tr exp(-tH) per area = (B/2pi) sum_k e^{-tB(2k+1)} = (4 pi t)^{-1} tB / sinh(tB)
    for (const Rational B : {Rational(1), Rational(3), Rational(-5, 2)}) {
        const auto phi = heat_coefficients(landau_model(B, 8), 8);
        CHECK(phi[0].value == 1);
        CHECK(phi[2].value == 0);
        CHECK(phi[4].value == -B * B / 6);
        CHECK(phi[6].value == 0);
        CHECK(phi[8].value == 7 * B * B * B * B / 360);
        for (const int k : {1, 3, 5, 7}) {
            CHECK(phi[static_cast<std::size_t>(k)].value == 0);
        }
    }
}

TEST_CASE("parametrix Phi_2 agrees with the torus spectral fit")
{
    const TrigPotential V{0.7, {0.4, -0.15}};
    for (const int n : {1, 2}) {
        const SpectralHeatFit fit = torus_potential_fit(n, V, 7);
        const double volume = std::pow(2 * M_PI, n);
        CHECK(fit.integrated[0] == doctest::Approx(volume).epsilon(1e-9));
        const double phi2 = integrated_parametrix_coefficient(n, V, 2);
        CHECK(phi2 == doctest::Approx(-n * 0.7 * volume).epsilon(1e-12));
        CHECK(std::abs(fit.integrated[1] - phi2) / std::abs(phi2) < 1e-6);
    }
}

TEST_CASE("Landau supertrace")
{
    for (const double t : {0.1, 1.0, 10.0}) {
        CHECK(torus_spectral_supertrace(0, t) == 0.0);
        CHECK(std::abs(torus_spectral_supertrace(3, t) - 3.0) < 1e-10);
        CHECK(std::abs(torus_spectral_supertrace(-2, t) + 2.0) < 1e-10);
    }
    const ManifoldDescriptor torus = builtin_manifold("T2");
    for (int c = -3; c <= 3; ++c) {
        const SupertraceFit fit = supertrace_fit(c);
        CHECK(fit.max_deviation < 1e-10);
        CHECK(std::abs(fit.coefficients[0]) < 1e-8);
        CHECK(std::abs(fit.coefficients[1]) < 1e-8);
        CHECK(std::abs(fit.coefficients[2] - c) < 1e-8);
        Twist line;
        line.rank = 1;
        line.numbers[{1, Partition()}] = c;
        const Rational index = evaluate_index(OperatorSpec::dirac(2), torus, line);
        CHECK(index == c);
    }
    CHECK_THROWS_AS(torus_spectral_supertrace(1, 0.0), std::invalid_argument);
}

TEST_CASE("spectral scaling")
{
    const ScalingReport same = scaling_check(1.0);
    CHECK(same.eigenvalue_deviation == 0.0);
    CHECK(same.trace_deviation == 0.0);
    const auto base = free_torus_dirac_spectrum(2, 1.0, {0.0, 0.0}, 3);
    const auto doubled = free_torus_dirac_spectrum(2, 2.0, {0.0, 0.0}, 3);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(doubled[i] == doctest::Approx(base[i] / 2).epsilon(1e-15));
    }
    for (const double lambda : {0.5, 2.0, 5.0}) {
        const ScalingReport r = scaling_check(lambda);
        CHECK(r.eigenvalue_deviation < 1e-12);
        CHECK(r.trace_deviation < 1e-10);
    }
}
