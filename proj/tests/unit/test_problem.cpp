#include "gew/errors.hpp"
#include "gew/problem.hpp"
#include "gew/stepper.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gew;

TEST(Params, Validation) {
    EXPECT_NO_THROW(GewParams{}.validate());
    EXPECT_THROW((GewParams{0, 3.0, 1.0}.validate()), ConfigError);
    EXPECT_THROW((GewParams{2, 0.0, 1.0}.validate()), ConfigError);
    EXPECT_THROW((GewParams{2, 3.0, -1.0}.validate()), ConfigError);
}

TEST(Soliton, AmplitudeForStandardCases) {
    // c (p+1)(p+2) / (2 eps) with eps = 3: unit amplitude for c = 0.5, 0.3, 0.2
    EXPECT_NEAR(amplitude({2, 3.0, 1.0}, 0.5), 1.0, 1e-15);
    EXPECT_NEAR(amplitude({3, 3.0, 1.0}, 0.3), 1.0, 1e-15);
    EXPECT_NEAR(amplitude({4, 3.0, 1.0}, 0.2), 1.0, 1e-15);
    EXPECT_NEAR(amplitude({3, 3.0, 1.0}, 0.0375), 0.5, 1e-15);
}

TEST(Soliton, TravelsAtSpeedC) {
    const GewParams params{2, 3.0, 1.0};
    const SolitonSpec spec{0.5, 30.0};
    EXPECT_NEAR(exact_solitary(30.0, 0.0, params, spec), 1.0, 1e-15);
    EXPECT_NEAR(exact_solitary(40.0, 20.0, params, spec), 1.0, 1e-15);
    EXPECT_NEAR(exact_solitary(37.0, 20.0, params, spec), exact_solitary(43.0, 20.0, params, spec), 1e-15);
    EXPECT_LT(exact_solitary(0.0, 0.0, params, spec), 1e-11);
}

// Residual of U_t + eps U^p U_x - mu U_xxt by central differences.
TEST(Soliton, SatisfiesEquation) {
    const GewParams params{3, 3.0, 1.0};
    const SolitonSpec spec{0.3, 0.0};
    const auto u = [&](double x, double t) { return exact_solitary(x, t, params, spec); };
    const double d = 1e-3;
    for (double x : {-2.0, -0.5, 0.4, 1.7}) {
        const double ut = (u(x, d) - u(x, -d)) / (2 * d);
        const double ux = (u(x + d, 0) - u(x - d, 0)) / (2 * d);
        const auto uxx = [&](double t) { return (u(x + d, t) - 2 * u(x, t) + u(x - d, t)) / (d * d); };
        const double uxxt = (uxx(d) - uxx(-d)) / (2 * d);
        const double res = ut + params.eps * std::pow(u(x, 0), params.p) * ux - params.mu * uxxt;
        EXPECT_NEAR(res, 0.0, 5e-5) << "x=" << x;
    }
}

TEST(Soliton, TranslationInvariance) {
    const GewParams params{4, 3.0, 1.0};
    const SolitonSpec spec{0.2, 30.0};
    for (double shift : {0.5, 3.0, 17.25})
        for (double x : {25.0, 31.0, 44.4})
            EXPECT_NEAR(exact_solitary(x, 10.0, params, spec), exact_solitary(x - spec.c * shift, 10.0 - shift, params, spec),
                        1e-14);
}

TEST(Soliton, DecaysAwayFromCentre) {
    for (int p : {1, 2, 3, 4}) {
        const GewParams params{p, 3.0, 1.0};
        const SolitonSpec spec{0.5, 0.0};
        const double far = 100.0 / p;
        EXPECT_LT(exact_solitary(far, 0.0, params, spec), 1e-8);
        EXPECT_LT(exact_solitary(-far, 0.0, params, spec), 1e-8);
        EXPECT_NEAR(exact_solitary(0.0, 0.0, params, spec), amplitude(params, 0.5), 1e-14);
    }
    EXPECT_EQ(amplitude({1, 3.0, 1.0}, 0.0), 0.0);
}

TEST(InitialProfiles, TwoWavesAndMaxwellian) {
    const GewParams params{3, 3.0, 1.0};
    const auto f = ic_two_waves(params, {SolitonSpec{0.3, 15.0}, SolitonSpec{0.0375, 30.0}});
    EXPECT_NEAR(f(15.0), 1.0, 1e-6);
    EXPECT_NEAR(f(30.0), 0.5, 1e-5);
    const auto g = ic_maxwellian();
    EXPECT_EQ(g(0.0), 1.0);
    EXPECT_NEAR(g(1.0), std::exp(-1.0), 1e-16);
}

TEST(Invariants, GaussRuleMatchesSimpson) {
    const GewParams params{3, 3.0, 0.7};
    const Mesh mesh(0.0, 20.0, 80);
    const SplineVec s = project_initial(ic_single(params, {0.3, 10.0}), mesh);
    const Invariants g = invariants(s, params, InvariantRule::Gauss);
    double i1 = 0, i2 = 0, i3 = 0;
    // per element, so every panel sees a single polynomial piece
    for (int m = 0; m < mesh.n_elems(); ++m) {
        const double a = mesh.knot(m), b = mesh.knot(m + 1);
        i1 += oracle::simpson([&](double x) { return oracle::field(s, x); }, a, b, 512);
        i2 += oracle::simpson([&](double x) {
            const double u = oracle::field(s, x), ux = oracle::field_deriv(s, x);
            return u * u + params.mu * ux * ux;
        }, a, b, 512);
        i3 += oracle::simpson([&](double x) { return std::pow(oracle::field(s, x), params.p + 2); }, a, b, 512);
    }
    EXPECT_LT(std::abs(g.i1 - i1), 1e-10 * std::abs(i1));
    EXPECT_LT(std::abs(g.i2 - i2), 1e-10 * std::abs(i2));
    EXPECT_LT(std::abs(g.i3 - i3), 1e-10 * std::abs(i3));
}

TEST(Invariants, ConvergeToClosedFormForP2) {
    // I1 = pi, I2 = 8/3, I3 = 4/3 for p = 2, c = 0.5, eps = 3, mu = 1
    const GewParams params{2, 3.0, 1.0};
    const Mesh mesh(0.0, 80.0, 3200);
    const SplineVec s = project_initial(ic_single(params, {0.5, 30.0}), mesh);
    const Invariants g = invariants(s, params, InvariantRule::Gauss);
    EXPECT_NEAR(g.i1, std::numbers::pi, 1e-6);
    EXPECT_NEAR(g.i2, 8.0 / 3.0, 1e-5);
    EXPECT_NEAR(g.i3, 4.0 / 3.0, 1e-6);
}

TEST(Invariants, NodalRuleIsKnotSum) {
    const GewParams params{2, 3.0, 1.0};
    const Mesh mesh(0.0, 4.0, 8);
    SplineVec s(mesh);
    for (int j = -1; j <= 8; ++j) s[j] = 0.1 * (j + 2);
    const Invariants v = invariants(s, params);
    double i1 = 0, i2 = 0, i3 = 0;
    for (int m = 0; m <= 8; ++m) {
        const double u = s[m - 1] + s[m];
        const double ux = 2.0 * (s[m] - s[m - 1]) / mesh.h();
        i1 += u;
        i2 += u * u + ux * ux;
        i3 += u * u * u * u;
    }
    EXPECT_NEAR(v.i1, 0.5 * i1, 1e-14);
    EXPECT_NEAR(v.i2, 0.5 * i2, 1e-13);
    EXPECT_NEAR(v.i3, 0.5 * i3, 1e-13);
    EXPECT_EQ(v[0], v.i1);
    EXPECT_EQ(v[2], v.i3);
}

TEST(Invariants, SignProperties) {
    const GewParams params{2, 3.0, 1.0};
    const Mesh mesh(0.0, 10.0, 50);
    SplineVec s(mesh);
    for (int j = -1; j <= 50; ++j) s[j] = std::sin(0.7 * j);
    for (auto rule : {InvariantRule::Nodal, InvariantRule::Gauss}) {
        const Invariants v = invariants(s, params, rule);
        EXPECT_GE(v.i2, 0.0);
        EXPECT_GE(v.i3, 0.0);
        const Invariants z = invariants(SplineVec(mesh), params, rule);
        EXPECT_EQ(z.i1, 0.0);
        EXPECT_EQ(z.i2, 0.0);
        EXPECT_EQ(z.i3, 0.0);
    }
}

TEST(ErrorNorms, UniformOffset) {
    const Mesh mesh(0.0, 2.0, 20);
    const SplineVec s(mesh);
    const std::vector<double> exact(21, 0.01);
    const ErrorNorms e = error_norms(s, exact);
    EXPECT_NEAR(e.linf, 0.01, 1e-16);
    EXPECT_NEAR(e.l2, 0.01 * std::sqrt(0.1 * 21), 1e-15);
}

TEST(ErrorNorms, NodalDefinitions) {
    const Mesh mesh(0.0, 1.0, 4);
    SplineVec s(mesh);
    s[1] = 0.5; // U(x_1) = U(x_2) = 0.5
    const std::vector<double> exact(5, 0.0);
    const ErrorNorms e = error_norms(s, exact);
    EXPECT_NEAR(e.linf, 0.5, 1e-15);
    EXPECT_NEAR(e.l2, std::sqrt(0.25 * 0.5), 1e-15);
    EXPECT_THROW(error_norms(s, std::vector<double>(4)), ContractError);
}

TEST(Peaks, ParabolicRefinementIsExactForQuadratics) {
    const Mesh mesh(0.0, 10.0, 100);
    // U(x) = 2 - (x - 5.03)^2 at the knots
    const auto f = [](double x) { return 2.0 - (x - 5.03) * (x - 5.03); };
    const SplineVec s = project_initial(f, mesh);
    const auto peaks = find_peaks(s, 0.0);
    ASSERT_EQ(peaks.size(), 1u);
    EXPECT_NEAR(peaks[0].x, 5.03, 1e-9);
    EXPECT_NEAR(peaks[0].amplitude, 2.0, 1e-9);
}

TEST(Peaks, TwoWavesAndThreshold) {
    const GewParams params{3, 3.0, 1.0};
    const Mesh mesh(0.0, 80.0, 800);
    const SplineVec s = project_initial(ic_two_waves(params, {SolitonSpec{0.3, 15.0}, SolitonSpec{0.0375, 30.0}}), mesh);
    const auto peaks = find_peaks(s, 0.05);
    ASSERT_EQ(peaks.size(), 2u);
    EXPECT_NEAR(peaks[0].x, 15.0, 1e-3);
    EXPECT_NEAR(peaks[1].x, 30.0, 1e-3);
    EXPECT_EQ(find_peaks(s, 0.8).size(), 1u);
    const auto top = highest_peak(s);
    ASSERT_TRUE(top.has_value());
    EXPECT_NEAR(top->amplitude, 1.0, 1e-4);
    EXPECT_FALSE(highest_peak(SplineVec(mesh)).has_value());
}
