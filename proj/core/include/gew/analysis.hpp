#pragma once

#include "gew/problem.hpp"

#include <complex>
#include <span>
#include <vector>

namespace gew {

/// Amplification factor of the linearised scheme for one Fourier mode.
struct GrowthFactor {
    double re = 1.0;
    double im = 0.0;

    double modulus() const { return std::hypot(re, im); }
};

/// g = (a - ib)/(a + ib) with theta = kh and
///   a = (11 + 12 beta) cos(theta/2) + (1 - 12 beta) cos(3 theta/2)
///   b = 2 lambda dt (3 sin(theta/2) + sin(3 theta/2)).
/// Throws DomainError for a degenerate mode (a = b = 0).
GrowthFactor growth_factor(double theta, double beta, double lambda, double dt);

/// Same mode evaluated directly from the interior row stencil of the assembled
/// scheme: g = sum_k rhs_k e^{i k theta} / sum_k lhs_k e^{i k theta}.
std::complex<double> stencil_growth_factor(double theta, double beta, double lambda, double dt);

/// max | |g| - 1 | over theta in (0, 2 pi) (n_theta interior samples) and every
/// combination of the given parameters.  Degenerate modes are skipped.
double stability_scan(std::span<const double> betas, std::span<const double> lambdas,
                      std::span<const double> dts, int n_theta);

struct ConvergenceLevel {
    double h = 0.0;
    double dt = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels;
    /// orders[k] = log(l2_k / l2_{k+1}) / log(step_k / step_{k+1}), where step is h
    /// for spatial studies and dt for temporal ones.
    std::vector<double> orders;
};

struct ConvergenceSetup {
    GewParams params;
    SolitonSpec soliton;
    double a = 10.0;
    double b = 50.0;
    double h0 = 0.2;
    double dt0 = 0.2;
    double t_final = 2.0;
    int inner_iters = 5;
};

/// Halves h at each level with dt scaled as h^{3/2} (rounded so it divides t_final).
ConvergenceReport spatial_convergence(const ConvergenceSetup& setup, int levels);

/// Halves dt at each level on the fixed mesh spacing h0.
ConvergenceReport temporal_convergence(const ConvergenceSetup& setup, int levels);

/// Observed orders from explicit (h, dt) levels; `by_time` selects dt as the
/// refinement variable.  Throws ConfigError when two consecutive levels share the
/// same step (order undefined) or an error is not positive.
std::vector<double> observed_orders(std::span<const ConvergenceLevel> levels, bool by_time);

/// Runs one single-soliton case to t_final and returns its nodal error.
ConvergenceLevel solve_level(const ConvergenceSetup& setup, double h, double dt);

} // namespace gew
