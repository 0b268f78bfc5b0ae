#pragma once

// Generalised equal width equation
//
//     U_t + eps U^p U_x - mu U_xxt = 0
//
// with its travelling solitary wave, the initial profiles of the three
// experiment families, the three conserved integrals and the nodal error norms.

#include "gew/mesh_spline.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gew {

struct GewParams {
    int p = 2;
    double eps = 3.0;
    double mu = 1.0;

    /// Throws ConfigError unless p >= 1, eps > 0, mu > 0.
    void validate() const;

    friend bool operator==(const GewParams&, const GewParams&) = default;
};

struct SolitonSpec {
    double c = 0.5; // speed
    double x0 = 30.0;

    friend bool operator==(const SolitonSpec&, const SolitonSpec&) = default;
};

struct Invariants {
    double i1 = 0.0; // mass
    double i2 = 0.0; // momentum
    double i3 = 0.0; // energy

    double operator[](int k) const { return k == 0 ? i1 : (k == 1 ? i2 : i3); }
};

struct ErrorNorms {
    double l2 = 0.0;
    double linf = 0.0;
};

using Profile = std::function<double(double)>;

/// (c(p+1)(p+2) / (2 eps))^{1/p}.
double amplitude(const GewParams& params, double c);

double exact_solitary(double x, double t, const GewParams& params, const SolitonSpec& spec);

Profile ic_single(const GewParams& params, const SolitonSpec& spec);

/// Linear superposition of two solitary profiles at t = 0.  The waves are assumed
/// to be well separated; overlap is not checked.
Profile ic_two_waves(const GewParams& params, const std::array<SolitonSpec, 2>& specs);

/// exp(-x^2).
Profile ic_maxwellian();

/// How the three integrals are discretised.
enum class InvariantRule {
    /// h * sum over the N+1 knots of U_m, U_m^2 + mu U'_m^2 and U_m^{p+2}, with
    /// U'_m = (2/h)(delta_m - delta_{m-1}).  Used for all reported invariants.
    Nodal,
    /// Exact integral of the spline field by 8-point Gauss-Legendre per element.
    Gauss,
};

/// I1 = int U, I2 = int U^2 + mu U_x^2, I3 = int U^{p+2}.
Invariants invariants(const SplineVec& delta, const GewParams& params,
                      InvariantRule rule = InvariantRule::Nodal);

/// Nodal L2 (sqrt(h sum e_j^2)) and Linf norms against exact nodal values.
ErrorNorms error_norms(const SplineVec& delta, std::span<const double> exact_at_nodes);

/// Exact solitary values at the mesh knots.
std::vector<double> exact_at_nodes(const Mesh& mesh, double t, const GewParams& params,
                                   const SolitonSpec& spec);

struct Peak {
    double x;
    double amplitude;
};

/// Local maxima of the nodal values above `min_height`, each refined by the
/// parabola through the maximal node and its two neighbours.  Sorted by x.
std::vector<Peak> find_peaks(const SplineVec& delta, double min_height);

/// The tallest peak; nullopt for a field with no positive interior maximum.
std::optional<Peak> highest_peak(const SplineVec& delta);

namespace reference {
/// Closed-form invariants of the p = 2, c = 0.5, eps = 3, mu = 1 solitary wave.
inline constexpr Invariants kSingleP2Analytic{3.1415927, 2.6666667, 1.3333333};
} // namespace reference

} // namespace gew
