#pragma once

// Crank-Nicolson Petrov-Galerkin system.
//
// Weight row m (test function L_m, m = 0..N) couples delta_{m-2} .. delta_{m+1}:
// element m-1 contributes its second element-matrix row, element m its first.
// With beta = mu/h^2 and per-element lumped lambda the row reads
//
//     [A + beta (B - C) + dt/2 lambda D] delta^{n+1} = [A + beta (B - C) - dt/2 lambda D] delta^n
//
// The homogeneous Dirichlet conditions delta_{-1} = -delta_0 and
// delta_N = -delta_{N-1} remove two unknowns; rows 0..N-1 are kept, which
// leaves a square system in delta_0..delta_{N-1} with band offsets -2..+1.

#include "gew/mesh_spline.hpp"
#include "gew/problem.hpp"

#include <array>
#include <span>
#include <vector>

namespace gew {

using ElementMatrix = std::array<std::array<double, 3>, 2>;

struct ElementMatrices {
    ElementMatrix A; // int L_i phi_j
    ElementMatrix B; // int L_i' phi_j'
    ElementMatrix C; // [L_i phi_j']_0^1
    ElementMatrix D; // int L_i phi_j'
};

ElementMatrices element_matrices();

/// eps / (2^p h) * (delta_{m-1} + 2 delta_m + delta_{m+1})^p, i.e. eps/h times the
/// p-th power of the element-midpoint nodal average.
double lambda_element(const SplineVec& delta, int m, const GewParams& params);

std::vector<double> element_lambdas(const SplineVec& delta, const GewParams& params);

/// Weights on delta_{m-2}, delta_{m-1}, delta_m, delta_{m+1}.
struct RowStencil {
    std::array<double, 4> lhs{};
    std::array<double, 4> rhs{};
};

/// Row m of the Crank-Nicolson pair.  lambda1 belongs to element m-1, lambda2 to
/// element m; at the boundary rows (m == 0, m == n_elems) only the existing
/// element contributes and the other lambda is ignored.
RowStencil global_row(int m, int n_elems, double beta, double lambda1, double lambda2, double dt);

/// The single-lambda interior coefficients (gamma_1..gamma_4 of the left-hand side;
/// the right-hand side uses them in reverse order).
std::array<double, 4> gamma_coefficients(double beta, double lambda, double dt);

/// Square banded matrix with offsets -2..+1 (row r holds columns r-2..r+1) and
/// its right-hand side.
struct BandedSystem {
    std::vector<std::array<double, 4>> bands;
    std::vector<double> rhs;

    std::size_t size() const noexcept { return bands.size(); }

    /// Entry (row, col), zero outside the band.
    double at(std::size_t row, std::size_t col) const;

    std::vector<double> multiply(std::span<const double> x) const;
};

/// Assembles the Crank-Nicolson system.  `linearization` supplies lambda for each
/// element; `current` is delta^n for the right-hand side.  Throws ConfigError for
/// meshes with fewer than three elements.
BandedSystem assemble_cn_system(const SplineVec& linearization, const SplineVec& current,
                                const GewParams& params, double dt);

/// Restores delta_{-1} and delta_N from the free coefficients delta_0..delta_{N-1}.
SplineVec expand_free(const Mesh& mesh, std::span<const double> free);

} // namespace gew
