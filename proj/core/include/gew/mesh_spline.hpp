#pragma once

// Uniform 1D mesh with the quadratic (trial) and linear (weight) B-spline
// bases used by the Petrov-Galerkin discretisation.
//
// On element [x_m, x_{m+1}] with local coordinate h*eta = x - x_m the three
// non-vanishing quadratic splines are
//
//     phi_{m-1} = (1 - eta)^2,  phi_m = 1 + 2 eta - 2 eta^2,  phi_{m+1} = eta^2
//
// and the two linear splines are L_m = 1 - eta, L_{m+1} = eta.  A field is
// U(x) = sum_{j=-1}^{N} delta_j phi_j(x), so that U(x_m) = delta_{m-1} + delta_m.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gew {

struct QuadShapes {
    double left;  // phi_{m-1}
    double mid;   // phi_m
    double right; // phi_{m+1}
};

struct LinearShapes {
    double left;  // L_m
    double right; // L_{m+1}
};

/// Quadratic shape values at local coordinate eta in [0,1]; throws DomainError otherwise.
QuadShapes local_quad_shapes(double eta);

/// d/d(eta) of the quadratic shapes.
QuadShapes local_quad_shape_derivs(double eta);

LinearShapes local_linear_shapes(double eta);

/// d/d(eta) of the linear shapes, (-1, 1).
LinearShapes local_linear_shape_derivs(double eta);

/// Uniform knot grid a = x_0 < x_1 < ... < x_N = b.
class Mesh {
public:
    Mesh(double a, double b, int n_elems);

    /// Builds a mesh with spacing as close as possible to `h`; requires (b-a)/h to be
    /// an integer to within 1e-9 relative, otherwise throws ContractError.
    static Mesh with_spacing(double a, double b, double h);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n_elems() const noexcept { return n_; }
    double h() const noexcept { return h_; }

    /// x_m for m = 0..N; x_N is returned as b exactly.
    double knot(int m) const;
    std::vector<double> knots() const;

    /// Element m with x_m <= x < x_{m+1} and its local coordinate; x == b maps to
    /// element N-1 with eta = 1.  Throws DomainError for x outside [a,b].
    std::pair<int, double> locate(double x) const;

    friend bool operator==(const Mesh&, const Mesh&) = default;

private:
    double a_;
    double b_;
    int n_;
    double h_;
};

/// Quadratic B-spline coefficients delta_j, j = -1..N, bound to a mesh.
class SplineVec {
public:
    explicit SplineVec(Mesh mesh);
    SplineVec(Mesh mesh, std::vector<double> coeffs);

    const Mesh& mesh() const noexcept { return mesh_; }

    /// Basis index j in [-1, N].
    double operator[](int j) const { return coeffs_[static_cast<std::size_t>(j + 1)]; }
    double& operator[](int j) { return coeffs_[static_cast<std::size_t>(j + 1)]; }

    double at(int j) const;

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::span<double> coeffs() noexcept { return coeffs_; }

    /// U(x_m) = delta_{m-1} + delta_m.
    double nodal_value(int m) const { return (*this)[m - 1] + (*this)[m]; }
    /// U'(x_m) = (2/h)(delta_m - delta_{m-1}) in physical coordinates.
    double nodal_slope(int m) const { return 2.0 * ((*this)[m] - (*this)[m - 1]) / mesh_.h(); }

    std::vector<double> nodal_values() const;

    friend bool operator==(const SplineVec&, const SplineVec&) = default;

private:
    Mesh mesh_;
    std::vector<double> coeffs_;
};

double eval_field(const SplineVec& delta, double x);

/// dU/dx in physical coordinates.
double eval_field_deriv(const SplineVec& delta, double x);

/// Field value on element m at local coordinate eta, bypassing the point location.
double eval_on_element(const SplineVec& delta, int m, double eta);
double eval_deriv_on_element(const SplineVec& delta, int m, double eta);

} // namespace gew
