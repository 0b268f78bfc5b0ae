#include "gew/mesh_spline.hpp"

#include "gew/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gew {

namespace {

void require_unit_interval(double eta, const char* what) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        std::ostringstream msg;
        msg << what << ": local coordinate " << eta << " outside [0,1]";
        throw DomainError(msg.str());
    }
}

} // namespace

QuadShapes local_quad_shapes(double eta) {
    require_unit_interval(eta, "local_quad_shapes");
    const double s = 1.0 - eta;
    return {s * s, 1.0 + 2.0 * eta - 2.0 * eta * eta, eta * eta};
}

QuadShapes local_quad_shape_derivs(double eta) {
    require_unit_interval(eta, "local_quad_shape_derivs");
    return {-2.0 * (1.0 - eta), 2.0 - 4.0 * eta, 2.0 * eta};
}

LinearShapes local_linear_shapes(double eta) {
    require_unit_interval(eta, "local_linear_shapes");
    return {1.0 - eta, eta};
}

LinearShapes local_linear_shape_derivs(double eta) {
    require_unit_interval(eta, "local_linear_shape_derivs");
    return {-1.0, 1.0};
}

Mesh::Mesh(double a, double b, int n_elems) : a_(a), b_(b), n_(n_elems), h_(0.0) {
    if (n_elems < 1) throw ContractError("Mesh: need at least one element");
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw ContractError("Mesh: require finite a < b");
    h_ = (b - a) / n_elems;
}

Mesh Mesh::with_spacing(double a, double b, double h) {
    if (!(h > 0.0)) throw ContractError("Mesh: spacing must be positive");
    const double ratio = (b - a) / h;
    const double n = std::round(ratio);
    if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) {
        std::ostringstream msg;
        msg << "Mesh: spacing " << h << " does not divide [" << a << ", " << b << "]";
        throw ContractError(msg.str());
    }
    return Mesh(a, b, static_cast<int>(n));
}

double Mesh::knot(int m) const {
    if (m < 0 || m > n_) throw ContractError("Mesh::knot: index out of range");
    if (m == n_) return b_;
    return a_ + m * h_;
}

std::vector<double> Mesh::knots() const {
    std::vector<double> x(static_cast<std::size_t>(n_) + 1);
    for (int m = 0; m <= n_; ++m) x[static_cast<std::size_t>(m)] = knot(m);
    return x;
}

std::pair<int, double> Mesh::locate(double x) const {
    if (!(x >= a_ && x <= b_)) {
        std::ostringstream msg;
        msg << "Mesh::locate: x = " << x << " outside [" << a_ << ", " << b_ << "]";
        throw DomainError(msg.str());
    }
    if (x == b_) return {n_ - 1, 1.0};
    int m = static_cast<int>(std::floor((x - a_) / h_));
    if (m >= n_) m = n_ - 1;
    if (m < 0) m = 0;
    // floor() can be off by one when x sits on a knot up to rounding
    if (x < knot(m) && m > 0) --m;
    else if (m + 1 < n_ && x >= knot(m + 1)) ++m;
    const double eta = std::clamp((x - knot(m)) / h_, 0.0, 1.0);
    return {m, eta};
}

SplineVec::SplineVec(Mesh mesh)
    : mesh_(mesh), coeffs_(static_cast<std::size_t>(mesh.n_elems()) + 2, 0.0) {}

SplineVec::SplineVec(Mesh mesh, std::vector<double> coeffs) : mesh_(mesh), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(mesh_.n_elems()) + 2)
        throw ContractError("SplineVec: coefficient count must be N+2");
}

double SplineVec::at(int j) const {
    if (j < -1 || j > mesh_.n_elems()) throw ContractError("SplineVec::at: index out of range");
    return (*this)[j];
}

std::vector<double> SplineVec::nodal_values() const {
    const int n = mesh_.n_elems();
    std::vector<double> u(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) u[static_cast<std::size_t>(m)] = nodal_value(m);
    return u;
}

double eval_on_element(const SplineVec& delta, int m, double eta) {
    const auto s = local_quad_shapes(eta);
    return delta[m - 1] * s.left + delta[m] * s.mid + delta[m + 1] * s.right;
}

double eval_deriv_on_element(const SplineVec& delta, int m, double eta) {
    const auto s = local_quad_shape_derivs(eta);
    return (delta[m - 1] * s.left + delta[m] * s.mid + delta[m + 1] * s.right) / delta.mesh().h();
}

double eval_field(const SplineVec& delta, double x) {
    const auto [m, eta] = delta.mesh().locate(x);
    return eval_on_element(delta, m, eta);
}

double eval_field_deriv(const SplineVec& delta, double x) {
    const auto [m, eta] = delta.mesh().locate(x);
    return eval_deriv_on_element(delta, m, eta);
}

} // namespace gew
