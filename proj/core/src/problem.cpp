#include "gew/problem.hpp"

#include "gew/errors.hpp"
#include "gew/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gew {

void GewParams::validate() const {
    std::ostringstream msg;
    if (p < 1) msg << "p must be >= 1 (got " << p << ")";
    else if (!(eps > 0.0) || !std::isfinite(eps)) msg << "eps must be > 0 (got " << eps << ")";
    else if (!(mu > 0.0) || !std::isfinite(mu)) msg << "mu must be > 0 (got " << mu << ")";
    else return;
    throw ConfigError(msg.str());
}

double amplitude(const GewParams& params, double c) {
    const int p = params.p;
    const double base = c * (p + 1) * (p + 2) / (2.0 * params.eps);
    return std::pow(base, 1.0 / p);
}

double exact_solitary(double x, double t, const GewParams& params, const SolitonSpec& spec) {
    const int p = params.p;
    const double arg = p / (2.0 * std::sqrt(params.mu)) * (x - spec.c * t - spec.x0);
    const double sech = 1.0 / std::cosh(arg);
    return amplitude(params, spec.c) * std::pow(sech, 2.0 / p);
}

Profile ic_single(const GewParams& params, const SolitonSpec& spec) {
    return [params, spec](double x) { return exact_solitary(x, 0.0, params, spec); };
}

Profile ic_two_waves(const GewParams& params, const std::array<SolitonSpec, 2>& specs) {
    return [params, specs](double x) {
        return exact_solitary(x, 0.0, params, specs[0]) + exact_solitary(x, 0.0, params, specs[1]);
    };
}

Profile ic_maxwellian() {
    return [](double x) { return std::exp(-x * x); };
}

namespace {

Invariants nodal_invariants(const SplineVec& delta, const GewParams& params) {
    const Mesh& mesh = delta.mesh();
    Invariants out;
    for (int m = 0; m <= mesh.n_elems(); ++m) {
        const double u = delta.nodal_value(m);
        const double ux = delta.nodal_slope(m);
        out.i1 += u;
        out.i2 += u * u + params.mu * ux * ux;
        out.i3 += std::pow(u, params.p + 2);
    }
    out.i1 *= mesh.h();
    out.i2 *= mesh.h();
    out.i3 *= mesh.h();
    return out;
}

Invariants gauss_invariants(const SplineVec& delta, const GewParams& params) {
    const Mesh& mesh = delta.mesh();
    const QuadratureRule& rule = element_rule();
    const double h = mesh.h();
    const int p2 = params.p + 2;

    Invariants out;
    for (int m = 0; m < mesh.n_elems(); ++m) {
        double s1 = 0.0;
        double s2 = 0.0;
        double s3 = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double eta = rule.nodes[q];
            const double w = rule.weights[q];
            const double u = eval_on_element(delta, m, eta);
            const double ux = eval_deriv_on_element(delta, m, eta);
            s1 += w * u;
            s2 += w * (u * u + params.mu * ux * ux);
            s3 += w * std::pow(u, p2);
        }
        out.i1 += h * s1;
        out.i2 += h * s2;
        out.i3 += h * s3;
    }
    return out;
}

} // namespace

Invariants invariants(const SplineVec& delta, const GewParams& params, InvariantRule rule) {
    return rule == InvariantRule::Nodal ? nodal_invariants(delta, params) : gauss_invariants(delta, params);
}

ErrorNorms error_norms(const SplineVec& delta, std::span<const double> exact) {
    const Mesh& mesh = delta.mesh();
    const auto n_nodes = static_cast<std::size_t>(mesh.n_elems()) + 1;
    if (exact.size() != n_nodes) {
        std::ostringstream msg;
        msg << "error_norms: expected " << n_nodes << " nodal values, got " << exact.size();
        throw ContractError(msg.str());
    }
    double sum_sq = 0.0;
    double max_abs = 0.0;
    for (int j = 0; j <= mesh.n_elems(); ++j) {
        const double e = exact[static_cast<std::size_t>(j)] - delta.nodal_value(j);
        sum_sq += e * e;
        max_abs = std::max(max_abs, std::abs(e));
    }
    return {std::sqrt(mesh.h() * sum_sq), max_abs};
}

std::vector<double> exact_at_nodes(const Mesh& mesh, double t, const GewParams& params,
                                   const SolitonSpec& spec) {
    std::vector<double> u(static_cast<std::size_t>(mesh.n_elems()) + 1);
    for (int m = 0; m <= mesh.n_elems(); ++m)
        u[static_cast<std::size_t>(m)] = exact_solitary(mesh.knot(m), t, params, spec);
    return u;
}

std::vector<Peak> find_peaks(const SplineVec& delta, double min_height) {
    const Mesh& mesh = delta.mesh();
    const std::vector<double> u = delta.nodal_values();
    std::vector<Peak> peaks;
    for (std::size_t j = 1; j + 1 < u.size(); ++j) {
        if (!(u[j] > min_height && u[j] >= u[j - 1] && u[j] > u[j + 1])) continue;
        // Vertex of the parabola through (-1, u[j-1]), (0, u[j]), (1, u[j+1]).
        const double curv = u[j - 1] - 2.0 * u[j] + u[j + 1];
        double s = 0.0;
        double amp = u[j];
        if (curv < 0.0) {
            s = 0.5 * (u[j - 1] - u[j + 1]) / curv;
            amp = u[j] - 0.25 * (u[j - 1] - u[j + 1]) * s;
        }
        peaks.push_back({mesh.knot(static_cast<int>(j)) + s * mesh.h(), amp});
    }
    return peaks;
}

std::optional<Peak> highest_peak(const SplineVec& delta) {
    const auto peaks = find_peaks(delta, 0.0);
    if (peaks.empty()) return std::nullopt;
    return *std::max_element(peaks.begin(), peaks.end(),
                             [](const Peak& l, const Peak& r) { return l.amplitude < r.amplitude; });
}

} // namespace gew
