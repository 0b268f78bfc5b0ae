#include "gew/analysis.hpp"

#include "gew/assembly.hpp"
#include "gew/errors.hpp"
#include "gew/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gew {

GrowthFactor growth_factor(double theta, double beta, double lambda, double dt) {
    const double a = (11.0 + 12.0 * beta) * std::cos(0.5 * theta) + (1.0 - 12.0 * beta) * std::cos(1.5 * theta);
    const double b = 2.0 * lambda * dt * (3.0 * std::sin(0.5 * theta) + std::sin(1.5 * theta));
    const double scale = std::abs(11.0 + 12.0 * beta) + std::abs(1.0 - 12.0 * beta) + 8.0 * std::abs(lambda * dt);
    if (std::abs(a) + std::abs(b) <= 1e-13 * scale) throw DomainError("growth_factor: degenerate mode (a = b = 0)");
    const std::complex<double> num(a, -b);
    const std::complex<double> den(a, b);
    const std::complex<double> g = num / den;
    return {g.real(), g.imag()};
}

std::complex<double> stencil_growth_factor(double theta, double beta, double lambda, double dt) {
    // interior row: any m with 0 < m < N
    const RowStencil row = global_row(1, 3, beta, lambda, lambda, dt);
    std::complex<double> lhs = 0.0;
    std::complex<double> rhs = 0.0;
    for (int k = 0; k < 4; ++k) {
        const std::complex<double> mode = std::polar(1.0, (k - 1.5) * theta);
        lhs += row.lhs[static_cast<std::size_t>(k)] * mode;
        rhs += row.rhs[static_cast<std::size_t>(k)] * mode;
    }
    return rhs / lhs;
}

double stability_scan(std::span<const double> betas, std::span<const double> lambdas,
                      std::span<const double> dts, int n_theta) {
    if (betas.empty() || lambdas.empty() || dts.empty() || n_theta < 1)
        throw ConfigError("stability_scan: parameter ranges must be non-empty");
    double worst = 0.0;
    for (double beta : betas)
        for (double lambda : lambdas)
            for (double dt : dts)
                for (int k = 0; k < n_theta; ++k) {
                    const double theta = 2.0 * std::numbers::pi * (k + 1) / (n_theta + 1);
                    try {
                        const GrowthFactor g = growth_factor(theta, beta, lambda, dt);
                        worst = std::max(worst, std::abs(g.modulus() - 1.0));
                    } catch (const DomainError&) {
                        // degenerate mode, no amplification defined
                    }
                }
    return worst;
}

ConvergenceLevel solve_level(const ConvergenceSetup& setup, double h, double dt) {
    const Mesh mesh = Mesh::with_spacing(setup.a, setup.b, h);
    RunConfig cfg{mesh,
                  setup.params,
                  TimeGrid{dt, setup.t_final, setup.inner_iters},
                  ic_single(setup.params, setup.soliton),
                  ExactSolution([params = setup.params, spec = setup.soliton](double x, double t) {
                      return exact_solitary(x, t, params, spec);
                  }),
                  {setup.t_final},
                  {}};
    const RunReport report = run(cfg);
    const ErrorNorms& e = *report.rows.back().norms;
    return {mesh.h(), dt, e.l2, e.linf};
}

std::vector<double> observed_orders(std::span<const ConvergenceLevel> levels, bool by_time) {
    std::vector<double> orders;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        const double s0 = by_time ? levels[k].dt : levels[k].h;
        const double s1 = by_time ? levels[k + 1].dt : levels[k + 1].h;
        if (s0 == s1) throw ConfigError("observed_orders: identical grids at consecutive levels");
        if (!(levels[k].l2 > 0.0) || !(levels[k + 1].l2 > 0.0))
            throw ConfigError("observed_orders: errors must be positive");
        orders.push_back(std::log(levels[k].l2 / levels[k + 1].l2) / std::log(s0 / s1));
    }
    return orders;
}

namespace {

double dividing_step(double t_final, double target) {
    const double n = std::ceil(t_final / target - 1e-9);
    return t_final / n;
}

} // namespace

ConvergenceReport spatial_convergence(const ConvergenceSetup& setup, int levels) {
    if (levels < 2) throw ConfigError("spatial_convergence: need at least two levels");
    ConvergenceReport report;
    for (int k = 0; k < levels; ++k) {
        const double h = setup.h0 / std::ldexp(1.0, k);
        const double dt = dividing_step(setup.t_final, setup.dt0 * std::pow(h / setup.h0, 1.5));
        report.levels.push_back(solve_level(setup, h, dt));
    }
    report.orders = observed_orders(report.levels, false);
    return report;
}

ConvergenceReport temporal_convergence(const ConvergenceSetup& setup, int levels) {
    if (levels < 2) throw ConfigError("temporal_convergence: need at least two levels");
    ConvergenceReport report;
    for (int k = 0; k < levels; ++k) {
        const double dt = dividing_step(setup.t_final, setup.dt0 / std::ldexp(1.0, k));
        report.levels.push_back(solve_level(setup, setup.h0, dt));
    }
    report.orders = observed_orders(report.levels, true);
    return report;
}

} // namespace gew
