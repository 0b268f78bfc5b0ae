#include "gew/stepper.hpp"

#include "gew/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gew {

int TimeGrid::n_steps() const {
    validate();
    const double ratio = t_max / dt;
    const double n = std::round(ratio);
    if (std::abs(n * dt - t_max) > 1e-9 * t_max) {
        std::ostringstream msg;
        msg << "time step " << dt << " does not divide t_max = " << t_max;
        throw ConfigError(msg.str());
    }
    return static_cast<int>(n);
}

void TimeGrid::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max must be > 0");
    if (inner_iters < 1) throw ConfigError("inner_iters must be >= 1");
}

SplineVec project_initial(const Profile& f, const Mesh& mesh) {
    const int n = mesh.n_elems();
    SplineVec delta(mesh);
    // Last two rows: delta_{N-1} + delta_N = f(x_N) and -2 delta_{N-1} + 2 delta_N = h f'(x_N) = 0.
    const double fn = f(mesh.knot(n));
    delta[n] = 0.5 * fn;
    delta[n - 1] = 0.5 * fn;
    for (int m = n - 1; m >= 0; --m) delta[m - 1] = f(mesh.knot(m)) - delta[m];
    return delta;
}

std::vector<double> banded_solve(const BandedSystem& system) {
    const std::size_t n = system.size();
    if (system.rhs.size() != n) throw ContractError("banded_solve: rhs length differs from dimension");
    if (n == 0) return {};

    // Work on a copy: w[r][k] is column r-2+k.
    std::vector<std::array<double, 4>> w = system.bands;
    std::vector<double> y = system.rhs;

    std::vector<double> scale(n);
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (double v : w[r]) s = std::max(s, std::abs(v));
        scale[r] = s;
    }

    for (std::size_t k = 0; k < n; ++k) {
        const double pivot = w[k][2];
        if (!(std::abs(pivot) > 1e-14 * scale[k])) {
            std::ostringstream msg;
            msg << "banded_solve: pivot " << pivot << " at row " << k << " is numerically zero";
            throw SingularMatrixError(msg.str());
        }
        const double upper = (k + 1 < n) ? w[k][3] : 0.0;
        // rows k+1 (column k at position 1) and k+2 (column k at position 0)
        for (std::size_t d = 1; d <= 2 && k + d < n; ++d) {
            auto& row = w[k + d];
            const std::size_t pos = 2 - d;
            const double factor = row[pos] / pivot;
            if (factor == 0.0) continue;
            row[pos] = 0.0;
            row[pos + 1] -= factor * upper;
            y[k + d] -= factor * y[k];
        }
    }

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = y[i];
        if (i + 1 < n) acc -= w[i][3] * x[i + 1];
        x[i] = acc / w[i][2];
    }
    return x;
}

double relative_residual(const BandedSystem& system, std::span<const double> x) {
    const std::vector<double> ax = system.multiply(x);
    double res = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        res = std::max(res, std::abs(ax[i] - system.rhs[i]));
        scale = std::max(scale, std::abs(system.rhs[i]));
    }
    return scale > 0.0 ? res / scale : res;
}

StepperState make_initial_state(SplineVec delta0) {
    return StepperState{std::nullopt, std::move(delta0), 0, 0.0};
}

namespace {

SplineVec combine(const SplineVec& u, double a, const SplineVec& v, double b) {
    std::vector<double> c(u.size());
    const auto cu = u.coeffs();
    const auto cv = v.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * cu[i] + b * cv[i];
    return SplineVec(u.mesh(), std::move(c));
}

SplineVec solve_cn(const SplineVec& linearization, const SplineVec& current, const GewParams& params,
                   double dt) {
    const BandedSystem sys = assemble_cn_system(linearization, current, params, dt);
    const std::vector<double> x = banded_solve(sys);
    // The operator is not diagonally dominant (the sawtooth mode is pinned only
    // by the first rows), so every solve is checked by its residual instead.
    const double res = relative_residual(sys, x);
    if (!(res < 1e-10)) {
        std::ostringstream msg;
        msg << "Crank-Nicolson solve lost accuracy: relative residual " << res;
        throw SingularMatrixError(msg.str());
    }
    return expand_free(current.mesh(), x);
}

} // namespace

StepperState step(const StepperState& state, const GewParams& params, const TimeGrid& grid) {
    grid.validate();
    const SplineVec& curr = state.curr;

    // delta^{n*} = delta^n + (delta^n - delta^{n-1})/2
    SplineVec predictor = state.prev ? combine(curr, 1.5, *state.prev, -0.5) : curr;
    SplineVec next = solve_cn(predictor, curr, params, grid.dt);
    for (int it = 1; it < grid.inner_iters; ++it) next = solve_cn(combine(curr, 0.5, next, 0.5), curr, params, grid.dt);

    StepperState out{curr, std::move(next), state.step + 1, 0.0};
    out.t = out.step * grid.dt;
    return out;
}

const ReportRow* RunReport::row_at(double t, double tol) const {
    for (const auto& r : rows)
        if (std::abs(r.t - t) <= tol) return &r;
    return nullptr;
}

namespace {

std::vector<int> to_step_indices(std::span<const double> times, double dt, int n_steps, const char* what) {
    std::vector<int> idx;
    for (double t : times) {
        const double n = std::round(t / dt);
        if (t < 0.0 || std::abs(n * dt - t) > 1e-9 * std::max(1.0, t) || n > n_steps) {
            std::ostringstream msg;
            msg << what << " time " << t << " is not a step of the time grid";
            throw ConfigError(msg.str());
        }
        idx.push_back(static_cast<int>(n));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

} // namespace

RunReport run(const RunConfig& config) {
    config.params.validate();
    const int n_steps = config.grid.n_steps();
    const double dt = config.grid.dt;
    const auto samples = to_step_indices(config.sample_times, dt, n_steps, "sample");
    const auto snaps = to_step_indices(config.snapshot_times, dt, n_steps, "snapshot");

    const Mesh& mesh = config.mesh;
    StepperState state = make_initial_state(project_initial(config.initial, mesh));
    RunReport report;
    report.has_norms = config.exact.has_value();

    auto sample_i = samples.begin();
    auto snap_i = snaps.begin();
    const auto record = [&](const StepperState& s) {
        const double t = s.step * dt;
        if (sample_i != samples.end() && *sample_i == s.step) {
            ReportRow row;
            row.t = t;
            row.inv = invariants(s.curr, config.params);
            if (config.exact) {
                std::vector<double> ex(static_cast<std::size_t>(mesh.n_elems()) + 1);
                for (int m = 0; m <= mesh.n_elems(); ++m)
                    ex[static_cast<std::size_t>(m)] = (*config.exact)(mesh.knot(m), t);
                row.norms = error_norms(s.curr, ex);
            }
            row.peaks = find_peaks(s.curr, config.peak_threshold);
            report.rows.push_back(std::move(row));
            ++sample_i;
        }
        if (snap_i != snaps.end() && *snap_i == s.step) {
            report.snapshots.push_back({t, mesh.knots(), s.curr.nodal_values()});
            ++snap_i;
        }
    };

    record(state);
    while (state.step < n_steps) {
        state = step(state, config.params, config.grid);
        record(state);
    }
    report.final_state = state.curr;
    report.final_time = state.step * dt;
    return report;
}

} // namespace gew
