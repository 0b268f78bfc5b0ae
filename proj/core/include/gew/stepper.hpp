#pragma once

#include "gew/assembly.hpp"
#include "gew/mesh_spline.hpp"
#include "gew/problem.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gew {

struct TimeGrid {
    double dt = 0.2;
    double t_max = 20.0;
    /// Number of linear solves per step.  The first uses the extrapolated
    /// predictor, each further one refreshes lambda at the time-centred state.
    int inner_iters = 5;

    /// round(t_max / dt); throws ConfigError when dt does not divide t_max.
    int n_steps() const;
    void validate() const;

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct StepperState {
    std::optional<SplineVec> prev; // delta^{n-1}, empty before the first step
    SplineVec curr;                // delta^n
    int step = 0;
    double t = 0.0;
};

/// Coefficients with U(x_m) = f(x_m) at every knot and zero slope at x = b,
/// solved by back-substitution from the right boundary.
SplineVec project_initial(const Profile& f, const Mesh& mesh);

/// LU factorisation without pivoting of the (-2..+1) band.  Throws
/// SingularMatrixError when a pivot falls below 1e-14 of its row scale.
std::vector<double> banded_solve(const BandedSystem& system);

/// max|A x - rhs| / max|rhs| (the absolute residual when rhs = 0).
double relative_residual(const BandedSystem& system, std::span<const double> x);

StepperState make_initial_state(SplineVec delta0);

StepperState step(const StepperState& state, const GewParams& params, const TimeGrid& grid);

using ExactSolution = std::function<double(double x, double t)>;

struct RunConfig {
    Mesh mesh;
    GewParams params;
    TimeGrid grid;
    Profile initial;
    std::optional<ExactSolution> exact;
    std::vector<double> sample_times;   // invariants (and norms) recorded here
    std::vector<double> snapshot_times; // full nodal profiles recorded here
    double peak_threshold = 0.05;       // minimum height reported by find_peaks
};

struct ReportRow {
    double t = 0.0;
    Invariants inv;
    std::optional<ErrorNorms> norms;
    std::vector<Peak> peaks;
};

struct Snapshot {
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> u;
};

struct RunReport {
    std::vector<ReportRow> rows; // sorted by t
    std::vector<Snapshot> snapshots;
    bool has_norms = false;
    std::optional<SplineVec> final_state;
    double final_time = 0.0;

    const ReportRow* row_at(double t, double tol = 1e-9) const;
};

/// Projects the initial profile and marches to grid.t_max.
RunReport run(const RunConfig& config);

} // namespace gew
