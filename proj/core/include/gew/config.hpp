#pragma once

// Experiment configuration: a flat `key = value` text format.
//
//   # single solitary wave
//   problem = single
//   p = 2
//   c = 0.5
//   x0 = 30
//   domain = 0, 80
//   h = 0.1
//   dt = 0.2
//   tmax = 20
//
// Unset keys take the defaults of the chosen problem kind.  Blank lines and
// text after `#` are ignored.

#include "gew/mesh_spline.hpp"
#include "gew/problem.hpp"
#include "gew/stepper.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gew {

enum class ProblemKind { Single, Interaction, Maxwellian };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view text);

struct ExperimentConfig {
    ProblemKind kind = ProblemKind::Single;
    GewParams params;
    double a = 0.0;
    double b = 80.0;
    int n_elems = 800;
    TimeGrid grid;
    std::vector<SolitonSpec> solitons;
    std::vector<double> sample_times;
    std::vector<double> snapshot_times;
    std::string output_dir = "out";

    Mesh mesh() const { return Mesh(a, b, n_elems); }

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Defaults for each problem family (single: p = 2, c = 0.5, x0 = 30 on [0,80]).
ExperimentConfig default_config(ProblemKind kind);

/// A `key=value` override from the command line.
using Override = std::pair<std::string, std::string>;

/// Parses and validates.  Errors name the offending line ("line 4: ...") or,
/// for overrides, "command line".
ExperimentConfig parse_config(std::string_view text, const std::vector<Override>& overrides = {});

ExperimentConfig load_config(const std::string& path, const std::vector<Override>& overrides = {});

/// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const ExperimentConfig& config);

} // namespace gew
