#pragma once

#include "gew/config.hpp"
#include "gew/stepper.hpp"

namespace gew {

/// Initial profile for the configured family (one wave, two waves or exp(-x^2)).
Profile initial_profile(const ExperimentConfig& config);

/// Translates an experiment description into stepper input.  Only the single
/// solitary wave carries an exact solution, so only it gets error norms.
RunConfig to_run_config(const ExperimentConfig& config);

RunReport run_experiment(const ExperimentConfig& config);

} // namespace gew
