#include "gew/experiment.hpp"

#include "gew/errors.hpp"

namespace gew {

Profile initial_profile(const ExperimentConfig& config) {
    switch (config.kind) {
    case ProblemKind::Single:
        return ic_single(config.params, config.solitons.at(0));
    case ProblemKind::Interaction:
        return ic_two_waves(config.params, {config.solitons.at(0), config.solitons.at(1)});
    case ProblemKind::Maxwellian:
        return ic_maxwellian();
    }
    throw ConfigError("unknown problem kind");
}

RunConfig to_run_config(const ExperimentConfig& config) {
    config.validate();
    RunConfig rc{config.mesh(), config.params, config.grid, initial_profile(config), std::nullopt,
                 config.sample_times, config.snapshot_times};
    if (config.kind == ProblemKind::Single) {
        const GewParams params = config.params;
        const SolitonSpec spec = config.solitons.front();
        rc.exact = [params, spec](double x, double t) { return exact_solitary(x, t, params, spec); };
    }
    return rc;
}

RunReport run_experiment(const ExperimentConfig& config) { return run(to_run_config(config)); }

} // namespace gew
