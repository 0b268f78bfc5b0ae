// Command line front end.
//
//   gew run configs/single_p2.cfg --dt 0.1 --out out/dt01
//   gew compare configs/single_p2.cfg --table single_p2
//   gew stability --beta 1,100,400 --lambda 0,1,7.5 --dt 0.025,0.2 --samples 1024
//   gew converge configs/single_p2.cfg --levels 3
//
// Exit status: 0 success, 1 comparison or acceptance failure, 2 bad configuration.

#include "gew/analysis.hpp"
#include "gew/config.hpp"
#include "gew/errors.hpp"
#include "gew/experiment.hpp"
#include "gew/output.hpp"
#include "gew/reference.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kConfigError = 2;

struct OverrideFlags {
    std::optional<std::string> problem, p, c, h, dt, mu, eps, x0, tmax, domain, out;
    std::vector<std::string> set;

    void attach(CLI::App& app) {
        app.add_option("--problem", problem, "single | interaction | maxwellian");
        app.add_option("--p", p, "nonlinearity exponent");
        app.add_option("--c", c, "wave speed (single)");
        app.add_option("--h", h, "mesh spacing");
        app.add_option("--dt", dt, "time step");
        app.add_option("--mu", mu, "dispersion coefficient");
        app.add_option("--eps", eps, "nonlinear coefficient");
        app.add_option("--x0", x0, "initial centre (single)");
        app.add_option("--tmax", tmax, "final time");
        app.add_option("--domain", domain, "a,b");
        app.add_option("--out", out, "output directory");
        app.add_option("--set", set, "any config key as key=value (repeatable)");
    }

    std::vector<gew::Override> collect() const {
        std::vector<gew::Override> ov;
        const auto push = [&](const char* key, const std::optional<std::string>& v) {
            if (v) ov.emplace_back(key, *v);
        };
        push("problem", problem);
        push("p", p);
        push("c", c);
        push("h", h);
        push("dt", dt);
        push("mu", mu);
        push("eps", eps);
        push("x0", x0);
        push("tmax", tmax);
        push("domain", domain);
        push("out", out);
        for (const auto& kv : set) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw gew::ConfigError("--set expects key=value, got '" + kv + "'");
            ov.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
        return ov;
    }
};

void print_peaks(const gew::RunReport& report) {
    for (const auto& row : report.rows) {
        std::printf("# t=%g peaks:", row.t);
        for (const auto& pk : row.peaks) std::printf(" (x=%.4f, U=%.6f)", pk.x, pk.amplitude);
        std::printf("\n");
    }
}

int cmd_run(const std::string& path, const OverrideFlags& flags, bool quiet) {
    const auto cfg = gew::load_config(path, flags.collect());
    const auto report = gew::run_experiment(cfg);
    const std::filesystem::path dir = cfg.output_dir;
    gew::emit_csv(report, dir / "invariants.csv");
    const auto files = gew::emit_plot_data(report, dir);
    if (!quiet) {
        std::cout << gew::format_csv(report);
        print_peaks(report);
    }
    std::cerr << "wrote " << (dir / "invariants.csv").string() << " and " << files.size() << " plot files\n";
    return kOk;
}

int cmd_compare(const std::string& path, const std::string& table, const OverrideFlags& flags) {
    const auto& ref = gew::find_reference(table); // unknown id is a configuration error
    const auto cfg = gew::load_config(path, flags.collect());
    const auto report = gew::run_experiment(cfg);
    const auto cmp = gew::compare_reference(report, ref.id);
    std::cout << cmp.summary();
    return cmp.pass ? kOk : kFail;
}

int cmd_stability(const std::vector<double>& betas, const std::vector<double>& lambdas,
                  const std::vector<double>& dts, int samples, double tol) {
    if (samples < 1) throw gew::ConfigError("--samples must be >= 1");
    const double dev = gew::stability_scan(betas, lambdas, dts, samples);
    std::printf("max ||g| - 1| = %.3e over %zu x %zu x %zu parameter sets, %d modes\n", dev, betas.size(),
                lambdas.size(), dts.size(), samples);
    return dev < tol ? kOk : kFail;
}

void print_levels(const char* title, const gew::ConvergenceReport& rep) {
    std::printf("%s\n%10s %10s %14s %14s %8s\n", title, "h", "dt", "L2", "Linf", "order");
    for (std::size_t k = 0; k < rep.levels.size(); ++k) {
        const auto& lv = rep.levels[k];
        std::printf("%10.5g %10.5g %14.6e %14.6e", lv.h, lv.dt, lv.l2, lv.linf);
        if (k > 0) std::printf(" %8.3f", rep.orders[k - 1]);
        std::printf("\n");
    }
}

int cmd_converge(const std::string& path, int levels, const std::string& study, const OverrideFlags& flags,
                 const std::optional<double>& h0, const std::optional<double>& dt0,
                 const std::optional<double>& t_final, const std::optional<double>& h_time) {
    if (levels < 2) throw gew::ConfigError("--levels must be >= 2");
    if (study != "space" && study != "time" && study != "both")
        throw gew::ConfigError("--study must be space, time or both");
    const auto cfg = gew::load_config(path, flags.collect());
    if (cfg.kind != gew::ProblemKind::Single) throw gew::ConfigError("converge needs a single-soliton config");

    gew::ConvergenceSetup setup;
    setup.params = cfg.params;
    setup.soliton = cfg.solitons.front();
    setup.inner_iters = cfg.grid.inner_iters;
    if (h0) setup.h0 = *h0;
    if (dt0) setup.dt0 = *dt0;
    if (t_final) setup.t_final = *t_final;

    bool ok = true;
    if (study != "time") {
        const auto rep = gew::spatial_convergence(setup, levels);
        print_levels("spatial refinement (dt ~ h^1.5)", rep);
        for (double q : rep.orders) ok = ok && q >= 2.0 && q <= 4.0;
    }
    if (study != "space") {
        gew::ConvergenceSetup ts = setup;
        ts.h0 = h_time.value_or(0.05);
        ts.dt0 = dt0.value_or(0.4);
        const auto rep = gew::temporal_convergence(ts, levels);
        print_levels("temporal refinement (fixed h)", rep);
        for (double q : rep.orders) ok = ok && std::abs(q - 2.0) <= 0.3;
    }
    std::printf("%s\n", ok ? "orders within expected bands" : "orders outside expected bands");
    return ok ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Petrov-Galerkin solver for the generalised equal width equation"};
    app.set_help_flag("--help", "print this help and exit"); // -h is the mesh spacing
    app.require_subcommand(1);

    std::string config_path;
    OverrideFlags flags;

    auto* run = app.add_subcommand("run", "run an experiment and write CSV and plot data");
    bool quiet = false;
    run->add_option("config", config_path, "config file")->required();
    run->add_flag("--quiet,-q", quiet, "do not echo the CSV");
    flags.attach(*run);

    auto* compare = app.add_subcommand("compare", "run an experiment and compare it with a reference table");
    std::string table;
    compare->add_option("config", config_path, "config file")->required();
    compare->add_option("--table", table, "reference table id")->required();
    flags.attach(*compare);

    auto* tables = app.add_subcommand("tables", "list reference table ids");

    auto* stability = app.add_subcommand("stability", "scan the von Neumann growth factor");
    std::vector<double> betas{1, 100, 400}, lambdas{0, 1, 7.5}, dts{0.025, 0.2};
    int samples = 1024;
    double tol = 1e-12;
    stability->add_option("--beta", betas, "beta = mu/h^2 values")->delimiter(',');
    stability->add_option("--lambda", lambdas, "lumped lambda values")->delimiter(',');
    stability->add_option("--dt", dts, "time steps")->delimiter(',');
    stability->add_option("--samples", samples, "number of theta samples in (0, 2 pi)");
    stability->add_option("--tol", tol, "pass threshold on max ||g| - 1|");

    auto* converge = app.add_subcommand("converge", "observed convergence orders for a single soliton");
    int levels = 3;
    std::string study = "both";
    std::optional<double> h0, dt0, t_final, h_time;
    converge->add_option("config", config_path, "config file")->required();
    converge->add_option("--levels", levels, "number of refinement levels");
    converge->add_option("--study", study, "space | time | both");
    converge->add_option("--h0", h0, "coarsest h of the spatial study");
    converge->add_option("--dt0", dt0, "coarsest dt");
    converge->add_option("--tfinal", t_final, "final time");
    converge->add_option("--h-time", h_time, "fixed h of the temporal study");
    flags.attach(*converge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*run) return cmd_run(config_path, flags, quiet);
        if (*compare) return cmd_compare(config_path, table, flags);
        if (*tables) {
            for (const auto& t : gew::reference_tables()) std::printf("%-22s %s\n", t.id.c_str(), t.description.c_str());
            return kOk;
        }
        if (*stability) return cmd_stability(betas, lambdas, dts, samples, tol);
        if (*converge) return cmd_converge(config_path, levels, study, flags, h0, dt0, t_final, h_time);
    } catch (const gew::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kConfigError;
}
