// Acceptance checks.  Each criterion prints one PASS/FAIL line with the measured
// numbers; `--criterion N` runs a single one, no argument runs them all.

#include "gew/analysis.hpp"
#include "gew/assembly.hpp"
#include "gew/config.hpp"
#include "gew/experiment.hpp"
#include "gew/mesh_spline.hpp"
#include "gew/quadrature.hpp"
#include "gew/reference.hpp"
#include "gew/stepper.hpp"

#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace gew;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

ExperimentConfig single(int p, double c) {
    ExperimentConfig cfg = default_config(ProblemKind::Single);
    cfg.params.p = p;
    cfg.solitons = {{c, 30.0}};
    return cfg;
}

Outcome single_errors(int p, double c, double l2_ref, double linf_ref) {
    const RunReport rep = run_experiment(single(p, c));
    const ReportRow* row = rep.row_at(20.0);
    if (!row || !row->norms) return {false, "no t=20 row"};
    const double l2 = row->norms->l2, linf = row->norms->linf;
    const double dl2 = std::abs(l2 / l2_ref - 1.0), dli = std::abs(linf / linf_ref - 1.0);
    return {dl2 < 0.10 && dli < 0.10,
            fmt("p=%d t=20: L2=%.8f (ref %.8f, %+.1f%%)  Linf=%.8f (ref %.8f, %+.1f%%)", p, l2, l2_ref,
                100 * (l2 / l2_ref - 1), linf, linf_ref, 100 * (linf / linf_ref - 1))};
}

Outcome c1() { return single_errors(2, 0.5, 0.01286582, 0.00831346); }
Outcome c2() { return single_errors(3, 0.3, 0.00448357, 0.00337609); }
Outcome c3() { return single_errors(4, 0.2, 0.00196046, 0.00133416); }

Outcome c4() {
    bool ok = true;
    std::string detail;
    for (auto [p, c] : {std::pair{2, 0.5}, std::pair{3, 0.3}, std::pair{4, 0.2}}) {
        ExperimentConfig cfg = single(p, c);
        cfg.sample_times.clear();
        for (int k = 0; k <= cfg.grid.n_steps(); ++k) cfg.sample_times.push_back(k * cfg.grid.dt);
        cfg.snapshot_times.clear();
        const RunReport rep = run_experiment(cfg);
        double drift[3] = {0, 0, 0};
        for (const auto& row : rep.rows)
            for (int k = 0; k < 3; ++k) drift[k] = std::max(drift[k], std::abs(row.inv[k] - rep.rows[0].inv[k]));
        for (double d : drift) ok = ok && d < 1e-4;
        detail += fmt("p=%d drift (%.1e, %.1e, %.1e)  ", p, drift[0], drift[1], drift[2]);
    }
    return {ok, detail + "(bound 1e-4)"};
}

Outcome c5() {
    const struct {
        int p;
        double c;
        Invariants ref;
    } cases[] = {{2, 0.5, {3.1415863, 2.6682242, 1.3333283}},
                 {3, 0.3, {2.8043580, 2.4664883, 0.9855618}},
                 {4, 0.2, {2.6220516, 2.3598323, 0.7853952}}};
    bool ok = true;
    std::string detail;
    for (const auto& cs : cases) {
        const ExperimentConfig cfg = single(cs.p, cs.c);
        const Invariants v = invariants(project_initial(initial_profile(cfg), cfg.mesh()), cfg.params);
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(v[k] - cs.ref[k]));
        ok = ok && worst < 1e-5;
        detail += fmt("p=%d (%.7f, %.7f, %.7f) max dev %.1e  ", cs.p, v.i1, v.i2, v.i3, worst);
    }
    return {ok, detail + "(bound 1e-5)"};
}

Outcome c6() {
    bool ok = true;
    std::string detail;
    ExperimentConfig p3 = default_config(ProblemKind::Interaction);
    ExperimentConfig p4 = p3;
    p4.params.p = 4;
    p4.solitons = {{0.2, 15.0}, {1.0 / 80.0, 30.0}};
    p4.grid.t_max = 120.0;
    p4.sample_times = {0, 30, 60, 90, 120};
    p4.snapshot_times = {};
    p3.snapshot_times = {};
    for (auto [cfg, id] : {std::pair{p3, "interaction_p3"}, std::pair{p4, "interaction_p4"}}) {
        const Comparison cmp = compare_reference(run_experiment(cfg), id);
        double worst = 0.0;
        for (const auto& cell : cmp.cells)
            worst = std::max(worst, cell.computed ? std::abs(cell.delta() / cell.reference) : INFINITY);
        ok = ok && cmp.pass;
        detail += fmt("%s max rel dev %.2e  ", id, worst);
    }
    return {ok, detail + "(bound 1e-2)"};
}

Outcome c7() {
    bool ok = true;
    std::string detail;
    for (int p : {2, 3, 4})
        for (double mu : {0.1, 0.05}) {
            ExperimentConfig cfg = default_config(ProblemKind::Maxwellian);
            cfg.params.p = p;
            cfg.params.mu = mu;
            cfg.snapshot_times = {};
            const RunReport rep = run_experiment(cfg);
            double d1 = 0.0, d3 = 0.0, off = 0.0;
            for (const auto& row : rep.rows) {
                d1 = std::max(d1, std::abs(row.inv.i1 - rep.rows[0].inv.i1));
                d3 = std::max(d3, std::abs(row.inv.i3 - rep.rows[0].inv.i3));
                off = std::max(off, std::abs(row.inv.i1 - 1.7724537));
            }
            const bool case_ok = d1 < 1e-6 && d3 < 1e-6 && off < 1e-4;
            ok = ok && case_ok;
            detail += fmt("p=%d mu=%g dI1 %.1e dI3 %.1e; ", p, mu, d1, d3);
        }
    return {ok, detail + "(bound 1e-6)"};
}

Outcome c8() {
    const std::vector<double> betas{1, 100, 400}, lambdas{0, 1, 7.5}, dts{0.025, 0.2};
    const double dev = stability_scan(betas, lambdas, dts, 1024);
    return {dev < 1e-12, fmt("max ||g|-1| = %.2e over 18 parameter sets x 1024 modes (bound 1e-12)", dev)};
}

Outcome c9() {
    // element matrices against the hand-integrated polynomials and an 8-point Gauss rule
    const ElementMatrices lib = element_matrices();
    const ElementMatrices hand = oracle::hand_integrated_matrices();
    const QuadratureRule& rule = element_rule();
    double em_dev = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double a = 0, b = 0, d = 0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double eta = rule.nodes[q], w = rule.weights[q];
                const auto phi = local_quad_shapes(eta);
                const auto dphi = local_quad_shape_derivs(eta);
                const auto l = local_linear_shapes(eta);
                const auto dl = local_linear_shape_derivs(eta);
                const double pj = j == 0 ? phi.left : (j == 1 ? phi.mid : phi.right);
                const double dpj = j == 0 ? dphi.left : (j == 1 ? dphi.mid : dphi.right);
                const double li = i == 0 ? l.left : l.right;
                const double dli = i == 0 ? dl.left : dl.right;
                a += w * li * pj;
                b += w * dli * dpj;
                d += w * li * dpj;
            }
            em_dev = std::max({em_dev, std::abs(lib.A[i][j] - a), std::abs(lib.B[i][j] - b),
                               std::abs(lib.D[i][j] - d), std::abs(lib.A[i][j] - hand.A[i][j]),
                               std::abs(lib.B[i][j] - hand.B[i][j]), std::abs(lib.C[i][j] - hand.C[i][j]),
                               std::abs(lib.D[i][j] - hand.D[i][j])});
        }

    std::mt19937_64 rng(20240601);
    double solve_dev = 0.0;
    for (int t = 0; t < 100; ++t) {
        const BandedSystem sys = oracle::random_dominant_system(rng, 50);
        solve_dev = std::max(solve_dev, oracle::max_abs_diff(banded_solve(sys), oracle::dense_solve(oracle::to_dense(sys), sys.rhs)));
    }

    double gamma_dev = 0.0;
    for (double beta : {1.0, 100.0, 400.0})
        for (double lambda : {0.0, 1.0, 7.5})
            for (double dt : {0.025, 0.2}) {
                const RowStencil row = global_row(3, 8, beta, lambda, lambda, dt);
                const auto g = gamma_coefficients(beta, lambda, dt);
                for (std::size_t k = 0; k < 4; ++k)
                    gamma_dev = std::max({gamma_dev, std::abs(row.lhs[k] - g[k]) / (1 + beta),
                                          std::abs(row.rhs[k] - g[3 - k]) / (1 + beta)});
            }

    double part_dev = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        const double eta = k / 1000.0;
        const auto q = local_quad_shapes(eta);
        const auto l = local_linear_shapes(eta);
        part_dev = std::max({part_dev, std::abs(q.left + q.mid + q.right - 2.0), std::abs(l.left + l.right - 1.0)});
    }
    const Mesh mesh(0.0, 3.0, 30);
    SplineVec s(mesh);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int j = -1; j <= 30; ++j) s[j] = u(rng);
    double cont_dev = 0.0;
    for (int m = 1; m < 30; ++m)
        cont_dev = std::max({cont_dev, std::abs(eval_on_element(s, m - 1, 1.0) - eval_on_element(s, m, 0.0)),
                             std::abs(eval_deriv_on_element(s, m - 1, 1.0) - eval_deriv_on_element(s, m, 0.0))});

    const bool ok = em_dev < 1e-13 && solve_dev < 1e-10 && gamma_dev < 1e-15 && part_dev < 1e-15 && cont_dev < 1e-12;
    return {ok, fmt("element matrices %.1e, banded vs dense %.1e, gamma %.1e, partition %.1e, C1 jump %.1e", em_dev,
                    solve_dev, gamma_dev, part_dev, cont_dev)};
}

Outcome c10() {
    ConvergenceSetup setup;
    const ConvergenceReport space = spatial_convergence(setup, 3);
    ConvergenceSetup ts = setup;
    ts.h0 = 0.05;
    ts.dt0 = 0.4;
    const ConvergenceReport time = temporal_convergence(ts, 3);
    bool ok = true;
    for (double q : space.orders) ok = ok && q >= 2.0 && q <= 4.0;
    for (double q : time.orders) ok = ok && std::abs(q - 2.0) <= 0.3;
    return {ok, fmt("spatial orders %.3f, %.3f (band [2, 4]); temporal orders %.3f, %.3f (band 2 +- 0.3)",
                    space.orders[0], space.orders[1], time.orders[0], time.orders[1])};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {"single soliton p=2 error norms", c1},
    {"single soliton p=3 error norms", c2},
    {"single soliton p=4 error norms", c3},
    {"single soliton invariant drift", c4},
    {"initial projection invariants", c5},
    {"interaction invariants p=3, p=4", c6},
    {"Maxwellian I1/I3 constancy", c7},
    {"von Neumann |g| = 1", c8},
    {"property suite", c9},
    {"convergence orders", c10},
};

bool report(int n) {
    const auto& [title, fn] = kCriteria[static_cast<std::size_t>(n - 1)];
    Outcome out{false, ""};
    try {
        out = fn();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", out.pass ? "PASS" : "FAIL", n, title, out.detail.c_str());
    std::fflush(stdout);
    return out.pass;
}

} // namespace

int main(int argc, char** argv) {
    const int count = static_cast<int>(kCriteria.size());
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const int n = std::atoi(argv[2]);
        if (n < 1 || n > count) {
            std::fprintf(stderr, "criterion must be 1..%d\n", count);
            return 2;
        }
        return report(n) ? 0 : 1;
    }
    if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    int failed = 0;
    for (int n = 1; n <= count; ++n) failed += report(n) ? 0 : 1;
    std::printf("%d/%d criteria passed\n", count - failed, count);
    return failed == 0 ? 0 : 1;
}
