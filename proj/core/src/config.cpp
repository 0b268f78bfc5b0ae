#include "gew/config.hpp"

#include "gew/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace gew {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::Single: return "single";
    case ProblemKind::Interaction: return "interaction";
    case ProblemKind::Maxwellian: return "maxwellian";
    }
    return "?";
}

ProblemKind parse_problem_kind(std::string_view text) {
    if (text == "single") return ProblemKind::Single;
    if (text == "interaction") return ProblemKind::Interaction;
    if (text == "maxwellian") return ProblemKind::Maxwellian;
    throw ConfigError("unknown problem '" + std::string(text) + "' (expected single, interaction or maxwellian)");
}

ExperimentConfig default_config(ProblemKind kind) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    switch (kind) {
    case ProblemKind::Single:
        cfg.params = {2, 3.0, 1.0};
        cfg.a = 0.0;
        cfg.b = 80.0;
        cfg.n_elems = 800;
        cfg.grid = {0.2, 20.0, 5};
        cfg.solitons = {{0.5, 30.0}};
        cfg.sample_times = {0, 5, 10, 15, 20};
        cfg.snapshot_times = {0, 10, 20};
        cfg.output_dir = "out/single";
        break;
    case ProblemKind::Interaction:
        cfg.params = {3, 3.0, 1.0};
        cfg.a = 0.0;
        cfg.b = 80.0;
        cfg.n_elems = 800;
        cfg.grid = {0.025, 100.0, 5};
        cfg.solitons = {{0.3, 15.0}, {0.0375, 30.0}};
        cfg.sample_times = {0, 30, 60, 90, 100};
        cfg.snapshot_times = {0, 50, 70, 100};
        cfg.output_dir = "out/interaction";
        break;
    case ProblemKind::Maxwellian:
        cfg.params = {2, 3.0, 0.1};
        cfg.a = -20.0;
        cfg.b = 40.0;
        cfg.n_elems = 600;
        cfg.grid = {0.01, 12.0, 5};
        cfg.solitons = {};
        cfg.sample_times = {0, 4, 8, 12};
        cfg.snapshot_times = {0, 12};
        cfg.output_dir = "out/maxwellian";
        break;
    }
    return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_real(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(value))
        throw ConfigError("expected a number, got '" + std::string(text) + "'");
    return value;
}

int parse_int(std::string_view text) {
    text = trim(text);
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (text.empty() || res.ec != std::errc() || res.ptr != end)
        throw ConfigError("expected an integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) out.push_back(parse_real(part));
    return out;
}

std::vector<SolitonSpec> parse_solitons(std::string_view text) {
    std::vector<SolitonSpec> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) {
        const auto fields = split(part, ':');
        if (fields.size() != 2) throw ConfigError("soliton entries are 'c:x0', got '" + std::string(part) + "'");
        out.push_back({parse_real(fields[0]), parse_real(fields[1])});
    }
    return out;
}

struct Entry {
    std::string key;
    std::string value;
    int line; // 0 for command-line overrides
};

std::string where(const Entry& e) {
    return e.line > 0 ? "line " + std::to_string(e.line) : std::string("command line");
}

struct MeshRequest {
    std::optional<double> h;
    std::optional<int> n;
};

void apply(ExperimentConfig& cfg, MeshRequest& mesh, const Entry& e) {
    const std::string& k = e.key;
    const std::string_view v = e.value;
    const auto first_soliton = [&]() -> SolitonSpec& {
        if (cfg.solitons.empty()) cfg.solitons.push_back({});
        return cfg.solitons.front();
    };
    if (k == "problem") {
        parse_problem_kind(trim(v)); // already applied, still checked
    } else if (k == "p") {
        cfg.params.p = parse_int(v);
    } else if (k == "eps") {
        cfg.params.eps = parse_real(v);
    } else if (k == "mu") {
        cfg.params.mu = parse_real(v);
    } else if (k == "c") {
        first_soliton().c = parse_real(v);
    } else if (k == "x0") {
        first_soliton().x0 = parse_real(v);
    } else if (k == "solitons") {
        cfg.solitons = parse_solitons(v);
    } else if (k == "domain") {
        const auto ab = parse_real_list(v);
        if (ab.size() != 2) throw ConfigError("domain expects 'a, b'");
        cfg.a = ab[0];
        cfg.b = ab[1];
    } else if (k == "a") {
        cfg.a = parse_real(v);
    } else if (k == "b") {
        cfg.b = parse_real(v);
    } else if (k == "h") {
        mesh.h = parse_real(v);
        mesh.n.reset();
    } else if (k == "n") {
        mesh.n = parse_int(v);
        mesh.h.reset();
    } else if (k == "dt") {
        cfg.grid.dt = parse_real(v);
    } else if (k == "tmax") {
        cfg.grid.t_max = parse_real(v);
    } else if (k == "inner_iters") {
        cfg.grid.inner_iters = parse_int(v);
    } else if (k == "sample_times") {
        cfg.sample_times = parse_real_list(v);
    } else if (k == "snapshot_times") {
        cfg.snapshot_times = parse_real_list(v);
    } else if (k == "out") {
        cfg.output_dir = std::string(trim(v));
    } else {
        throw ConfigError("unknown key '" + k + "'");
    }
}

void check_times(const std::vector<double>& times, const TimeGrid& grid, const char* what) {
    for (double t : times) {
        const double n = std::round(t / grid.dt);
        if (t < 0.0 || t > grid.t_max * (1.0 + 1e-12) || std::abs(n * grid.dt - t) > 1e-9 * std::max(1.0, t)) {
            std::ostringstream msg;
            msg << what << " time " << t << " is not a multiple of dt within [0, tmax]";
            throw ConfigError(msg.str());
        }
    }
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw ConfigError(std::string(what) + " times must be strictly increasing");
}

} // namespace

void ExperimentConfig::validate() const {
    params.validate();
    if (!(b > a)) throw ConfigError("domain must satisfy a < b");
    if (n_elems < 3) throw ConfigError("mesh needs at least 3 elements");
    grid.validate();
    grid.n_steps();
    const std::size_t expected = kind == ProblemKind::Single ? 1 : (kind == ProblemKind::Interaction ? 2 : 0);
    if (solitons.size() != expected) {
        std::ostringstream msg;
        msg << to_string(kind) << " problem needs exactly " << expected << " soliton spec(s), got " << solitons.size();
        throw ConfigError(msg.str());
    }
    for (const auto& s : solitons) {
        if (!(s.c > 0.0)) throw ConfigError("soliton speed c must be > 0");
        if (!(s.x0 >= a && s.x0 <= b)) throw ConfigError("soliton centre x0 must lie inside the domain");
    }
    check_times(sample_times, grid, "sample");
    check_times(snapshot_times, grid, "snapshot");
    if (output_dir.empty()) throw ConfigError("output directory must not be empty");
}

ExperimentConfig parse_config(std::string_view text, const std::vector<Override>& overrides) {
    std::vector<Entry> entries;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
            entries.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no});
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    for (const auto& [k, v] : overrides) entries.push_back({k, v, 0});

    ProblemKind kind = ProblemKind::Single;
    for (const auto& e : entries) {
        if (e.key != "problem") continue;
        try {
            kind = parse_problem_kind(e.value);
        } catch (const ConfigError& err) {
            throw ConfigError(where(e) + ": " + err.what());
        }
    }

    ExperimentConfig cfg = default_config(kind);
    MeshRequest mesh;
    const double default_h = (cfg.b - cfg.a) / cfg.n_elems;
    for (const auto& e : entries) {
        try {
            apply(cfg, mesh, e);
        } catch (const ConfigError& err) {
            throw ConfigError(where(e) + ": " + err.what());
        }
    }

    if (mesh.n) {
        cfg.n_elems = *mesh.n;
    } else {
        const double h = mesh.h.value_or(default_h);
        if (!(h > 0.0)) throw ConfigError("mesh spacing h must be > 0");
        if (!(cfg.b > cfg.a)) throw ConfigError("domain must satisfy a < b");
        const double ratio = (cfg.b - cfg.a) / h;
        const double n = std::round(ratio);
        if (std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) {
            std::ostringstream msg;
            msg << "spacing h = " << h << " does not divide the domain [" << cfg.a << ", " << cfg.b << "]";
            throw ConfigError(msg.str());
        }
        cfg.n_elems = static_cast<int>(n);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path, const std::vector<Override>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str(), overrides);
    } catch (const ConfigError& err) {
        throw ConfigError(path + ": " + err.what());
    }
}

namespace {

std::string fmt_real(double v) {
    // shortest of %.15g / %.17g that reads back to the same double
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += fmt_real(values[i]);
    }
    return out;
}

} // namespace

std::string emit_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "problem = " << to_string(cfg.kind) << '\n';
    out << "p = " << cfg.params.p << '\n';
    out << "eps = " << fmt_real(cfg.params.eps) << '\n';
    out << "mu = " << fmt_real(cfg.params.mu) << '\n';
    out << "solitons = ";
    for (std::size_t i = 0; i < cfg.solitons.size(); ++i) {
        if (i) out << ", ";
        out << fmt_real(cfg.solitons[i].c) << ':' << fmt_real(cfg.solitons[i].x0);
    }
    out << '\n';
    out << "domain = " << fmt_real(cfg.a) << ", " << fmt_real(cfg.b) << '\n';
    out << "n = " << cfg.n_elems << '\n';
    out << "dt = " << fmt_real(cfg.grid.dt) << '\n';
    out << "tmax = " << fmt_real(cfg.grid.t_max) << '\n';
    out << "inner_iters = " << cfg.grid.inner_iters << '\n';
    out << "sample_times = " << fmt_list(cfg.sample_times) << '\n';
    out << "snapshot_times = " << fmt_list(cfg.snapshot_times) << '\n';
    out << "out = " << cfg.output_dir << '\n';
    return out.str();
}

} // namespace gew
