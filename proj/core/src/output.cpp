#include "gew/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gew {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out = open_for_write(path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace

void write_csv(const RunReport& report, std::ostream& out) {
    out << (report.has_norms ? "t,I1,I2,I3,L2,Linf\n" : "t,I1,I2,I3\n");
    for (const auto& row : report.rows) {
        out << num(row.t) << ',' << num(row.inv.i1) << ',' << num(row.inv.i2) << ',' << num(row.inv.i3);
        if (report.has_norms) {
            const ErrorNorms n = row.norms.value_or(ErrorNorms{});
            out << ',' << num(n.l2) << ',' << num(n.linf);
        }
        out << '\n';
    }
}

std::string format_csv(const RunReport& report) {
    std::ostringstream os;
    write_csv(report, os);
    return os.str();
}

void emit_csv(const RunReport& report, const std::filesystem::path& path) { write_file(path, format_csv(report)); }

std::string snapshot_name(double t) { return "snapshot_t" + num(t) + ".csv"; }

std::vector<std::filesystem::path> emit_plot_data(const RunReport& report, const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    for (const auto& snap : report.snapshots) {
        std::ostringstream os;
        os << "x,U\n";
        for (std::size_t i = 0; i < snap.x.size(); ++i) os << num(snap.x[i]) << ',' << num(snap.u[i]) << '\n';
        const auto path = dir / snapshot_name(snap.t);
        write_file(path, os.str());
        written.push_back(path);
    }

    std::ostringstream peaks;
    peaks << "t,x,U\n";
    for (const auto& row : report.rows)
        for (const auto& pk : row.peaks) peaks << num(row.t) << ',' << num(pk.x) << ',' << num(pk.amplitude) << '\n';
    const auto path = dir / "peaks.csv";
    write_file(path, peaks.str());
    written.push_back(path);
    return written;
}

} // namespace gew
