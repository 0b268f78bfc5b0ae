#pragma once

#include "gew/stepper.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace gew {

/// `t,I1,I2,I3,L2,Linf`, one row per sampled time.  The norm columns are
/// dropped when the report has no exact solution.  9 significant digits.
void write_csv(const RunReport& report, std::ostream& out);
std::string format_csv(const RunReport& report);

/// Writes the CSV to `path`, creating parent directories.  Throws
/// std::runtime_error naming the path on failure.
void emit_csv(const RunReport& report, const std::filesystem::path& path);

/// One `snapshot_t<time>.csv` (header `x,U`) per snapshot in `dir`, plus
/// `peaks.csv` (`t,x,U`) with the tracked maxima of each sampled row.
/// Returns the files written.
std::vector<std::filesystem::path> emit_plot_data(const RunReport& report, const std::filesystem::path& dir);

std::string snapshot_name(double t);

} // namespace gew
