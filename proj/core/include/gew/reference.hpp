#pragma once

// Published invariant and error tables, and a cell-by-cell comparison of a
// run against them.

#include "gew/stepper.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gew {

enum class Quantity { I1, I2, I3, L2, Linf };
inline constexpr std::array<Quantity, 5> kAllQuantities{Quantity::I1, Quantity::I2, Quantity::I3, Quantity::L2,
                                                        Quantity::Linf};

std::string_view to_string(Quantity q);

struct Tolerance {
    double abs = 0.0;
    double rel = 0.0;
    /// Listed in the diff but does not decide pass/fail.
    bool informational = false;

    bool accepts(double reference, double computed) const;
};

struct ReferenceRow {
    double t = 0.0;
    std::array<std::optional<double>, 5> values; // indexed by Quantity
};

struct ReferenceTable {
    std::string id;
    std::string description;
    std::vector<ReferenceRow> rows;
    std::array<std::optional<Tolerance>, 5> tolerance; // empty: quantity not tabulated
};

const std::vector<ReferenceTable>& reference_tables();

/// Throws ConfigError for an unknown id.
const ReferenceTable& find_reference(std::string_view id);

struct CellDelta {
    double t = 0.0;
    Quantity quantity = Quantity::I1;
    double reference = 0.0;
    std::optional<double> computed; // empty when the run has no matching cell
    Tolerance tolerance;
    bool pass = false;

    double delta() const { return computed ? *computed - reference : 0.0; }
};

struct Comparison {
    std::string table_id;
    std::vector<CellDelta> cells;
    bool pass = false;

    std::string summary() const;
};

Comparison compare_reference(const RunReport& report, std::string_view table_id);

/// A report whose sampled rows are exactly the table cells.
RunReport report_from_table(const ReferenceTable& table);

std::optional<double> report_value(const ReportRow& row, Quantity q);

} // namespace gew
