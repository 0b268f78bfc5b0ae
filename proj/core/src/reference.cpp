#include "gew/reference.hpp"

#include "gew/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gew {

std::string_view to_string(Quantity q) {
    switch (q) {
    case Quantity::I1: return "I1";
    case Quantity::I2: return "I2";
    case Quantity::I3: return "I3";
    case Quantity::L2: return "L2";
    case Quantity::Linf: return "Linf";
    }
    return "?";
}

bool Tolerance::accepts(double reference, double computed) const {
    return std::abs(computed - reference) <= abs + rel * std::abs(reference);
}

namespace {

using Opt = std::optional<double>;
constexpr auto none = std::nullopt;

ReferenceRow row5(double t, double i1, double i2, double i3, double l2, double linf) {
    return {t, {i1, i2, i3, l2, linf}};
}

ReferenceRow row3(double t, double i1, double i2, double i3) { return {t, {i1, i2, i3, none, none}}; }

ReferenceTable single_table(std::string id, std::string description, std::vector<ReferenceRow> rows) {
    const Tolerance inv{1e-4, 0.0};
    const Tolerance err{1e-9, 0.10};
    return {std::move(id), std::move(description), std::move(rows), {inv, inv, inv, err, err}};
}

ReferenceTable interaction_table(std::string id, std::string description, const std::array<double, 5>& t,
                                 const std::array<double, 5>& i1, const std::array<double, 5>& i2,
                                 const std::array<double, 5>& i3) {
    std::vector<ReferenceRow> rows;
    for (std::size_t k = 0; k < t.size(); ++k) rows.push_back(row3(t[k], i1[k], i2[k], i3[k]));
    const Tolerance rel{0.0, 0.01};
    return {std::move(id), std::move(description), std::move(rows), {rel, rel, rel, std::nullopt, std::nullopt}};
}

// The tabulated momentum grows by ~15% while mass and energy stay fixed to all
// printed digits; the scheme conserves I2 to O(h^2), so that column is only
// reported.
ReferenceTable maxwellian_table(int p, double mu, const std::array<std::array<double, 3>, 4>& cells) {
    char id[64];
    std::snprintf(id, sizeof id, "maxwellian_p%d_mu%g", p, mu);
    char description[96];
    std::snprintf(description, sizeof description, "Maxwellian exp(-x^2), p=%d, mu=%g", p, mu);
    const double times[4] = {0, 4, 8, 12};
    std::vector<ReferenceRow> rows;
    for (std::size_t k = 0; k < 4; ++k) rows.push_back(row3(times[k], cells[k][0], cells[k][1], cells[k][2]));
    const Tolerance abs{1e-4, 0.0};
    const Tolerance momentum{0.0, 0.01, true};
    return {id, description, std::move(rows), {abs, momentum, abs, std::nullopt, std::nullopt}};
}

std::vector<ReferenceTable> build_tables() {
    std::vector<ReferenceTable> tables;
    tables.push_back(single_table("single_p2", "single solitary wave, p=2, c=0.5",
                                  {row5(0, 3.1415863, 2.6682242, 1.3333283, 0.00000000, 0.00000000),
                                   row5(5, 3.1415916, 2.6682311, 1.3333406, 0.00395289, 0.00294851),
                                   row5(10, 3.1415934, 2.6682352, 1.3333413, 0.00704492, 0.00473785),
                                   row5(15, 3.1415948, 2.6682434, 1.3333413, 0.00995547, 0.00651735),
                                   row5(20, 3.1415961, 2.6682568, 1.3333413, 0.01286582, 0.00831346)}));
    tables.push_back(single_table("single_p3", "single solitary wave, p=3, c=0.3",
                                  {row5(0, 2.8043580, 2.4664883, 0.9855618, 0.00000000, 0.00000000),
                                   row5(5, 2.8043723, 2.4665080, 0.9855942, 0.00183258, 0.00177948),
                                   row5(10, 2.8043747, 2.4665108, 0.9855973, 0.00291958, 0.00233283),
                                   row5(15, 2.8043753, 2.4665119, 0.9855973, 0.00372417, 0.00285444),
                                   row5(20, 2.8043758, 2.4665135, 0.9855973, 0.00448357, 0.00337609)}));
    tables.push_back(single_table("single_p4", "single solitary wave, p=4, c=0.2",
                                  {row5(0, 2.6220516, 2.3598323, 0.7853952, 0.00000000, 0.00000000),
                                   row5(5, 2.6220846, 2.3598808, 0.7854675, 0.00125061, 0.00141788),
                                   row5(10, 2.6220915, 2.3598891, 0.7854783, 0.00178634, 0.00147002),
                                   row5(15, 2.6220920, 2.3598898, 0.7854785, 0.00193428, 0.00139936),
                                   row5(20, 2.6220923, 2.3598903, 0.7854785, 0.00196046, 0.00133416)}));
    tables.push_back(interaction_table("interaction_p3", "two solitary waves, p=3", {0, 30, 60, 90, 100},
                                       {4.20653, 4.20657, 4.20622, 4.20502, 4.20517},
                                       {3.08311, 3.08318, 3.08309, 3.08220, 3.08251},
                                       {1.01636, 1.01644, 1.01664, 1.01632, 1.01634}));
    tables.push_back(interaction_table("interaction_p4", "two solitary waves, p=4", {0, 30, 60, 90, 120},
                                       {3.93307, 3.93311, 3.93393, 3.93229, 3.93037},
                                       {2.94979, 2.94985, 2.95122, 2.94939, 2.94801},
                                       {0.79766, 0.79775, 0.79952, 0.79824, 0.79811}));

    tables.push_back(maxwellian_table(2, 0.1, {{{1.7724537, 1.3792767, 0.8862269},
                                                 {1.7724537, 1.5760586, 0.8862269},
                                                 {1.7724537, 1.5838481, 0.8862269},
                                                 {1.7724537, 1.5920722, 0.8862269}}}));
    tables.push_back(maxwellian_table(3, 0.1, {{{1.7724537, 1.3792767, 0.7926655},
                                                 {1.7724537, 1.6168691, 0.7926655},
                                                 {1.7724537, 1.6245008, 0.7926655},
                                                 {1.7724537, 1.6325922, 0.7926655}}}));
    tables.push_back(maxwellian_table(4, 0.1, {{{1.7724537, 1.3792767, 0.7236013},
                                                 {1.7724537, 1.6360543, 0.7236013},
                                                 {1.7724537, 1.6481131, 0.7236013},
                                                 {1.7724537, 1.6531844, 0.7236013}}}));
    tables.push_back(maxwellian_table(2, 0.05, {{{1.7724537, 1.3162954, 0.8862269},
                                                  {1.7724537, 1.5406812, 0.8862269},
                                                  {1.7724537, 1.6342604, 0.8862269},
                                                  {1.7724537, 1.6835979, 0.8862269}}}));
    tables.push_back(maxwellian_table(3, 0.05, {{{1.7724537, 1.3162954, 0.7926655},
                                                  {1.7724537, 1.5766908, 0.7926655},
                                                  {1.7724537, 1.6367952, 0.7926655},
                                                  {1.7724537, 1.6372439, 0.7926655}}}));
    tables.push_back(maxwellian_table(4, 0.05, {{{1.7724537, 1.3162954, 0.7236013},
                                                  {1.7724537, 1.6243519, 0.7236013},
                                                  {1.7724537, 1.6554614, 0.7236013},
                                                  {1.7724537, 1.7079133, 0.7236013}}}));
    return tables;
}

} // namespace

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = build_tables();
    return tables;
}

const ReferenceTable& find_reference(std::string_view id) {
    for (const auto& t : reference_tables())
        if (t.id == id) return t;
    std::string known;
    for (const auto& t : reference_tables()) known += (known.empty() ? "" : ", ") + t.id;
    throw ConfigError("unknown reference table '" + std::string(id) + "' (known: " + known + ")");
}

std::optional<double> report_value(const ReportRow& row, Quantity q) {
    switch (q) {
    case Quantity::I1: return row.inv.i1;
    case Quantity::I2: return row.inv.i2;
    case Quantity::I3: return row.inv.i3;
    case Quantity::L2: return row.norms ? Opt(row.norms->l2) : none;
    case Quantity::Linf: return row.norms ? Opt(row.norms->linf) : none;
    }
    return none;
}

Comparison compare_reference(const RunReport& report, std::string_view table_id) {
    const ReferenceTable& table = find_reference(table_id);
    Comparison out;
    out.table_id = table.id;
    out.pass = true;
    for (const auto& ref_row : table.rows) {
        const ReportRow* row = report.row_at(ref_row.t, 1e-9 * std::max(1.0, ref_row.t));
        for (Quantity q : kAllQuantities) {
            const auto k = static_cast<std::size_t>(q);
            if (!ref_row.values[k] || !table.tolerance[k]) continue;
            CellDelta cell;
            cell.t = ref_row.t;
            cell.quantity = q;
            cell.reference = *ref_row.values[k];
            cell.tolerance = *table.tolerance[k];
            if (row) cell.computed = report_value(*row, q);
            cell.pass = cell.computed && cell.tolerance.accepts(cell.reference, *cell.computed);
            if (!cell.pass && !cell.tolerance.informational) out.pass = false;
            out.cells.push_back(cell);
        }
    }
    return out;
}

std::string Comparison::summary() const {
    std::ostringstream os;
    std::size_t gated = 0;
    std::size_t passed = 0;
    char line[160];
    os << "table " << table_id << '\n';
    os << "      t  qty      reference       computed          delta  status\n";
    for (const auto& c : cells) {
        const char* status = c.pass ? "ok" : (c.tolerance.informational ? "info" : "FAIL");
        if (!c.tolerance.informational) {
            ++gated;
            if (c.pass) ++passed;
        }
        const std::string q(to_string(c.quantity));
        if (c.computed)
            std::snprintf(line, sizeof line, "%7g  %-4s %14.9g %14.9g %14.3e  %s\n", c.t, q.c_str(), c.reference,
                          *c.computed, c.delta(), status);
        else
            std::snprintf(line, sizeof line, "%7g  %-4s %14.9g %14s %14s  %s\n", c.t, q.c_str(), c.reference,
                          "missing", "-", status);
        os << line;
    }
    os << (pass ? "PASS" : "FAIL") << ": " << passed << '/' << gated << " cells within tolerance";
    if (gated != cells.size()) os << " (" << cells.size() - gated << " informational)";
    os << '\n';
    return os.str();
}

RunReport report_from_table(const ReferenceTable& table) {
    RunReport report;
    report.has_norms = table.tolerance[3].has_value();
    for (const auto& r : table.rows) {
        ReportRow row;
        row.t = r.t;
        row.inv = {r.values[0].value_or(0.0), r.values[1].value_or(0.0), r.values[2].value_or(0.0)};
        if (r.values[3] && r.values[4]) row.norms = ErrorNorms{*r.values[3], *r.values[4]};
        report.rows.push_back(std::move(row));
    }
    if (!report.rows.empty()) report.final_time = report.rows.back().t;
    return report;
}

} // namespace gew
