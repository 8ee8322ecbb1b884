#include "jcphase/records.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jcphase {

namespace {

std::string format_cell(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) {
        return std::to_string(std::get<long long>(cell));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", std::get<double>(cell));
    return buf;
}

} // namespace

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("OutputTable: row width " + std::to_string(row.size()) +
                                    " != " + std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string to_csv(const OutputTable& table) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const OutputTable& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t c = 0; c < row.size(); ++c) {
            if (std::holds_alternative<long long>(row[c])) {
                obj[table.columns[c]] = std::get<long long>(row[c]);
            } else {
                obj[table.columns[c]] = std::get<double>(row[c]);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

const char* to_string(SweepSpec::Variable v) noexcept {
    switch (v) {
        case SweepSpec::Variable::j_c: return "jc";
        case SweepSpec::Variable::omega: return "omega";
        case SweepSpec::Variable::nu: return "nu";
        case SweepSpec::Variable::n: return "n";
        case SweepSpec::Variable::theta: return "theta";
    }
    return "?";
}

SweepSpec SweepSpec::parse(const std::string& text) {
    const auto fail = [&text](const std::string& why) -> SweepSpec {
        throw std::invalid_argument("sweep '" + text + "': " + why +
                                    " (expected <variable>:<start>:<stop>:<count>)");
    };

    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        const size_t next = text.find(':', pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 4) return fail("need 4 fields");

    SweepSpec spec;
    if (parts[0] == "jc") spec.variable = Variable::j_c;
    else if (parts[0] == "omega") spec.variable = Variable::omega;
    else if (parts[0] == "nu") spec.variable = Variable::nu;
    else if (parts[0] == "n") spec.variable = Variable::n;
    else if (parts[0] == "theta") spec.variable = Variable::theta;
    else return fail("unknown variable '" + parts[0] + "'");

    try {
        size_t used = 0;
        spec.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) return fail("bad start");
        spec.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) return fail("bad stop");
        spec.count = std::stoi(parts[3], &used);
        if (used != parts[3].size()) return fail("bad count");
    } catch (const std::exception&) {
        return fail("non-numeric field");
    }

    if (spec.count < 2) return fail("count must be >= 2");
    if (!(spec.start <= spec.stop)) return fail("start must be <= stop");
    if (spec.variable == Variable::n) {
        for (double v : spec.grid()) {
            if (std::abs(v - std::round(v)) > 1e-9) {
                return fail("grid over n must be integer-valued");
            }
        }
    }
    return spec;
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> out(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<size_t>(i)] = start + (stop - start) * i / (count - 1);
    }
    return out;
}

} // namespace jcphase
