#pragma once

#include <string>
#include <variant>
#include <vector>

namespace jcphase {

// One typed cell of an output table. Integers stay integers so CSV and JSON
// agree; doubles are formatted with 12 significant digits in CSV.
using Cell = std::variant<long long, double>;

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<Cell> row);
};

// Comma-separated, header row, LF endings, '.' decimal separator.
std::string to_csv(const OutputTable& table);

// Array of flat objects mirroring the CSV rows (keys in column order).
std::string to_json(const OutputTable& table);

// Parameter sweep "<variable>:<start>:<stop>:<count>", e.g. "jc:0:5:101".
struct SweepSpec {
    enum class Variable { j_c, omega, nu, n, theta };

    Variable variable = Variable::j_c;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;

    // Throws std::invalid_argument on malformed text, count < 2, start > stop,
    // or a non-integer grid for variable n.
    static SweepSpec parse(const std::string& text);

    std::vector<double> grid() const;
};

const char* to_string(SweepSpec::Variable v) noexcept;

} // namespace jcphase
