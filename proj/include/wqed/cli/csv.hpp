#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wqed::cli {

/// Column-major table; all columns share one length.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    void add(std::string name, std::vector<double> values);
    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// 17 significant digits, "nan"/"inf" spelled out, unix newlines.
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& table);
/// {"columns": [...], "data": {"name": [...]}}
void write_json(std::ostream& out, const Table& table);

}  // namespace wqed::cli
