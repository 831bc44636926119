#include "wqed/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace wqed::cli {

void Table::add(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != rows()) throw std::logic_error("column '" + name + "' has wrong length");
    header.push_back(std::move(name));
    columns.push_back(std::move(values));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
    out << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << format_number(table.columns[c][r]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    nlohmann::ordered_json doc;
    doc["columns"] = table.header;
    auto& data = doc["data"];
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        auto arr = nlohmann::json::array();
        for (double v : table.columns[c]) {
            if (std::isfinite(v)) arr.push_back(v);
            else arr.push_back(format_number(v));
        }
        data[table.header[c]] = std::move(arr);
    }
    out << doc.dump(1) << '\n';
}

}  // namespace wqed::cli
