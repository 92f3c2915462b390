#include "kg/output.hpp"

#include <json.hpp>

#include <stdexcept>

namespace kg {

std::string render_csv(const OutputTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("render_csv: row width does not match header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (const auto* text = std::get_if<std::string>(&row[c])) {
                out += *text;
            } else {
                out += to_string(std::get<QQ>(row[c]));
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const OutputTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("render_json: row width does not match header");
        }
        nlohmann::ordered_json record;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const auto* text = std::get_if<std::string>(&row[c])) {
                record[table.columns[c]] = *text;
            } else {
                const QQ& value = std::get<QQ>(row[c]);
                record[table.columns[c]] = {{"num", value.get_num().get_str()},
                                            {"den", value.get_den().get_str()}};
            }
        }
        rows.push_back(std::move(record));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace kg
