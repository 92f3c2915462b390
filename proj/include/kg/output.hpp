#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kg/rational.hpp"

namespace kg {

// One emitted value: either an already-rendered string (decimal digit
// strings, integers, labels) or an exact rational. Both renderings of a
// table carry identical digit strings; JSON additionally splits rationals
// into {"num": ..., "den": ...}.
using FieldValue = std::variant<std::string, QQ>;

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<FieldValue>> rows;
};

/// Header row plus one line per record; '.' decimal separator, no grouping,
/// no quoting (values never contain commas).
std::string render_csv(const OutputTable& table);

/// {"rows": [{column: value, ...}, ...]} with columns in declaration order.
std::string render_json(const OutputTable& table);

}  // namespace kg
