#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kg/rational.hpp"

namespace kg {

// A rounded decimal: value = mantissa * 10^(-decimals). Produced from exact
// rationals by round-half-even, so str() parses back to within half an ulp
// of the source. Trailing zeros are kept ("1.178980" at 6 decimals).
struct DecimalValue {
    ZZ mantissa;
    unsigned decimals = 0;

    static DecimalValue round_half_even(const QQ& value, unsigned decimals);

    /// Fixed-notation rendering with exactly `decimals` fractional digits.
    std::string str() const;

    QQ to_rational() const;

    int exponent() const { return -static_cast<int>(decimals); }

    static std::optional<DecimalValue> parse(std::string_view text);

    bool operator==(const DecimalValue&) const = default;
};

}  // namespace kg
