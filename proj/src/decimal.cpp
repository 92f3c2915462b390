#include "kg/decimal.hpp"

#include <cctype>

namespace kg {

DecimalValue DecimalValue::round_half_even(const QQ& value, unsigned decimals) {
    const bool negative = value < 0;
    QQ scaled = abs(value) * QQ(pow10(decimals));
    ZZ q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    const ZZ twice = 2 * r;
    if (twice > scaled.get_den() || (twice == scaled.get_den() && mpz_odd_p(q.get_mpz_t()))) {
        q += 1;
    }
    if (negative) q = -q;
    return DecimalValue{std::move(q), decimals};
}

std::string DecimalValue::str() const {
    ZZ m = abs(mantissa);
    std::string digits = m.get_str();
    if (digits.size() < decimals + 1) {
        digits.insert(0, decimals + 1 - digits.size(), '0');
    }
    std::string out;
    if (mantissa < 0) out += '-';
    out += digits.substr(0, digits.size() - decimals);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

QQ DecimalValue::to_rational() const { return make_ratio(mantissa, pow10(decimals)); }

std::optional<DecimalValue> DecimalValue::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    std::string digits;
    unsigned decimals = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        if (text[i] == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i];
            seen_digit = true;
            if (seen_dot) ++decimals;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) return std::nullopt;
    ZZ m(digits, 10);
    if (negative) m = -m;
    return DecimalValue{std::move(m), decimals};
}

}  // namespace kg
