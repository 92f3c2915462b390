#include "kg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kg {

Poly Poly::operator-() const {
    std::vector<QQ> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<QQ> out(std::max(coeffs_.size(), o.coeffs_.size()), QQ(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<QQ> out(std::max(coeffs_.size(), o.coeffs_.size()), QQ(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    // Schoolbook; degrees stay in the hundreds and exact-rational gcd cost
    // dominates anything a fancier scheme would save.
    std::vector<QQ> out(coeffs_.size() + o.coeffs_.size() - 1, QQ(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const QQ& s) const {
    if (s == 0) return Poly();
    std::vector<QQ> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return Poly(std::move(out));
}

QQ Poly::eval(const QQ& x) const {
    QQ acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<QQ> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * QQ(static_cast<unsigned long>(i));
    }
    return Poly(std::move(out));
}

Poly Poly::taylor_shift(const QQ& c) const {
    // Horner in the polynomial ring: p(x+c) = (...((a_d)(x+c) + a_{d-1})(x+c) + ...)
    Poly out;
    const Poly lin{c, QQ(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out = out * lin + Poly(*it);
    }
    return out;
}

bool Poly::is_even_function() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

bool Poly::is_odd_function() const {
    for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        QQ c = coeffs_[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (i == 0) {
            out << to_string(c);
        } else {
            if (c != 1) out << to_string(c) << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

Poly binom_poly(const QQ& c, int s, unsigned k) {
    if (s != 1 && s != -1) throw std::invalid_argument("binom_poly: sign must be +1 or -1");
    Poly p{QQ(1)};
    for (unsigned i = 0; i < k; ++i) {
        p = p * Poly{c - i, QQ(s)};
        p = p * make_ratio(1L, static_cast<long>(i) + 1);
    }
    return p;
}

}  // namespace kg
