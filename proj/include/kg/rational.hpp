#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kg {

// Exact arbitrary-precision scalars. GMP canonicalization keeps every QQ in
// lowest terms with a positive denominator (zero is 0/1), which is what the
// exact-equality tests throughout this project rely on.
using ZZ = mpz_class;
using QQ = mpq_class;

inline QQ make_ratio(const ZZ& num, const ZZ& den) {
    if (den == 0) throw std::domain_error("make_ratio: zero denominator");
    QQ r(num, den);
    r.canonicalize();
    return r;
}

inline QQ make_ratio(long num, long den) { return make_ratio(ZZ(num), ZZ(den)); }

/// Parses "a/b" or "a" (base 10). Throws std::invalid_argument on junk.
inline QQ parse_rational(const std::string& text) {
    QQ r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

/// Canonical "a/b" rendering; integers render without the "/1".
inline std::string to_string(const QQ& x) { return x.get_str(); }
inline std::string to_string(const ZZ& x) { return x.get_str(); }

inline ZZ pow2(unsigned long e) {
    ZZ r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline ZZ pow10(unsigned long e) {
    ZZ r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

inline QQ qq_pow(const QQ& base, unsigned long e) {
    QQ r(1);
    QQ b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline int sign_of(const QQ& x) { return sgn(x); }

}  // namespace kg
