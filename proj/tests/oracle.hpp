#pragma once

// Brute-force reference implementations for the tests. These deliberately
// avoid the library's code paths: no memo tables, no shared helpers, and
// where the library composes polynomials from binomial products the oracle
// uses the three-term recurrence instead.

#include <random>
#include <vector>

#include "kg/poly.hpp"
#include "kg/rational.hpp"

namespace oracle {

using kg::Poly;
using kg::QQ;
using kg::ZZ;

/// Pascal-triangle binomial; no factorials, no caching.
inline ZZ pascal_binom(unsigned n, long long k) {
    if (k < 0 || k > n) return 0;
    std::vector<ZZ> row{ZZ(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<ZZ> next(i + 1, ZZ(0));
        for (unsigned j = 0; j <= i; ++j) {
            if (j < row.size()) next[j] += row[j];
            if (j >= 1) next[j] += row[j - 1];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Falling-factorial product, term by term.
inline QQ falling_factorial(const QQ& a, unsigned k) {
    QQ acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= a - i;
    return acc;
}

/// n passes of one-step differencing f(v) -> f(v+1) - f(v), then f[0].
inline QQ iterated_forward_difference(std::vector<QQ> f, unsigned n) {
    for (unsigned pass = 0; pass < n; ++pass) {
        for (std::size_t v = 0; v + 1 < f.size(); ++v) f[v] = f[v + 1] - f[v];
        f.pop_back();
    }
    return f.at(0);
}

/// Shifted p=1/2 Krawtchouk polynomials k_0..k_{n_max} via the three-term
/// recurrence (m+1) k_{m+1} = x k_m - ((N-m+1)/4) k_{m-1}, k_0 = 1, k_1 = x.
inline std::vector<Poly> recurrence_family(unsigned N, unsigned n_max) {
    std::vector<Poly> ks;
    ks.push_back(Poly{QQ(1)});
    if (n_max == 0) return ks;
    ks.push_back(Poly::x());
    for (unsigned m = 1; m < n_max; ++m) {
        Poly next = Poly::x() * ks[m] - ks[m - 1] * kg::make_ratio(static_cast<long>(N - m + 1), 4L);
        ks.push_back(next * kg::make_ratio(1L, static_cast<long>(m) + 1));
    }
    return ks;
}

/// floor(sqrt(r) * 10^digits) / 10^digits; r >= 0.
inline QQ sqrt_approx(const QQ& r, unsigned digits) {
    ZZ scale = kg::pow10(digits);
    ZZ target = (r.get_num() * scale * scale) / r.get_den();
    ZZ root;
    mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
    return kg::make_ratio(root, scale);
}

/// Deterministic random rationals for property tests.
struct Rng {
    std::mt19937_64 gen{123456789};

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    QQ rational(long num_range = 1000, long den_range = 60) {
        long num = integer(-num_range, num_range);
        long den = integer(1, den_range);
        return kg::make_ratio(num, den);
    }

    QQ nonzero_rational(long num_range = 1000, long den_range = 60) {
        QQ r;
        do {
            r = rational(num_range, den_range);
        } while (r == 0);
        return r;
    }

    Poly poly(int max_degree = 6) {
        long deg = integer(0, max_degree);
        std::vector<QQ> coeffs;
        for (long i = 0; i <= deg; ++i) coeffs.push_back(rational(50, 12));
        return Poly(std::move(coeffs));
    }
};

}  // namespace oracle
