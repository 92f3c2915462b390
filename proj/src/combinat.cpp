#include "kg/combinat.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kg::combinat {

namespace {

std::mutex g_fact_mutex;
std::vector<ZZ> g_factorials;  // g_factorials[n] = n!

std::mutex g_row_mutex;
std::map<unsigned, std::shared_ptr<const std::vector<ZZ>>> g_rows;

std::atomic<bool> g_corrupt{false};

}  // namespace

ZZ factorial(unsigned n) {
    std::lock_guard lock(g_fact_mutex);
    if (g_factorials.empty()) g_factorials.emplace_back(1);
    while (g_factorials.size() <= n) {
        g_factorials.push_back(g_factorials.back() * (unsigned long)g_factorials.size());
    }
    return g_factorials[n];
}

ZZ binom(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binom: negative upper argument");
    if (k < 0 || k > n) return 0;
    if (g_corrupt.load(std::memory_order_relaxed) && n == 6 && k == 3) return 21;
    ZZ num = factorial(static_cast<unsigned>(n));
    ZZ den = factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k));
    ZZ r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

namespace {

std::shared_ptr<const std::vector<ZZ>> clean_binom_row(unsigned n) {
    {
        std::lock_guard lock(g_row_mutex);
        auto it = g_rows.find(n);
        if (it != g_rows.end()) return it->second;
    }
    // binom(n,k+1) = binom(n,k) * (n-k) / (k+1)
    auto row = std::make_shared<std::vector<ZZ>>(n + 1);
    (*row)[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        ZZ next = (*row)[k] * (n - k);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k + 1);
        (*row)[k + 1] = std::move(next);
    }
    std::lock_guard lock(g_row_mutex);
    auto [it, inserted] = g_rows.emplace(n, std::move(row));
    return it->second;
}

}  // namespace

std::shared_ptr<const std::vector<ZZ>> binom_row(unsigned n) {
    auto row = clean_binom_row(n);
    // Serve the corrupted value out of a copy so the cache stays clean and
    // disabling the hook restores correct results.
    if (g_corrupt.load(std::memory_order_relaxed) && n == 6) {
        auto bad = std::make_shared<std::vector<ZZ>>(*row);
        (*bad)[3] = 21;
        return bad;
    }
    return row;
}

QQ binomial(const QQ& a, unsigned k) {
    QQ num(1);
    for (unsigned i = 0; i < k; ++i) num *= a - i;
    return num / QQ(factorial(k));
}

QQ catalan(unsigned n) {
    return make_ratio(binom(2LL * n, n), ZZ(n) + 1);
}

QQ super_catalan(unsigned p, unsigned q) {
    ZZ num = factorial(2 * p) * factorial(2 * q);
    ZZ den = factorial(p) * factorial(q) * factorial(p + q);
    return make_ratio(num, den);
}

QQ t_number(unsigned p, unsigned q) {
    ZZ num = factorial(2 * p + 1) * factorial(2 * q);
    ZZ den = factorial(p) * factorial(q) * factorial(p + q + 1);
    return make_ratio(num, den);
}

QQ forward_difference(std::span<const QQ> values, unsigned n) {
    if (values.size() < n + 1) {
        throw std::invalid_argument("forward_difference: sequence shorter than n+1");
    }
    auto row = binom_row(n);
    QQ acc(0);
    for (unsigned v = 0; v <= n; ++v) {
        QQ term = QQ((*row)[v]) * values[v];
        if ((n - v) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

void set_binomial_corruption(bool enabled) {
    g_corrupt.store(enabled, std::memory_order_relaxed);
}

}  // namespace kg::combinat
