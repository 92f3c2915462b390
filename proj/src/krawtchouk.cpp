#include "kg/krawtchouk.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "kg/combinat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kg {

struct KrawtchoukFamily::Cache {
    std::mutex mutex;
    std::map<unsigned, Poly> shifted;
    std::map<unsigned, QQ> norms;
    std::vector<Poly> bminus;  // binom(N/2 - x, j)
    std::vector<Poly> bplus;   // binom(N/2 + x, j)
};

namespace {

void grow_binom_tables(std::vector<Poly>& bminus, std::vector<Poly>& bplus, const QQ& half_n,
                       unsigned up_to) {
    if (bminus.empty()) {
        bminus.emplace_back(QQ(1));
        bplus.emplace_back(QQ(1));
    }
    // binom(c + s*x, j) = binom(c + s*x, j-1) * (c + s*x - j + 1) / j
    while (bminus.size() <= up_to) {
        unsigned j = static_cast<unsigned>(bminus.size());
        QQ inv_j = make_ratio(1L, static_cast<long>(j));
        bminus.push_back(bminus.back() * Poly{half_n - (j - 1), QQ(-1)} * inv_j);
        bplus.push_back(bplus.back() * Poly{half_n - (j - 1), QQ(1)} * inv_j);
    }
}

Poly compose_shifted(unsigned n, std::span<const Poly> bminus, std::span<const Poly> bplus,
                     const QQ& p, const QQ& q) {
    Poly acc;
    QQ coeff = qq_pow(p, n);  // (-1)^{n-v} p^{n-v} q^v, updated per term
    if (n % 2 == 1) coeff = -coeff;
    const QQ step = q / p;
    for (unsigned v = 0; v <= n; ++v) {
        acc += bminus[n - v] * bplus[v] * coeff;
        coeff *= -step;
    }
    return acc;
}

}  // namespace

KrawtchoukFamily::KrawtchoukFamily(unsigned N, QQ p)
    : N_(N), p_(std::move(p)), q_(QQ(1) - p_), cache_(std::make_shared<Cache>()) {
    if (N_ < 2 || N_ % 2 != 0) throw std::invalid_argument("KrawtchoukFamily: N must be even and >= 2");
    if (p_ <= 0 || p_ >= 1) throw std::invalid_argument("KrawtchoukFamily: p must lie in (0,1)");
}

const Poly& KrawtchoukFamily::shifted(unsigned n) const {
    if (n > N_) throw std::out_of_range("shifted_k: n exceeds N");
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->shifted.find(n);
    if (it != cache_->shifted.end()) return it->second;
    grow_binom_tables(cache_->bminus, cache_->bplus, make_ratio(ZZ(N_), ZZ(2)), n);
    Poly k = compose_shifted(n, cache_->bminus, cache_->bplus, p_, q_);
    return cache_->shifted.emplace(n, std::move(k)).first->second;
}

QQ KrawtchoukFamily::norm_sq(unsigned n) const {
    if (n > N_) throw std::out_of_range("norm_sq: n exceeds N");
    if (p_ == make_ratio(1L, 2L)) {
        return make_ratio(combinat::binom(N_, n), pow2(2UL * n));
    }
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->norms.find(n);
        if (it != cache_->norms.end()) return it->second;
    }
    QQ value = inner_product(*this, shifted(n), shifted(n));
    std::lock_guard lock(cache_->mutex);
    return cache_->norms.emplace(n, std::move(value)).first->second;
}

QQ weight(const KrawtchoukFamily& fam, unsigned j) {
    if (j > fam.N()) throw std::out_of_range("weight: j exceeds N");
    return QQ(combinat::binom(fam.N(), j)) * qq_pow(fam.p(), j) * qq_pow(fam.q(), fam.N() - j);
}

QQ inner_product(const KrawtchoukFamily& fam, const Poly& f, const Poly& g) {
    const long half = fam.N() / 2;
    QQ acc(0);
    for (long y = -half; y <= half; ++y) {
        QQ point(y);
        acc += f.eval(point) * g.eval(point) * weight(fam, static_cast<unsigned>(y + half));
    }
    return acc;
}

Poly krawtchouk_poly(unsigned n, unsigned N, const QQ& p) {
    if (N < 1) throw std::invalid_argument("krawtchouk_poly: N must be >= 1");
    if (n > N) throw std::out_of_range("krawtchouk_poly: n exceeds N");
    if (p <= 0 || p >= 1) throw std::invalid_argument("krawtchouk_poly: p must lie in (0,1)");
    const QQ q = QQ(1) - p;
    Poly acc;
    QQ coeff = qq_pow(p, n);
    if (n % 2 == 1) coeff = -coeff;
    const QQ step = q / p;
    for (unsigned v = 0; v <= n; ++v) {
        acc += binom_poly(QQ(N), -1, n - v) * binom_poly(QQ(0), +1, v) * coeff;
        coeff *= -step;
    }
    return acc;
}

const Poly& shifted_k(const KrawtchoukFamily& fam, unsigned n) { return fam.shifted(n); }

QQ norm_sq(const KrawtchoukFamily& fam, unsigned n) { return fam.norm_sq(n); }

std::vector<Poly> shifted_family(unsigned N, const QQ& p, std::span<const unsigned> indices,
                                 Exec exec) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("shifted_family: N must be even and >= 2");
    unsigned n_max = 0;
    for (unsigned n : indices) {
        if (n > N) throw std::out_of_range("shifted_family: index exceeds N");
        n_max = std::max(n_max, n);
    }
    std::vector<Poly> bminus, bplus;
    grow_binom_tables(bminus, bplus, make_ratio(ZZ(N), ZZ(2)), n_max);
    const QQ q = QQ(1) - p;

    std::vector<Poly> out(indices.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long i = 0; i < static_cast<long>(indices.size()); ++i) {
        out[i] = compose_shifted(indices[i], bminus, bplus, p, q);
    }
    return out;
}

std::vector<Poly> shifted_family(unsigned N, const QQ& p, unsigned n_max, Exec exec) {
    std::vector<unsigned> indices(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) indices[n] = n;
    return shifted_family(N, p, indices, exec);
}

QQ k_at_zero(unsigned N, unsigned n) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("k_at_zero: N must be even and >= 2");
    if (n > N) throw std::out_of_range("k_at_zero: n exceeds N");
    if (n % 2 == 1) return QQ(0);
    QQ value = make_ratio(combinat::binom(N / 2, n / 2), pow2(n));
    return (n / 2) % 2 == 0 ? value : -value;
}

QQ k_prime_at_zero(unsigned N, unsigned m) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("k_prime_at_zero: N must be even and >= 2");
    if (m > N) throw std::out_of_range("k_prime_at_zero: m exceeds N");
    if (m % 2 == 0) return QQ(0);
    auto row = combinat::binom_row(N / 2);
    QQ acc(0);
    for (unsigned l = 0; l <= (m - 1) / 2; ++l) {
        QQ term = make_ratio((*row)[l], ZZ(m - 2 * l));
        if (l % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc * make_ratio(pow2(1), pow2(m));  // 2^{1-m}
}

bool difference_identity_check(unsigned N, unsigned n) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("difference_identity_check: N must be even");
    if (n < 1 || n > N) throw std::out_of_range("difference_identity_check: need 1 <= n <= N");
    const QQ half = make_ratio(1L, 2L);
    KrawtchoukFamily fam(N, half);
    const Poly& kn = fam.shifted(n);
    Poly lhs = kn.taylor_shift(QQ(1)) - kn;
    Poly rhs = krawtchouk_poly(n - 1, N - 1, half).taylor_shift(make_ratio(ZZ(N), ZZ(2)));
    return lhs == rhs;
}

Poly hermite_poly(unsigned n) {
    Poly h0{QQ(1)};
    if (n == 0) return h0;
    Poly h1{QQ(0), QQ(2)};
    const Poly two_x{QQ(0), QQ(2)};
    for (unsigned m = 1; m < n; ++m) {
        Poly h2 = two_x * h1 - h0 * QQ(2 * m);
        h0 = std::move(h1);
        h1 = std::move(h2);
    }
    return h1;
}

QQ hermite_limit_error(unsigned N, unsigned n, std::span<const QQ> samples) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("hermite_limit_error: N must be even");
    if (n > N) throw std::out_of_range("hermite_limit_error: n exceeds N");
    KrawtchoukFamily fam(N, make_ratio(1L, 2L));
    const Poly& kn = fam.shifted(n);

    const QQ eight_over_n = make_ratio(8L, static_cast<long>(N));
    const ZZ n_fact = combinat::factorial(n);
    std::vector<QQ> scaled(n + 1, QQ(0));
    for (unsigned j = 0; j <= n; ++j) {
        QQ cj = kn.coeff(j);
        if (cj == 0) continue;
        // k_n has the parity of n at p = 1/2; the rational scaling below
        // depends on n - j being even.
        if ((n - j) % 2 != 0) throw std::logic_error("hermite_limit_error: parity violation");
        scaled[j] = QQ(n_fact) * cj * QQ(pow2(j)) * qq_pow(eight_over_n, (n - j) / 2);
    }
    Poly diff = Poly(std::move(scaled)) - hermite_poly(n);

    QQ worst(0);
    for (const QQ& x : samples) {
        QQ err = abs(diff.eval(x));
        if (err > worst) worst = err;
    }
    return worst;
}

}  // namespace kg
