#pragma once

#include <memory>
#include <span>
#include <vector>

#include "kg/exec.hpp"
#include "kg/poly.hpp"

namespace kg {

// The (N, p) context for a Krawtchouk family on the shifted grid
// [-N/2, N/2]: N even and >= 2, 0 < p < 1, q = 1 - p held exactly.
// Shifted polynomials and norms are cached per family; the cache behaves
// atomically under concurrent use and is shared across copies.
class KrawtchoukFamily {
  public:
    KrawtchoukFamily(unsigned N, QQ p);

    unsigned N() const { return N_; }
    const QQ& p() const { return p_; }
    const QQ& q() const { return q_; }

    /// Cached shifted polynomial k_n (see shifted_k below).
    const Poly& shifted(unsigned n) const;

    /// Cached ||k_n||^2: the closed form binom(N,n)/4^n at p = 1/2, the
    /// inner-product sum otherwise.
    QQ norm_sq(unsigned n) const;

  private:
    struct Cache;

    unsigned N_;
    QQ p_, q_;
    std::shared_ptr<Cache> cache_;
};

/// Binomial weight w_N(j) = binom(N,j) p^j q^(N-j), 0 <= j <= N.
QQ weight(const KrawtchoukFamily& fam, unsigned j);

/// Discrete inner product on the shifted grid:
///   <f,g> = sum_{y=-N/2}^{N/2} f(y) g(y) w_N(y + N/2).
QQ inner_product(const KrawtchoukFamily& fam, const Poly& f, const Poly& g);

/// Unshifted K_n^{(p)}(x;N) = sum_v (-1)^{n-v} binom(N-x,n-v) binom(x,v) p^{n-v} q^v.
/// Any N >= 1 (odd N is needed by the difference identity), 0 <= n <= N.
Poly krawtchouk_poly(unsigned n, unsigned N, const QQ& p);

/// Shifted polynomial k_n(x;N) = K_n^{(p)}(x + N/2; N), assembled directly
/// from binom_poly products of binom(N/2-x, n-v) binom(N/2+x, v) rather than
/// by substituting into krawtchouk_poly.
const Poly& shifted_k(const KrawtchoukFamily& fam, unsigned n);

QQ norm_sq(const KrawtchoukFamily& fam, unsigned n);

/// Bulk construction of the shifted polynomials for the given indices,
/// sharing one set of binomial-polynomial tables. Indices are independent,
/// so the parallel policy splits them across threads.
std::vector<Poly> shifted_family(unsigned N, const QQ& p, std::span<const unsigned> indices,
                                 Exec exec = Exec::Parallel);
std::vector<Poly> shifted_family(unsigned N, const QQ& p, unsigned n_max,
                                 Exec exec = Exec::Parallel);

/// k_n(0;N) at p = 1/2: (-1)^(n/2) binom(N/2, n/2) / 2^n for even n, else 0.
QQ k_at_zero(unsigned N, unsigned n);

/// k_m'(0;N) at p = 1/2:
///   2^(1-m) sum_{l=0}^{(m-1)/2} (-1)^l binom(N/2, l) / (m - 2l)
/// for odd m, else 0.
QQ k_prime_at_zero(unsigned N, unsigned m);

/// Exact check of the difference equation
///   k_n(x+1;N) - k_n(x;N) = k_{n-1}(x + 1/2; N-1)
/// at p = 1/2, with the right side realized as K_{n-1}(x + N/2; N-1) so the
/// odd-length family never needs its own half-integer shift.
bool difference_identity_check(unsigned N, unsigned n);

/// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
Poly hermite_poly(unsigned n);

/// Max over the samples of |(8/N)^(n/2) n! k_n(sqrt(N/2) x; N) - H_n(x)| at
/// p = 1/2. The half powers of sqrt(N/2) pair with the prefactor through the
/// parity of k_n, so the scaled polynomial has rational coefficients
///   n! c_j 2^j (8/N)^((n-j)/2)
/// and the error is exact. Meaningful for n well below N^(1/3).
QQ hermite_limit_error(unsigned N, unsigned n, std::span<const QQ> samples);

}  // namespace kg
