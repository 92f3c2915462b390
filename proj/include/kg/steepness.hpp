#pragma once

#include "kg/rational.hpp"
#include "kg/report.hpp"

namespace kg {

/// Exact steepness F_N'(0) for even N >= 2:
///   2^(1-N) binom(N, N/2) sum_{even n <= N-2} c(n;N)
///       sum_{l=0}^{n/2} (-1)^l binom(N/2, l) / (n+1-2l),
/// with c(n;N) = (-1)^(n/2) binom(N/2, n/2) / binom(N, n). Outer terms are
/// independent, so the parallel policy splits them across threads; serial
/// and parallel results are identical rationals.
QQ steepness_exact(unsigned N, Exec exec = Exec::Parallel);

/// The same quantity re-indexed with m = n/2, M = N/2:
///   S(M) = 2^(1-2M) binom(2M, M) sum_{m=0}^{M-1} C(m,M) X(m,M).
/// Equals steepness_exact(2M).
QQ steepness_s(unsigned M, Exec exec = Exec::Parallel);

/// T(M) = 2 sum_{k=1}^{M} 1/(M+k), the doubled harmonic tail; S(M) = T(M)
/// and T(M) -> log 4.
QQ steepness_t(unsigned M);

/// C(m,M) = (-1)^m binom(M,m) / binom(2M,2m), 0 <= m <= M.
QQ c_ratio(unsigned m, unsigned M);

/// D(m,M) = C(m,M) (2M-2m+1)/(2M+2) for m < M; D(M,M) = (-1)^M/(2M+2) by
/// direct substitution.
QQ d_ratio(unsigned m, unsigned M);

/// X(m,M) = sum_{l=0}^{m} (-1)^l binom(M,l) / (2m+1-2l); X(-1,M) = 0.
QQ x_sum(long long m, unsigned M);

/// Closed form X(M, M+1) = (-1)^(M+1) (1 - 2^(2M+1) / binom(2M+1, M+1)).
QQ x_sum_closed(unsigned M);

// --- exact identity sweeps ---

/// S(M) = T(M) for 1 <= M <= M_max.
IdentityReport verify_st_equality(unsigned M_max, Exec exec = Exec::Parallel);

/// (2M+1)/(2M+2) C(m, M+1) = D(m, M), 0 <= m <= M-1, M <= M_max.
IdentityReport verify_cd_ratio_identity(unsigned M_max, Exec exec = Exec::Parallel);

/// D(m,M) - D(m+1,M) = C(m,M), 0 <= m <= M-1, M <= M_max.
IdentityReport verify_cd_difference_identity(unsigned M_max, Exec exec = Exec::Parallel);

/// X(m,M+1) = X(m,M) - X(m-1,M), 0 <= m <= M <= M_max.
IdentityReport verify_x_recurrence(unsigned M_max, Exec exec = Exec::Parallel);

/// x_sum(M, M+1) equals the closed form, M <= M_max.
IdentityReport verify_x_closed_form(unsigned M_max, Exec exec = Exec::Parallel);

/// sum_{k=0}^{M} (-1)^k binom(M,k)/(2k+1) = 2^(2M) / ((2M+1) binom(2M,M)),
/// M <= M_max (the Wallis integral as a finite rational identity).
IdentityReport verify_wallis_sum(unsigned M_max, Exec exec = Exec::Parallel);

/// Brute-force both sides of
///   sum_{v=0}^{2q+1} sum_{s=p+q+2-v}^{2p+2q+2-v} (-1)^v binom(2q+1,v) binom(2p+1,s)
///     = (-1)^(q+1) T(p,q)
/// over 0 <= p <= p_max, 0 <= q <= q_max.
IdentityReport verify_supercatalan_identity(unsigned p_max, unsigned q_max,
                                            Exec exec = Exec::Parallel);

/// Brute-force both sides of
///   sum_{v=0}^{n} sum_{s=N/2+1-v}^{N-v} (-1)^v binom(n,v) binom(N-n,s)
///     = (-1)^((n+1)/2) T((N-n-1)/2, (n-1)/2)
/// over even N <= N_max and odd n <= N.
IdentityReport verify_appendix_lemma(unsigned N_max, Exec exec = Exec::Parallel);

/// steepness_exact(2M) = steepness_t(M) for 1 <= M <= M_max (cross-module
/// consequence of the S = T equality).
IdentityReport verify_steepness_consequence(unsigned M_max, Exec exec = Exec::Parallel);

}  // namespace kg
