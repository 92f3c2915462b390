#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kg/krawtchouk.hpp"
#include "kg/report.hpp"

namespace kg {

/// The N+1 graph points of sgn on the shifted grid: (i - N/2, sgn(i - N/2)).
struct SignPointSet {
    unsigned N = 0;
    std::vector<std::pair<long long, int>> points;

    static SignPointSet make(unsigned N);
};

// Fourier approximation of sgn in the shifted Krawtchouk basis:
// F_N = sum_n c_n k_n with c_n = <sgn, k_n> / ||k_n||^2. Coefficients are
// stored for every n (zeros included); the assembled polynomial is odd of
// degree N-1 for every admissible p, and at p = 1/2 the even-degree
// coefficients themselves vanish.
struct FourierApprox {
    unsigned N = 0;
    std::vector<QQ> coefficients;  // c_0 .. c_N
    Poly polynomial;
};

/// Projection coefficient c_n = <sgn, k_n> / ||k_n||^2. At p = 1/2 the
/// numerator collapses by symmetry to
///   2 * 2^(-N) * sum_{y=1}^{N/2} k_n(y;N) binom(N, N/2+y)
/// for odd n (and 0 for even n); for general p it is summed directly over
/// the nonzero grid points.
QQ fourier_coefficient(const KrawtchoukFamily& fam, unsigned n);

/// F_N assembled from the projection coefficients.
FourierApprox build_direct(const KrawtchoukFamily& fam);

/// F_N assembled from the closed form (p = 1/2):
///   F_N(x) = 2^(1-N) binom(N, N/2) sum_{n=0}^{N-2} k_n(0;N) k_{n+1}(x;N) / ||k_n||^2,
/// everything taken from closed-form values rather than inner products.
FourierApprox build_closed_form(unsigned N, Exec exec = Exec::Parallel);

/// Lagrange interpolant of the sign points in binomial form:
///   I_N(x) = sum_i sgn(i - N/2) binom(N/2 + x, i) binom(N/2 - x, N - i).
Poly lagrange_interpolant(unsigned N);

/// Christoffel-Darboux kernel K_N(x,y) = sum_n k_n(x) k_n(y) / ||k_n||^2 at
/// integer grid points; K_N(x,y) w_N(y + N/2) = delta_{xy} on the grid.
QQ cd_kernel(const KrawtchoukFamily& fam, long long x, long long y);

/// Leading coefficient of I_N equals (-1)^((N-2)/2) C((N-2)/2) / (N-1)!
/// (observed for all even N checked; no proof is known).
bool leading_coeff_check(unsigned N);

// Exact verification sweeps over even N. first_failure tuples identify the
// earliest failing case in enumeration order.
IdentityReport verify_triple_equality(unsigned N_max, Exec exec = Exec::Parallel);
IdentityReport verify_interpolation(unsigned N_max, Exec exec = Exec::Parallel);
IdentityReport verify_p_independence(unsigned N_max, std::span<const QQ> ps);
IdentityReport verify_cd_delta(unsigned N_max, std::span<const QQ> ps);
IdentityReport verify_leading_coeff(unsigned N_max);

}  // namespace kg
