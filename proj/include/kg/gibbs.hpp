#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kg/decimal.hpp"
#include "kg/exec.hpp"
#include "kg/rational.hpp"

namespace kg {

// Certified bracket for the smallest positive critical point theta_N of F_N,
// plus the exact value of F_N at the bracket midpoint. The bracket keeps
// F_N'(theta_lo) > 0 and F_N'(theta_hi) < 0 (first maximum), with dyadic
// endpoints so exact evaluation stays cheap.
struct OvershootResult {
    unsigned N = 0;
    QQ theta_lo;
    QQ theta_hi;
    QQ value;            // F_N at (theta_lo + theta_hi) / 2, exact
    unsigned digits = 0; // requested decimal precision (0 when none)
};

/// Isolates theta_N to width <= tol by a fixed-step sign scan of F_N'
/// followed by bisection. Throws std::runtime_error("no critical point
/// found") if the scan exhausts (0, N/2] without a sign change (N = 2).
OvershootResult smallest_critical_point(unsigned N, const QQ& tol,
                                        const QQ& step = QQ(1, 8),
                                        Exec exec = Exec::Parallel);

/// Overshoot F_N(theta_N) with the printed digits certified: the bracket is
/// tightened (starting from width 10^-(digits+6)) until F_N at both
/// endpoints and the midpoint all round to the same digit string.
OvershootResult overshoot_certified(unsigned N, unsigned digits,
                                    const QQ& step = QQ(1, 8),
                                    Exec exec = Exec::Parallel);

/// The certified overshoot, rounded.
DecimalValue overshoot(unsigned N, unsigned digits, const QQ& step = QQ(1, 8),
                       Exec exec = Exec::Parallel);

/// A rational approximation together with a certified error bound.
struct CertifiedValue {
    QQ value;
    QQ error_bound;  // |value - truth| <= error_bound
};

/// Classical Gibbs constant gamma = (2/pi) * Si(pi), computed by the
/// alternating series Si(pi) = sum_k (-1)^k pi^(2k+1) / ((2k+1)(2k+1)!) in
/// fixed-point decimal with digits+10 guard digits; pi comes from Machin's
/// arctangent formula. The bound covers the alternating-series remainder and
/// every truncated division. digits <= 1000.
CertifiedValue gibbs_constant_approx(unsigned digits);

/// gamma rounded to the requested decimals (1.178980 at 6).
DecimalValue gibbs_constant(unsigned digits);

/// pi and log 4 from the same series engine; error < 10^-digits.
QQ pi_approx(unsigned digits);
QQ log4_approx(unsigned digits);

/// Exact steepness per N, rounded; rows in input order.
std::vector<std::pair<unsigned, DecimalValue>> steepness_table(
    std::span<const unsigned> Ns, unsigned digits, Exec exec = Exec::Parallel);

/// Certified overshoot per N, rounded; rows in input order.
std::vector<std::pair<unsigned, DecimalValue>> overshoot_table(
    std::span<const unsigned> Ns, unsigned digits, const QQ& step = QQ(1, 8),
    Exec exec = Exec::Parallel);

}  // namespace kg
