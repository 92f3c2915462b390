#include "kg/gibbs.hpp"

#include <stdexcept>

#include "kg/approx.hpp"
#include "kg/steepness.hpp"

namespace kg {

namespace {

struct Bracket {
    QQ lo, hi;       // F'(lo) > 0, F'(hi) < 0
    QQ f_lo, f_hi;   // cached derivative values at the endpoints
};

// Continue bisecting an established bracket until hi - lo <= tol. Midpoints
// stay dyadic multiples of the original endpoints, which keeps the exact
// polynomial evaluations from blowing up.
void refine(const Poly& dF, Bracket& b, const QQ& tol) {
    while (b.hi - b.lo > tol) {
        QQ mid = (b.lo + b.hi) / 2;
        QQ d = dF.eval(mid);
        if (d > 0) {
            b.lo = std::move(mid);
            b.f_lo = std::move(d);
        } else if (d < 0) {
            b.hi = std::move(mid);
            b.f_hi = std::move(d);
        } else {
            // Landed exactly on the critical point; verify a symmetric
            // sub-bracket and stop.
            QQ delta = tol / 4;
            QQ lo = mid - delta, hi = mid + delta;
            QQ dlo = dF.eval(lo), dhi = dF.eval(hi);
            if (!(dlo > 0 && dhi < 0)) {
                throw std::runtime_error("degenerate critical point");
            }
            b = Bracket{std::move(lo), std::move(hi), std::move(dlo), std::move(dhi)};
            return;
        }
    }
}

// Fixed-step sign scan of F' over (0, N/2]. F'(0) is the steepness
// (~1.38 > 0), so the scan starts one step to the right of the origin.
Bracket scan_first_sign_change(const Poly& dF, unsigned N, const QQ& step, const QQ& tol) {
    const QQ end = make_ratio(ZZ(N), ZZ(2));
    QQ prev(0);
    QQ f_prev = dF.eval(prev);
    for (QQ x = step; x <= end; x += step) {
        QQ d = dF.eval(x);
        if (d < 0) {
            return Bracket{std::move(prev), x, std::move(f_prev), std::move(d)};
        }
        if (d == 0) {
            QQ delta = std::min(step, tol) / 4;
            QQ lo = x - delta, hi = x + delta;
            QQ dlo = dF.eval(lo), dhi = dF.eval(hi);
            if (!(dlo > 0 && dhi < 0)) {
                throw std::runtime_error("degenerate critical point");
            }
            return Bracket{std::move(lo), std::move(hi), std::move(dlo), std::move(dhi)};
        }
        prev = x;
        f_prev = std::move(d);
    }
    throw std::runtime_error("no critical point found");
}

OvershootResult make_result(const Poly& F, const Bracket& b, unsigned N, unsigned digits) {
    if (!(b.lo < b.hi && b.f_lo > 0 && b.f_hi < 0)) {
        throw std::logic_error("overshoot: bracketing invariant violated");
    }
    QQ mid = (b.lo + b.hi) / 2;
    return OvershootResult{N, b.lo, b.hi, F.eval(mid), digits};
}

}  // namespace

OvershootResult smallest_critical_point(unsigned N, const QQ& tol, const QQ& step, Exec exec) {
    if (tol <= 0) throw std::invalid_argument("smallest_critical_point: tol must be positive");
    if (step <= 0) throw std::invalid_argument("smallest_critical_point: step must be positive");
    const Poly F = build_closed_form(N, exec).polynomial;
    const Poly dF = F.derivative();
    Bracket b = scan_first_sign_change(dF, N, step, tol);
    refine(dF, b, tol);
    return make_result(F, b, N, 0);
}

OvershootResult overshoot_certified(unsigned N, unsigned digits, const QQ& step, Exec exec) {
    if (digits == 0) throw std::invalid_argument("overshoot_certified: digits must be >= 1");
    const Poly F = build_closed_form(N, exec).polynomial;
    const Poly dF = F.derivative();

    QQ tol = make_ratio(ZZ(1), pow10(digits + 6));
    Bracket b = scan_first_sign_change(dF, N, step, tol);
    // Tighten until the value rounds identically across the bracket, so the
    // printed digits do not depend on where in the bracket theta_N sits.
    for (int attempt = 0; attempt < 64; ++attempt) {
        refine(dF, b, tol);
        const std::string at_lo = DecimalValue::round_half_even(F.eval(b.lo), digits).str();
        const std::string at_hi = DecimalValue::round_half_even(F.eval(b.hi), digits).str();
        OvershootResult result = make_result(F, b, N, digits);
        const std::string at_mid = DecimalValue::round_half_even(result.value, digits).str();
        if (at_lo == at_hi && at_lo == at_mid) return result;
        tol /= 2;
    }
    throw std::runtime_error("overshoot: digits did not stabilize");
}

DecimalValue overshoot(unsigned N, unsigned digits, const QQ& step, Exec exec) {
    return DecimalValue::round_half_even(overshoot_certified(N, digits, step, exec).value, digits);
}

namespace {

// 10^P-scaled arctan(1/x) by the alternating power series; every division
// truncates toward zero, so each added term is off by at most one ulp.
ZZ atan_inv_scaled(unsigned long x, const ZZ& one, unsigned long& terms) {
    ZZ power = one / x;
    const ZZ x_sq = ZZ(x) * x;
    ZZ total(0);
    for (unsigned long k = 0; power != 0; ++k, ++terms) {
        ZZ term = power / (2 * k + 1);
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
        power /= x_sq;
    }
    return total;
}

ZZ atanh_inv_scaled(unsigned long x, const ZZ& one, unsigned long& terms) {
    ZZ power = one / x;
    const ZZ x_sq = ZZ(x) * x;
    ZZ total(0);
    for (unsigned long k = 0; power != 0; ++k, ++terms) {
        total += power / (2 * k + 1);
        power /= x_sq;
    }
    return total;
}

ZZ pi_scaled(const ZZ& one, unsigned long& slop_ulps) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    unsigned long t5 = 0, t239 = 0;
    ZZ pi = 16 * atan_inv_scaled(5, one, t5) - 4 * atan_inv_scaled(239, one, t239);
    slop_ulps += 16 * t5 + 4 * t239;
    return pi;
}

}  // namespace

CertifiedValue gibbs_constant_approx(unsigned digits) {
    if (digits > 1000) throw std::invalid_argument("gibbs_constant: digits must be <= 1000");
    const unsigned prec = digits + 10;
    const ZZ one = pow10(prec);

    unsigned long slop = 0;
    const ZZ pi = pi_scaled(one, slop);
    const ZZ pi_sq = pi * pi / one;
    slop += 1;

    // Si(pi) = sum_k (-1)^k pi^(2k+1) / ((2k+1)(2k+1)!), with
    // u_k = pi^(2k+1)/(2k+1)! updated by u_{k+1} = u_k pi^2 / ((2k+2)(2k+3)).
    ZZ u = pi;
    ZZ si(0);
    for (unsigned long k = 0; u != 0; ++k) {
        ZZ term = u / (2 * k + 1);
        if (k % 2 == 0) {
            si += term;
        } else {
            si -= term;
        }
        u = u * pi_sq / one / ((2 * k + 2) * (2 * k + 3));
        slop += 3;
    }
    slop += 1;  // alternating remainder: below one ulp once u reaches 0

    ZZ gamma = 2 * si * one / pi;
    slop += 2;

    return CertifiedValue{make_ratio(gamma, one), make_ratio(ZZ(slop + 1), one)};
}

DecimalValue gibbs_constant(unsigned digits) {
    return DecimalValue::round_half_even(gibbs_constant_approx(digits).value, digits);
}

QQ pi_approx(unsigned digits) {
    const ZZ one = pow10(digits + 10);
    unsigned long slop = 0;
    return make_ratio(pi_scaled(one, slop), one);
}

QQ log4_approx(unsigned digits) {
    // log 4 = 4 atanh(1/3).
    const ZZ one = pow10(digits + 10);
    unsigned long terms = 0;
    return make_ratio(4 * atanh_inv_scaled(3, one, terms), one);
}

std::vector<std::pair<unsigned, DecimalValue>> steepness_table(std::span<const unsigned> Ns,
                                                               unsigned digits, Exec exec) {
    std::vector<std::pair<unsigned, DecimalValue>> rows;
    rows.reserve(Ns.size());
    for (unsigned N : Ns) {
        rows.emplace_back(N, DecimalValue::round_half_even(steepness_exact(N, exec), digits));
    }
    return rows;
}

std::vector<std::pair<unsigned, DecimalValue>> overshoot_table(std::span<const unsigned> Ns,
                                                               unsigned digits, const QQ& step,
                                                               Exec exec) {
    std::vector<std::pair<unsigned, DecimalValue>> rows;
    rows.reserve(Ns.size());
    for (unsigned N : Ns) {
        rows.emplace_back(N, overshoot(N, digits, step, exec));
    }
    return rows;
}

}  // namespace kg
