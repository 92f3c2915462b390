#include "kg/approx.hpp"

#include <stdexcept>

#include "kg/combinat.hpp"

namespace kg {

namespace {

int sgn_of(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

const QQ& one_half() {
    static const QQ h = make_ratio(1L, 2L);
    return h;
}

void check_even(unsigned N, const char* who) {
    if (N < 2 || N % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": N must be even and >= 2");
    }
}

// ||k_n||^2 = binom(N,n) / 4^n at p = 1/2, taken in closed form so the
// closed-form route never touches the inner product.
QQ norm_sq_closed(unsigned N, unsigned n) {
    return make_ratio(combinat::binom(N, n), pow2(2UL * n));
}

}  // namespace

SignPointSet SignPointSet::make(unsigned N) {
    check_even(N, "SignPointSet");
    SignPointSet set;
    set.N = N;
    const long long half = N / 2;
    set.points.reserve(N + 1);
    for (long long i = 0; i <= static_cast<long long>(N); ++i) {
        set.points.emplace_back(i - half, sgn_of(i - half));
    }
    return set;
}

QQ fourier_coefficient(const KrawtchoukFamily& fam, unsigned n) {
    if (n > fam.N()) throw std::out_of_range("fourier_coefficient: n exceeds N");
    const unsigned N = fam.N();
    const long long half = N / 2;
    if (fam.p() == one_half()) {
        if (n % 2 == 0) return QQ(0);
        auto row = combinat::binom_row(N);
        const Poly& kn = fam.shifted(n);
        QQ sum(0);
        for (long long y = 1; y <= half; ++y) {
            sum += kn.eval(QQ(static_cast<long>(y))) * QQ((*row)[static_cast<std::size_t>(half + y)]);
        }
        QQ projection = QQ(2) * sum / QQ(pow2(N));
        return projection / fam.norm_sq(n);
    }
    // sgn(0) = 0, so only the nonzero grid points contribute.
    const Poly& kn = fam.shifted(n);
    QQ projection(0);
    for (long long y = -half; y <= half; ++y) {
        if (y == 0) continue;
        projection += QQ(sgn_of(y)) * kn.eval(QQ(static_cast<long>(y))) * weight(fam, static_cast<unsigned>(y + half));
    }
    return projection / fam.norm_sq(n);
}

FourierApprox build_direct(const KrawtchoukFamily& fam) {
    const unsigned N = fam.N();
    FourierApprox approx;
    approx.N = N;
    approx.coefficients.resize(N + 1, QQ(0));
    for (unsigned n = 0; n <= N; ++n) {
        QQ c = fourier_coefficient(fam, n);
        if (c != 0) approx.polynomial += fam.shifted(n) * c;
        approx.coefficients[n] = std::move(c);
    }
    if (approx.polynomial.degree() != static_cast<int>(N) - 1 ||
        !approx.polynomial.is_odd_function()) {
        throw std::logic_error("build_direct: F_N is not an odd degree-(N-1) polynomial");
    }
    return approx;
}

FourierApprox build_closed_form(unsigned N, Exec exec) {
    check_even(N, "build_closed_form");
    FourierApprox approx;
    approx.N = N;
    approx.coefficients.resize(N + 1, QQ(0));

    // c_{n+1} = 2^(1-N) binom(N, N/2) k_n(0;N) / ||k_n||^2 for even n, and
    // the closed forms for k_n(0;N) and ||k_n||^2 cancel to
    //   2^(1-N) binom(N, N/2) (-1)^(n/2) 2^n binom(N/2, n/2) / binom(N, n).
    const QQ prefactor = QQ(2) * QQ(combinat::binom(N, N / 2)) / QQ(pow2(N));
    std::vector<unsigned> odd_indices;
    for (unsigned n = 0; n + 2 <= N; n += 2) {
        approx.coefficients[n + 1] = prefactor * k_at_zero(N, n) / norm_sq_closed(N, n);
        odd_indices.push_back(n + 1);
    }
    std::vector<Poly> basis = shifted_family(N, one_half(), odd_indices, exec);
    for (std::size_t i = 0; i < odd_indices.size(); ++i) {
        approx.polynomial += basis[i] * approx.coefficients[odd_indices[i]];
    }
    if (approx.polynomial.degree() != static_cast<int>(N) - 1 ||
        !approx.polynomial.is_odd_function()) {
        throw std::logic_error("build_closed_form: F_N is not an odd degree-(N-1) polynomial");
    }
    return approx;
}

Poly lagrange_interpolant(unsigned N) {
    check_even(N, "lagrange_interpolant");
    const QQ half_n = make_ratio(ZZ(N), ZZ(2));
    // binom(N/2 + x, i) and binom(N/2 - x, j) for all needed orders, built
    // incrementally.
    std::vector<Poly> bplus{Poly{QQ(1)}}, bminus{Poly{QQ(1)}};
    for (unsigned j = 1; j <= N; ++j) {
        QQ inv_j = make_ratio(1L, static_cast<long>(j));
        bplus.push_back(bplus.back() * Poly{half_n - (j - 1), QQ(1)} * inv_j);
        bminus.push_back(bminus.back() * Poly{half_n - (j - 1), QQ(-1)} * inv_j);
    }
    Poly acc;
    for (unsigned i = 0; i <= N; ++i) {
        int s = sgn_of(static_cast<long long>(i) - N / 2);
        if (s == 0) continue;
        Poly term = bplus[i] * bminus[N - i];
        acc += (s > 0) ? term : -term;
    }
    return acc;
}

QQ cd_kernel(const KrawtchoukFamily& fam, long long x, long long y) {
    const long long half = fam.N() / 2;
    if (x < -half || x > half || y < -half || y > half) {
        throw std::out_of_range("cd_kernel: arguments must lie on the grid [-N/2, N/2]");
    }
    QQ acc(0);
    for (unsigned n = 0; n <= fam.N(); ++n) {
        const Poly& kn = fam.shifted(n);
        acc += kn.eval(QQ(static_cast<long>(x))) * kn.eval(QQ(static_cast<long>(y))) / fam.norm_sq(n);
    }
    return acc;
}

bool leading_coeff_check(unsigned N) {
    check_even(N, "leading_coeff_check");
    Poly interp = lagrange_interpolant(N);
    const unsigned m = (N - 2) / 2;
    QQ expected = combinat::catalan(m) / QQ(combinat::factorial(N - 1));
    if (m % 2 == 1) expected = -expected;
    return interp.degree() == static_cast<int>(N) - 1 && interp.coeff(N - 1) == expected;
}

IdentityReport verify_triple_equality(unsigned N_max, Exec exec) {
    IdentityReport report{"triple_equality", "even N <= " + std::to_string(N_max)};
    for (unsigned N = 2; N <= N_max; N += 2) {
        KrawtchoukFamily fam(N, one_half());
        const Poly direct = build_direct(fam).polynomial;
        const Poly closed = build_closed_form(N, exec).polynomial;
        const Poly interp = lagrange_interpolant(N);
        if (!(direct == closed && closed == interp)) {
            report.all_passed = false;
            report.first_failure = std::vector<long long>{static_cast<long long>(N)};
            break;
        }
    }
    return report;
}

IdentityReport verify_interpolation(unsigned N_max, Exec exec) {
    IdentityReport report{"interpolation", "even N <= " + std::to_string(N_max)};
    for (unsigned N = 2; N <= N_max && report.all_passed; N += 2) {
        const Poly F = build_closed_form(N, exec).polynomial;
        for (const auto& [m, s] : SignPointSet::make(N).points) {
            if (F.eval(QQ(static_cast<long>(m))) != s) {
                report.all_passed = false;
                report.first_failure = std::vector<long long>{static_cast<long long>(N), m};
                break;
            }
        }
    }
    return report;
}

IdentityReport verify_p_independence(unsigned N_max, std::span<const QQ> ps) {
    IdentityReport report{"p_independence", "even N <= " + std::to_string(N_max)};
    for (unsigned N = 2; N <= N_max && report.all_passed; N += 2) {
        Poly reference;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            Poly built = build_direct(KrawtchoukFamily(N, ps[i])).polynomial;
            if (i == 0) {
                reference = std::move(built);
            } else if (!(built == reference)) {
                report.all_passed = false;
                report.first_failure = std::vector<long long>{static_cast<long long>(N), static_cast<long long>(i)};
                break;
            }
        }
    }
    return report;
}

IdentityReport verify_cd_delta(unsigned N_max, std::span<const QQ> ps) {
    IdentityReport report{"cd_delta", "even N <= " + std::to_string(N_max)};
    for (unsigned N = 2; N <= N_max && report.all_passed; N += 2) {
        const long long half = N / 2;
        for (std::size_t i = 0; i < ps.size() && report.all_passed; ++i) {
            KrawtchoukFamily fam(N, ps[i]);
            for (long long x = -half; x <= half && report.all_passed; ++x) {
                for (long long y = -half; y <= half; ++y) {
                    QQ lhs = cd_kernel(fam, x, y) * weight(fam, static_cast<unsigned>(y + half));
                    if (lhs != QQ(x == y ? 1 : 0)) {
                        report.all_passed = false;
                        report.first_failure = std::vector<long long>{
                            static_cast<long long>(N), static_cast<long long>(i), x, y};
                        break;
                    }
                }
            }
        }
    }
    return report;
}

IdentityReport verify_leading_coeff(unsigned N_max) {
    IdentityReport report{"leading_coeff", "even N <= " + std::to_string(N_max)};
    for (unsigned N = 2; N <= N_max; N += 2) {
        if (!leading_coeff_check(N)) {
            report.all_passed = false;
            report.first_failure = std::vector<long long>{static_cast<long long>(N)};
            break;
        }
    }
    return report;
}

}  // namespace kg
