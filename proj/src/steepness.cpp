#include "kg/steepness.hpp"

#include <stdexcept>

#include "kg/combinat.hpp"

namespace kg {

namespace {

void check_even(unsigned N, const char* who) {
    if (N < 2 || N % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": N must be even and >= 2");
    }
}

// Ordered reduction of per-index terms; with exact rationals the sum is the
// same in any order, but keeping index order makes the parallel path an
// exact structural twin of the serial reference.
QQ sum_in_order(const std::vector<QQ>& terms) {
    QQ acc(0);
    for (const QQ& t : terms) acc += t;
    return acc;
}

}  // namespace

QQ steepness_exact(unsigned N, Exec exec) {
    check_even(N, "steepness_exact");
    const unsigned M = N / 2;
    auto row_half = combinat::binom_row(M);
    auto row_full = combinat::binom_row(N);

    // One outer term per even n = 2m:
    //   c(n;N) * sum_{l=0}^{n/2} (-1)^l binom(N/2,l) / (n+1-2l)
    // The explicit QQ return matters: a deduced return type would be a gmp
    // expression template referencing locals.
    auto term = [&](unsigned m) -> QQ {
        QQ c = make_ratio((*row_half)[m], (*row_full)[2 * m]);
        if (m % 2 == 1) c = -c;
        QQ inner(0);
        for (unsigned l = 0; l <= m; ++l) {
            QQ t = make_ratio((*row_half)[l], ZZ(static_cast<long>(2 * m + 1 - 2 * l)));
            if (l % 2 == 0) {
                inner += t;
            } else {
                inner -= t;
            }
        }
        return c * inner;
    };

    const QQ prefactor = QQ(2) * QQ((*row_full)[M]) / QQ(pow2(N));
    if (exec == Exec::Serial) {
        QQ acc(0);
        for (unsigned m = 0; m < M; ++m) acc += term(m);
        return prefactor * acc;
    }
    std::vector<QQ> terms(M);
#pragma omp parallel for schedule(dynamic)
    for (long m = 0; m < static_cast<long>(M); ++m) {
        terms[m] = term(static_cast<unsigned>(m));
    }
    return prefactor * sum_in_order(terms);
}

QQ steepness_s(unsigned M, Exec exec) {
    if (M < 1) throw std::invalid_argument("steepness_s: M must be >= 1");
    const QQ prefactor = QQ(2) * QQ(combinat::binom(2LL * M, M)) / QQ(pow2(2UL * M));
    if (exec == Exec::Serial) {
        QQ acc(0);
        for (unsigned m = 0; m < M; ++m) acc += c_ratio(m, M) * x_sum(m, M);
        return prefactor * acc;
    }
    std::vector<QQ> terms(M);
#pragma omp parallel for schedule(dynamic)
    for (long m = 0; m < static_cast<long>(M); ++m) {
        terms[m] = c_ratio(static_cast<unsigned>(m), M) * x_sum(m, M);
    }
    return prefactor * sum_in_order(terms);
}

QQ steepness_t(unsigned M) {
    if (M < 1) throw std::invalid_argument("steepness_t: M must be >= 1");
    QQ acc(0);
    for (unsigned k = 1; k <= M; ++k) acc += make_ratio(1L, static_cast<long>(M + k));
    return QQ(2) * acc;
}

QQ c_ratio(unsigned m, unsigned M) {
    if (m > M) throw std::out_of_range("c_ratio: need 0 <= m <= M");
    QQ value = make_ratio(combinat::binom(M, m), combinat::binom(2LL * M, 2LL * m));
    return m % 2 == 0 ? value : -value;
}

QQ d_ratio(unsigned m, unsigned M) {
    if (m > M) throw std::out_of_range("d_ratio: need 0 <= m <= M");
    if (m == M) {
        QQ value = make_ratio(1L, static_cast<long>(2 * M + 2));
        return M % 2 == 0 ? value : -value;
    }
    return c_ratio(m, M) * make_ratio(ZZ(2 * M - 2 * m + 1), ZZ(2 * M + 2));
}

QQ x_sum(long long m, unsigned M) {
    if (m < -1) throw std::out_of_range("x_sum: need m >= -1");
    if (m == -1) return QQ(0);
    auto row = combinat::binom_row(M);
    QQ acc(0);
    for (long long l = 0; l <= m; ++l) {
        if (l > M) break;  // binom(M,l) = 0 beyond the row
        QQ t = make_ratio((*row)[static_cast<std::size_t>(l)], ZZ(static_cast<long>(2 * m + 1 - 2 * l)));
        if (l % 2 == 0) {
            acc += t;
        } else {
            acc -= t;
        }
    }
    return acc;
}

QQ x_sum_closed(unsigned M) {
    QQ value = QQ(1) - make_ratio(pow2(2UL * M + 1), combinat::binom(2LL * M + 1, M + 1));
    return M % 2 == 0 ? -value : value;  // (-1)^(M+1)
}

namespace {

// Shared sweep scaffolding: evaluate a per-index predicate over 0..count-1
// (serial loop, or an OpenMP loop plus an ordered scan), report the first
// index that fails, translated to a tuple by `describe`.
template <typename Check, typename Describe>
IdentityReport run_sweep(std::string name, std::string range, long long count, Exec exec,
                         Check&& check, Describe&& describe) {
    IdentityReport report{std::move(name), std::move(range)};
    std::vector<char> ok(static_cast<std::size_t>(count), 1);
    if (exec == Exec::Serial) {
        for (long long i = 0; i < count; ++i) ok[static_cast<std::size_t>(i)] = check(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i) ok[static_cast<std::size_t>(i)] = check(i);
    }
    for (long long i = 0; i < count; ++i) {
        if (!ok[static_cast<std::size_t>(i)]) {
            report.all_passed = false;
            report.first_failure = describe(i);
            break;
        }
    }
    return report;
}

}  // namespace

IdentityReport verify_st_equality(unsigned M_max, Exec exec) {
    if (M_max < 1) throw std::invalid_argument("verify_st_equality: M_max must be >= 1");
    return run_sweep(
        "st_equality", "1 <= M <= " + std::to_string(M_max), M_max, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            return steepness_s(M, Exec::Serial) == steepness_t(M);
        },
        [](long long i) { return std::vector<long long>{i + 1}; });
}

IdentityReport verify_cd_ratio_identity(unsigned M_max, Exec exec) {
    // Flatten the triangle {(M, m) : 1 <= M <= M_max, 0 <= m <= M-1} by M.
    return run_sweep(
        "cd_ratio", "0 <= m < M <= " + std::to_string(M_max), M_max, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            const QQ scale = make_ratio(ZZ(2 * M + 1), ZZ(2 * M + 2));
            for (unsigned m = 0; m < M; ++m) {
                if (scale * c_ratio(m, M + 1) != d_ratio(m, M)) return false;
            }
            return true;
        },
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            const QQ scale = make_ratio(ZZ(2 * M + 1), ZZ(2 * M + 2));
            for (unsigned m = 0; m < M; ++m) {
                if (scale * c_ratio(m, M + 1) != d_ratio(m, M)) {
                    return std::vector<long long>{static_cast<long long>(M), m};
                }
            }
            return std::vector<long long>{static_cast<long long>(M)};
        });
}

IdentityReport verify_cd_difference_identity(unsigned M_max, Exec exec) {
    return run_sweep(
        "cd_difference", "0 <= m < M <= " + std::to_string(M_max), M_max, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            for (unsigned m = 0; m < M; ++m) {
                if (d_ratio(m, M) - d_ratio(m + 1, M) != c_ratio(m, M)) return false;
            }
            return true;
        },
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            for (unsigned m = 0; m < M; ++m) {
                if (d_ratio(m, M) - d_ratio(m + 1, M) != c_ratio(m, M)) {
                    return std::vector<long long>{static_cast<long long>(M), m};
                }
            }
            return std::vector<long long>{static_cast<long long>(M)};
        });
}

IdentityReport verify_x_recurrence(unsigned M_max, Exec exec) {
    return run_sweep(
        "x_recurrence", "0 <= m <= M <= " + std::to_string(M_max), M_max, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            for (long long m = 0; m <= M; ++m) {
                if (x_sum(m, M + 1) != x_sum(m, M) - x_sum(m - 1, M)) return false;
            }
            return true;
        },
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            for (long long m = 0; m <= M; ++m) {
                if (x_sum(m, M + 1) != x_sum(m, M) - x_sum(m - 1, M)) {
                    return std::vector<long long>{static_cast<long long>(M), m};
                }
            }
            return std::vector<long long>{static_cast<long long>(M)};
        });
}

IdentityReport verify_x_closed_form(unsigned M_max, Exec exec) {
    return run_sweep(
        "x_closed_form", "0 <= M <= " + std::to_string(M_max), M_max + 1, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i);
            return x_sum(M, M + 1) == x_sum_closed(M);
        },
        [](long long i) { return std::vector<long long>{i}; });
}

IdentityReport verify_wallis_sum(unsigned M_max, Exec exec) {
    return run_sweep(
        "wallis_sum", "0 <= M <= " + std::to_string(M_max), M_max + 1, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i);
            auto row = combinat::binom_row(M);
            QQ lhs(0);
            for (unsigned k = 0; k <= M; ++k) {
                QQ t = make_ratio((*row)[k], ZZ(2 * k + 1));
                if (k % 2 == 0) {
                    lhs += t;
                } else {
                    lhs -= t;
                }
            }
            QQ rhs = make_ratio(pow2(2UL * M), ZZ(2 * M + 1) * combinat::binom(2LL * M, M));
            return lhs == rhs;
        },
        [](long long i) { return std::vector<long long>{i}; });
}

namespace {

// Left side of the appendix double sum with upper binomial U = 2p+1 or N-n:
//   sum_{v=0}^{n} (-1)^v binom(n,v) sum_{s=lo-v}^{hi-v} binom(U, s);
// out-of-range binomials vanish.
ZZ appendix_double_sum(unsigned n, unsigned U, long long lo, long long hi) {
    ZZ acc(0);
    for (unsigned v = 0; v <= n; ++v) {
        ZZ inner(0);
        for (long long s = lo - v; s <= hi - static_cast<long long>(v); ++s) {
            inner += combinat::binom(U, s);
        }
        inner *= combinat::binom(n, v);
        if (v % 2 == 0) {
            acc += inner;
        } else {
            acc -= inner;
        }
    }
    return acc;
}

}  // namespace

IdentityReport verify_supercatalan_identity(unsigned p_max, unsigned q_max, Exec exec) {
    const long long cols = q_max + 1;
    return run_sweep(
        "supercatalan", "p <= " + std::to_string(p_max) + ", q <= " + std::to_string(q_max),
        static_cast<long long>(p_max + 1) * cols, exec,
        [cols](long long i) {
            unsigned p = static_cast<unsigned>(i / cols), q = static_cast<unsigned>(i % cols);
            ZZ lhs = appendix_double_sum(2 * q + 1, 2 * p + 1, p + q + 2, 2LL * p + 2 * q + 2);
            QQ rhs = combinat::t_number(p, q);
            if (q % 2 == 0) rhs = -rhs;  // (-1)^(q+1)
            return QQ(lhs) == rhs;
        },
        [cols](long long i) { return std::vector<long long>{i / cols, i % cols}; });
}

IdentityReport verify_appendix_lemma(unsigned N_max, Exec exec) {
    check_even(N_max, "verify_appendix_lemma");
    return run_sweep(
        "appendix_lemma", "even N <= " + std::to_string(N_max) + ", odd n <= N", N_max / 2, exec,
        [](long long i) {
            unsigned N = 2 * (static_cast<unsigned>(i) + 1);
            for (unsigned n = 1; n <= N; n += 2) {
                ZZ lhs = appendix_double_sum(n, N - n, N / 2 + 1, N);
                QQ rhs = combinat::t_number((N - n - 1) / 2, (n - 1) / 2);
                if (((n + 1) / 2) % 2 == 1) rhs = -rhs;
                if (QQ(lhs) != rhs) return false;
            }
            return true;
        },
        [](long long i) {
            unsigned N = 2 * (static_cast<unsigned>(i) + 1);
            for (unsigned n = 1; n <= N; n += 2) {
                ZZ lhs = appendix_double_sum(n, N - n, N / 2 + 1, N);
                QQ rhs = combinat::t_number((N - n - 1) / 2, (n - 1) / 2);
                if (((n + 1) / 2) % 2 == 1) rhs = -rhs;
                if (QQ(lhs) != rhs) {
                    return std::vector<long long>{static_cast<long long>(N), n};
                }
            }
            return std::vector<long long>{static_cast<long long>(N)};
        });
}

IdentityReport verify_steepness_consequence(unsigned M_max, Exec exec) {
    if (M_max < 1) throw std::invalid_argument("verify_steepness_consequence: M_max must be >= 1");
    return run_sweep(
        "steepness_consequence", "1 <= M <= " + std::to_string(M_max), M_max, exec,
        [](long long i) {
            unsigned M = static_cast<unsigned>(i) + 1;
            return steepness_exact(2 * M, Exec::Serial) == steepness_t(M);
        },
        [](long long i) { return std::vector<long long>{i + 1}; });
}

}  // namespace kg
