#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kg/combinat.hpp"
#include "kg/krawtchouk.hpp"
#include "oracle.hpp"

using namespace kg;

namespace {
const QQ half = make_ratio(1, 2);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(KrawtchoukFamily(3, half), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukFamily(0, half), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukFamily(4, QQ(1)), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukFamily(4, QQ(0)), std::invalid_argument);
    KrawtchoukFamily fam(6, make_ratio(1, 3));
    CHECK(fam.q() == make_ratio(2, 3));
    CHECK(fam.p() + fam.q() == 1);
}

TEST_CASE("weight examples") {
    CHECK(weight(KrawtchoukFamily(2, half), 1) == half);
    CHECK(weight(KrawtchoukFamily(2, make_ratio(1, 3)), 0) == make_ratio(4, 9));

    KrawtchoukFamily fam(6, make_ratio(1, 3));
    QQ total(0);
    for (unsigned j = 0; j <= 6; ++j) total += weight(fam, j);
    CHECK(total == 1);
    CHECK_THROWS_AS(weight(fam, 7), std::out_of_range);
}

TEST_CASE("inner product examples") {
    KrawtchoukFamily fam2(2, half);
    Poly one{QQ(1)};
    CHECK(inner_product(fam2, one, one) == 1);
    CHECK(inner_product(fam2, Poly::x(), one) == 0);
    CHECK(inner_product(fam2, Poly::x(), Poly::x()) == half);

    KrawtchoukFamily fam6(6, make_ratio(1, 3));
    CHECK(inner_product(fam6, one, one) == 1);
}

TEST_CASE("unshifted K_1 is x - pN") {
    for (unsigned N : {2u, 4u, 7u, 10u}) {
        for (QQ p : {half, make_ratio(1, 3), make_ratio(3, 5)}) {
            Poly expected{-p * QQ(static_cast<long>(N)), QQ(1)};
            CHECK(krawtchouk_poly(1, N, p) == expected);
        }
    }
    CHECK(krawtchouk_poly(0, 5, half) == Poly{QQ(1)});
    CHECK_THROWS_AS(krawtchouk_poly(5, 4, half), std::out_of_range);
}

TEST_CASE("unshifted orthogonality N=4 p=1/3") {
    // direct summation over the grid [0, N]
    const unsigned N = 4;
    const QQ p = make_ratio(1, 3), q = QQ(1) - p;
    Poly k1 = krawtchouk_poly(1, N, p);
    Poly k2 = krawtchouk_poly(2, N, p);
    QQ acc(0);
    for (unsigned j = 0; j <= N; ++j) {
        QQ w = QQ(combinat::binom(N, j)) * qq_pow(p, j) * qq_pow(q, N - j);
        acc += k1.eval(QQ(j)) * k2.eval(QQ(j)) * w;
    }
    CHECK(acc == 0);
}

TEST_CASE("shifted polynomials, small cases") {
    KrawtchoukFamily fam4(4, half);
    CHECK(shifted_k(fam4, 1) == Poly::x());
    CHECK(shifted_k(fam4, 2) == Poly{make_ratio(-1, 2), QQ(0), half});
    CHECK(shifted_k(fam4, 3) == Poly{QQ(0), make_ratio(-5, 12), QQ(0), make_ratio(1, 6)});
    CHECK_THROWS_AS(shifted_k(fam4, 5), std::out_of_range);

    KrawtchoukFamily fam_third(4, make_ratio(1, 3));
    CHECK(shifted_k(fam_third, 1) == Poly{make_ratio(2, 3), QQ(1)});
}

TEST_CASE("shifted construction matches substituting x + N/2 into K_n") {
    for (unsigned N : {2u, 4u, 8u, 12u}) {
        for (QQ p : {half, make_ratio(2, 5)}) {
            KrawtchoukFamily fam(N, p);
            for (unsigned n = 0; n <= N; ++n) {
                Poly via_subst =
                    krawtchouk_poly(n, N, p).taylor_shift(make_ratio(static_cast<long>(N), 2));
                CHECK(shifted_k(fam, n) == via_subst);
            }
        }
    }
}

TEST_CASE("shifted construction matches the three-term recurrence oracle") {
    for (unsigned N : {2u, 6u, 14u, 20u}) {
        auto expected = oracle::recurrence_family(N, N);
        KrawtchoukFamily fam(N, half);
        for (unsigned n = 0; n <= N; ++n) {
            CAPTURE(N);
            CAPTURE(n);
            REQUIRE(shifted_k(fam, n) == expected[n]);
        }
    }
}

TEST_CASE("bulk family construction matches cached path, serial and parallel") {
    const unsigned N = 16;
    KrawtchoukFamily fam(N, make_ratio(2, 5));
    auto serial = shifted_family(N, make_ratio(2, 5), N, Exec::Serial);
    auto parallel = shifted_family(N, make_ratio(2, 5), N, Exec::Parallel);
    REQUIRE(serial.size() == N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        CHECK(serial[n] == parallel[n]);
        CHECK(serial[n] == shifted_k(fam, n));
    }
}

TEST_CASE("orthogonality of the shifted family") {
    for (unsigned N : {2u, 8u, 14u, 20u}) {
        for (QQ p : {half, make_ratio(1, 3), make_ratio(3, 5)}) {
            KrawtchoukFamily fam(N, p);
            for (unsigned i = 0; i <= N; ++i) {
                for (unsigned j = 0; j < i; ++j) {
                    CAPTURE(N);
                    CAPTURE(i);
                    CAPTURE(j);
                    REQUIRE(inner_product(fam, shifted_k(fam, i), shifted_k(fam, j)) == 0);
                }
            }
        }
    }
}

TEST_CASE("norm closed form at p=1/2 vs inner product, N <= 40") {
    for (unsigned N = 2; N <= 40; N += 2) {
        KrawtchoukFamily fam(N, half);
        for (unsigned n = 0; n <= N; ++n) {
            QQ closed = norm_sq(fam, n);
            CHECK(closed == make_ratio(combinat::binom(N, n), pow2(2UL * n)));
            CHECK(closed == inner_product(fam, shifted_k(fam, n), shifted_k(fam, n)));
        }
    }
}

TEST_CASE("norm examples") {
    CHECK(norm_sq(KrawtchoukFamily(2, half), 1) == half);
    CHECK(norm_sq(KrawtchoukFamily(4, half), 3) == make_ratio(1, 16));
    CHECK(norm_sq(KrawtchoukFamily(6, make_ratio(1, 3)), 0) == 1);
}

TEST_CASE("values and derivatives at zero") {
    CHECK(k_at_zero(4, 2) == make_ratio(-1, 2));
    CHECK(k_at_zero(8, 3) == 0);
    CHECK(k_at_zero(2, 2) == make_ratio(-1, 4));
    CHECK(k_prime_at_zero(4, 2) == 0);
    CHECK(k_prime_at_zero(4, 1) == 1);
    CHECK(k_prime_at_zero(4, 3) == make_ratio(-5, 12));
    CHECK_THROWS_AS(k_at_zero(4, 5), std::out_of_range);
    CHECK_THROWS_AS(k_prime_at_zero(4, 5), std::out_of_range);

    for (unsigned N = 2; N <= 40; N += 2) {
        KrawtchoukFamily fam(N, half);
        for (unsigned n = 0; n <= N; ++n) {
            CAPTURE(N);
            CAPTURE(n);
            REQUIRE(k_at_zero(N, n) == shifted_k(fam, n).eval(QQ(0)));
            REQUIRE(k_prime_at_zero(N, n) == shifted_k(fam, n).derivative().eval(QQ(0)));
        }
    }
}

TEST_CASE("parity of the shifted family at p=1/2") {
    for (unsigned N : {2u, 6u, 12u}) {
        KrawtchoukFamily fam(N, half);
        for (unsigned n = 0; n <= N; ++n) {
            if (n % 2 == 0) {
                CHECK(shifted_k(fam, n).is_even_function());
            } else {
                CHECK(shifted_k(fam, n).is_odd_function());
            }
        }
    }
}

TEST_CASE("generating function (1-t)^(N/2-x) (1+t)^(N/2+x) produces 2^m k_m") {
    for (unsigned N : {2u, 6u, 12u}) {
        KrawtchoukFamily fam(N, half);
        const QQ hn = make_ratio(static_cast<long>(N), 2);
        // Truncated series in t with polynomial coefficients in x:
        // (1-t)^(N/2-x): coefficient of t^j is (-1)^j binom(N/2-x, j);
        // (1+t)^(N/2+x): coefficient of t^v is binom(N/2+x, v).
        std::vector<Poly> a(N + 1), b(N + 1);
        for (unsigned j = 0; j <= N; ++j) {
            a[j] = binom_poly(hn, -1, j);
            if (j % 2 == 1) a[j] = -a[j];
            b[j] = binom_poly(hn, +1, j);
        }
        for (unsigned m = 0; m <= N; ++m) {
            Poly conv;
            for (unsigned j = 0; j <= m; ++j) conv += a[j] * b[m - j];
            CHECK(conv == shifted_k(fam, m) * QQ(pow2(m)));
        }
    }
}

TEST_CASE("difference identity k_n(x+1;N) - k_n(x;N) = K_{n-1}(x+N/2;N-1)") {
    CHECK(difference_identity_check(4, 1));
    CHECK(difference_identity_check(4, 2));
    CHECK(difference_identity_check(6, 3));
    CHECK_THROWS_AS(difference_identity_check(4, 0), std::out_of_range);
    for (unsigned N = 2; N <= 20; N += 2) {
        for (unsigned n = 1; n <= N; ++n) {
            CAPTURE(N);
            CAPTURE(n);
            REQUIRE(difference_identity_check(N, n));
        }
    }
}

TEST_CASE("hermite polynomials") {
    CHECK(hermite_poly(0) == Poly{QQ(1)});
    CHECK(hermite_poly(1) == Poly{QQ(0), QQ(2)});
    CHECK(hermite_poly(2) == Poly{QQ(-2), QQ(0), QQ(4)});
    CHECK(hermite_poly(3).derivative() == hermite_poly(2) * QQ(6));
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(hermite_poly(n).derivative() == hermite_poly(n - 1) * QQ(2L * n));
    }
}

TEST_CASE("hermite limit error") {
    std::vector<QQ> probe{QQ(0), half, QQ(1)};
    CHECK(hermite_limit_error(100, 0, probe) == 0);
    CHECK(hermite_limit_error(100, 1, probe) == 0);

    std::vector<QQ> samples;
    for (long i = -4; i <= 4; ++i) samples.push_back(make_ratio(i, 4));
    // exact errors for n = 3 over samples i/4 in [-1, 1]
    CHECK(hermite_limit_error(100, 3, samples) == make_ratio(2, 25));
    CHECK(hermite_limit_error(400, 3, samples) == make_ratio(1, 50));
    CHECK(hermite_limit_error(1600, 3, samples) == make_ratio(1, 200));

    QQ e1 = hermite_limit_error(100, 3, samples);
    QQ e2 = hermite_limit_error(400, 3, samples);
    QQ e3 = hermite_limit_error(1600, 3, samples);
    CHECK(e1 > e2);
    CHECK(e2 > e3);
}
