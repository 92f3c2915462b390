#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "kg/combinat.hpp"
#include "oracle.hpp"

using namespace kg;
namespace cb = kg::combinat;

TEST_CASE("integer binomial basics") {
    CHECK(cb::binomial(QQ(4), 2) == QQ(6));
    CHECK(cb::binomial(QQ(3), 5) == QQ(0));
    CHECK(cb::binom(10, 0) == 1);
    CHECK(cb::binom(10, 10) == 1);
    CHECK(cb::binom(10, 11) == 0);
    CHECK(cb::binom(10, -1) == 0);
    CHECK_THROWS_AS(cb::binom(-1, 0), std::invalid_argument);
}

TEST_CASE("rational binomial") {
    CHECK(cb::binomial(make_ratio(1, 2), 2) == make_ratio(-1, 8));
    CHECK(cb::binomial(make_ratio(-1, 2), 1) == make_ratio(-1, 2));
    CHECK(cb::binomial(QQ(7), 0) == QQ(1));
}

TEST_CASE("binom agrees with Pascal triangle (audit oracle)") {
    for (unsigned n = 0; n <= 40; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(cb::binom(n, k) == oracle::pascal_binom(n, k));
        }
    }
}

TEST_CASE("binom_row matches binom") {
    auto row = cb::binom_row(25);
    for (unsigned k = 0; k <= 25; ++k) CHECK((*row)[k] == cb::binom(25, k));
}

TEST_CASE("catalan numbers") {
    CHECK(cb::catalan(0) == QQ(1));
    CHECK(cb::catalan(3) == QQ(5));
    CHECK(cb::catalan(5) == QQ(42));
    CHECK(cb::catalan(3) == cb::binomial(QQ(6), 3) / 4);
}

TEST_CASE("super catalan numbers") {
    CHECK(cb::super_catalan(0, 0) == QQ(1));
    CHECK(cb::super_catalan(1, 1) == QQ(2));
    CHECK(cb::super_catalan(3, 5) == cb::super_catalan(5, 3));
}

TEST_CASE("super catalan integrality up to 50") {
    for (unsigned p = 0; p <= 50; ++p) {
        for (unsigned q = 0; q <= 50; ++q) {
            QQ s = cb::super_catalan(p, q);
            CAPTURE(p);
            CAPTURE(q);
            REQUIRE(s.get_den() == 1);
            REQUIRE(s > 0);
        }
    }
}

TEST_CASE("t numbers") {
    CHECK(cb::t_number(1, 0) == QQ(3));
    CHECK(cb::t_number(1, 1) == QQ(2));
    CHECK(cb::t_number(0, 0) == QQ(1));
}

TEST_CASE("t number relates to super catalan by (2p+1)/(p+q+1)") {
    for (unsigned p = 0; p <= 30; ++p) {
        for (unsigned q = 0; q <= 30; ++q) {
            QQ expected = make_ratio(2L * p + 1, static_cast<long>(p + q + 1)) *
                          cb::super_catalan(p, q);
            REQUIRE(cb::t_number(p, q) == expected);
        }
    }
}

TEST_CASE("forward difference examples") {
    std::vector<QQ> constant{QQ(1), QQ(1), QQ(1)};
    CHECK(cb::forward_difference(constant, 2) == QQ(0));
    std::vector<QQ> squares{QQ(0), QQ(1), QQ(4), QQ(9)};
    CHECK(cb::forward_difference(squares, 2) == QQ(2));
    std::vector<QQ> single{QQ(5)};
    CHECK(cb::forward_difference(single, 0) == QQ(5));
    CHECK_THROWS_AS(cb::forward_difference(single, 1), std::invalid_argument);
}

TEST_CASE("forward difference equals iterated differencing") {
    oracle::Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        unsigned n = static_cast<unsigned>(rng.integer(0, 10));
        std::vector<QQ> values;
        for (unsigned i = 0; i <= n + 2; ++i) values.push_back(rng.rational());
        CHECK(cb::forward_difference(values, n) ==
              oracle::iterated_forward_difference(values, n));
    }
}

TEST_CASE("binomial times k! is the falling factorial") {
    oracle::Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        QQ a = rng.rational();
        unsigned k = static_cast<unsigned>(rng.integer(0, 30));
        CHECK(cb::binomial(a, k) * QQ(cb::factorial(k)) == oracle::falling_factorial(a, k));
    }
}

TEST_CASE("Pascal identity for rational upper argument") {
    oracle::Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        QQ a = rng.rational();
        unsigned k = static_cast<unsigned>(rng.integer(1, 25));
        CHECK(cb::binomial(a, k) == cb::binomial(a - 1, k - 1) + cb::binomial(a - 1, k));
    }
}

TEST_CASE("memo tables are safe under concurrent access") {
    std::vector<std::thread> workers;
    std::vector<ZZ> results(4);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([t, &results] {
            ZZ acc(0);
            for (unsigned n = 1; n <= 120; ++n) {
                acc += cb::binom(n + static_cast<unsigned>(t % 2), n / 2);
                acc += (*cb::binom_row(n))[n / 3];
            }
            results[static_cast<std::size_t>(t)] = acc;
        });
    }
    for (auto& w : workers) w.join();
    CHECK(results[0] == results[2]);
    CHECK(results[1] == results[3]);

    ZZ serial(0);
    for (unsigned n = 1; n <= 120; ++n) {
        serial += cb::binom(n, n / 2);
        serial += (*cb::binom_row(n))[n / 3];
    }
    CHECK(results[0] == serial);
}

TEST_CASE("corruption hook flips binom(6,3) and restores") {
    CHECK(cb::binom(6, 3) == 20);
    cb::set_binomial_corruption(true);
    CHECK(cb::binom(6, 3) == 21);
    CHECK((*cb::binom_row(6))[3] == 21);
    cb::set_binomial_corruption(false);
    CHECK(cb::binom(6, 3) == 20);
    CHECK((*cb::binom_row(6))[3] == 20);
}
