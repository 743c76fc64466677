#include "gdsum/bernoulli.hpp"
#include "gdsum/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace gdsum;

namespace {
Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("rational is canonical and serializes as num/den") {
    CHECK(R(6, -4).str() == "-3/2");
    CHECK(R(10, 5).str() == "2");
    CHECK(R(0, 7).str() == "0");
    CHECK(R(-691, 2730).den() == 2730);
    CHECK(Rational::parse("-691/2730") == R(-691, 2730));
    CHECK(Rational::parse("12") == R(12));
    CHECK(Rational::parse("4/-6") == R(-2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
}

TEST_CASE("floor, frac and decimal rendering") {
    CHECK(R(-2, 3).floor() == -1);
    CHECK(R(-2, 3).frac() == R(1, 3));
    CHECK(R(7, 2).frac() == R(1, 2));
    CHECK(R(-3).frac() == R(0));
    CHECK(R(1, 3).decimal(12) == "0.333333333333");
    CHECK(R(-2, 3).decimal(4) == "-0.6667");
    CHECK(R(5).decimal(2) == "5.00");
}

TEST_CASE("bernoulli_number examples") {
    CHECK(bernoulli_number(0) == R(1));
    CHECK(bernoulli_number(1) == R(-1, 2));
    CHECK(bernoulli_number(2) == R(1, 6));
    CHECK(bernoulli_number(12) == R(-691, 2730));
    for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli_number(n).is_zero());
}

TEST_CASE("bernoulli_number agrees with the Akiyama-Tanigawa oracle") {
    for (unsigned n = 0; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(bernoulli_number(n) == oracle::akiyama_tanigawa(n));
    }
}

TEST_CASE("defining recurrence holds") {
    for (unsigned n = 1; n <= 30; ++n) {
        Rational acc;
        for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli_number(k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("periodic_bernoulli examples") {
    CHECK(periodic_bernoulli(1, R(0)) == R(0));
    CHECK(periodic_bernoulli(1, R(1, 3)) == R(-1, 6));
    CHECK(periodic_bernoulli(2, R(1, 2)) == R(-1, 12));
    CHECK(periodic_bernoulli(1, R(5)) == R(0));
    CHECK(periodic_bernoulli(2, R(0)) == R(1, 6));
}

TEST_CASE("periodic_bernoulli matches double-sum polynomial oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 37);
    for (int t = 0; t < 200; ++t) {
        const Rational x = R(num(rng), den(rng));
        for (unsigned i = 1; i <= 8; ++i) {
            CHECK(periodic_bernoulli(i, x) == oracle::periodic_b(i, x));
        }
    }
}

TEST_CASE("periodicity and reflection") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-500, 500), den(2, 41), shift(-5, 5);
    for (int t = 0; t < 300; ++t) {
        const Rational x = R(num(rng), den(rng));
        const Rational m = R(shift(rng));
        for (unsigned i = 1; i <= 9; ++i) {
            CHECK(periodic_bernoulli(i, x + m) == periodic_bernoulli(i, x));
            if (!x.is_integer()) {
                const Rational sign = (i % 2 == 0) ? R(1) : R(-1);
                CHECK(periodic_bernoulli(i, -x) == sign * periodic_bernoulli(i, x));
            }
        }
    }
}

TEST_CASE("constant term of B_n(x) is B_n except the sawtooth at n = 1") {
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(bernoulli_polynomial(n, R(0)) == bernoulli_number(n));
        if (n != 1) CHECK(periodic_bernoulli(n == 0 ? 0 : n, R(0)) == bernoulli_number(n));
    }
    CHECK(periodic_bernoulli(1, R(0)) == R(0));
}

TEST_CASE("reduced_bernoulli and helpers") {
    auto [a6, b6] = reduced_bernoulli(6);
    CHECK(a6 == 1);
    CHECK(b6 == 42);
    auto [a4, b4] = reduced_bernoulli(4);
    CHECK(a4 == -1);
    CHECK(b4 == 30);
    CHECK_THROWS_AS(reduced_bernoulli(5), PreconditionError);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 6) == 0);
    CHECK(factorial(10) == 3628800);
    CHECK(lcm(BigInt(4), BigInt(6)) == 12);
}

TEST_CASE("cache is safe under concurrent readers") {
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (unsigned t = 0; t < results.size(); ++t) {
        workers.emplace_back([t, &results] { results[t] = bernoulli_number(60 + 2 * t); });
    }
    for (auto& w : workers) w.join();
    for (unsigned t = 0; t < results.size(); ++t) CHECK(results[t] == oracle::akiyama_tanigawa(60 + 2 * t));
}
