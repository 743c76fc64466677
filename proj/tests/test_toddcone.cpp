#include "gdsum/bernoulli.hpp"
#include "gdsum/contfrac.hpp"
#include "gdsum/toddcone.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gdsum;

namespace {
Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Exact coefficient of x^a y^b in the product of the two one-variable Todd series.
Rational trivial_cone_coeff(unsigned a, unsigned b) {
    auto one = [](unsigned i) {
        const Rational v = bernoulli_number(i) / Rational(factorial(i));
        return (i % 2 == 0) ? v : -v;
    };
    return one(a) * one(b);
}
}  // namespace

TEST_CASE("todd_coefficient examples") {
    CHECK(todd_coefficient(1, 1, 2, 3) == R(7, 12));
    CHECK(todd_coefficient(1, 2, 1, 3) == R(3, 4));
    CHECK(todd_coefficient(1, 1, 0, 1) == R(1, 4));
    CHECK(todd_coefficient(0, 0, 2, 5) == R(1));
}

TEST_CASE("trivial cone is a product of one-variable series") {
    for (unsigned a = 0; a <= 6; ++a) {
        for (unsigned b = 0; b <= 6; ++b) {
            CHECK(todd_coefficient(a, b, 0, 1) / Rational(factorial(a) * factorial(b)) == trivial_cone_coeff(a, b));
        }
    }
}

TEST_CASE("odd total degree with both indices >= 2 vanishes") {
    for (auto [p, q] : oracle::random_coprime_pairs(60, 200, 3)) {
        CHECK(todd_coefficient(2, 3, p, q).is_zero());
        CHECK(todd_coefficient(4, 3, p, q).is_zero());
    }
}

TEST_CASE("mk_forms examples and recurrence") {
    const auto f23 = mk_forms(2, 3);
    const std::vector<LinearForm> e23{{0, 3}, {1, 2}, {-1, 1}, {3, 0}};
    CHECK(f23 == e23);
    const std::vector<LinearForm> e12{{0, 2}, {1, 1}, {-2, 0}};
    CHECK(mk_forms(1, 2) == e12);

    for (auto [p, q] : oracle::random_coprime_pairs(200, 5000, 17)) {
        const auto M = mk_forms(p, q);
        const auto cf = cf_expand(p, q);
        const int n = cf.length();
        CHECK(M.front() == LinearForm{0, q});
        CHECK(M.back() == LinearForm{(n % 2 == 0 ? 1 : -1) * BigInt(q), 0});
        for (int k = 1; k <= n - 1; ++k) {
            const auto& prev = M[static_cast<std::size_t>(k)];
            const auto& cur = M[static_cast<std::size_t>(k + 1)];
            const auto& next = M[static_cast<std::size_t>(k + 2)];
            CHECK(prev.m - next.m == cf.a(k + 1) * cur.m);
            CHECK(prev.l - next.l == cf.a(k + 1) * cur.l);
        }
    }
}

TEST_CASE("homogeneous expansion matches the coefficient relation") {
    const auto h2 = todd_homogeneous(2, 2, 3);
    CHECK(h2.coefficient(1, 1) == R(7, 12));
    CHECK(todd_homogeneous(2, 1, 2).coefficient(1, 1) == todd_coefficient(1, 1, 1, 2));
    auto pairs = oracle::coprime_pairs(25);
    pairs.emplace_back(0, 1);
    for (auto [p, q] : pairs) {
        for (unsigned N = 2; N <= 8; N += 2) {
            const auto h = todd_homogeneous(N, p, q);
            for (unsigned a = 0; a <= N; ++a) {
                const unsigned b = N - a;
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(a);
                CHECK(h.coefficient(a, b) ==
                      todd_coefficient(a, b, p, q) / Rational(factorial(a) * factorial(b)));
            }
        }
    }
    CHECK_THROWS_AS(todd_homogeneous(3, 2, 3), PreconditionError);
}

TEST_CASE("floating evaluation of the character sum agrees") {
    CHECK(todd_numeric_check(2, 3, 4) < 1e-9);
    CHECK(todd_numeric_check(1, 1, 4) < 1e-12);
    CHECK(todd_numeric_check(3, 7, 6) < 1e-9);
    for (auto [p, q] : oracle::coprime_pairs(12)) CHECK(todd_numeric_check(p, q, 6) < 1e-9);
}
