#include "gdsum/bernoulli.hpp"
#include "gdsum/dedekind.hpp"
#include "gdsum/equidist.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

using namespace gdsum;

namespace {
Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

std::complex<double> e(const Rational& t) {
    const double a = 2.0 * std::numbers::pi * t.frac().to_double();
    return {std::cos(a), std::sin(a)};
}

// Brute-force Weyl average straight from s_direct.
std::complex<double> weyl_naive(long m1, long m2, unsigned i, unsigned j, long x) {
    const NormConstants nc = norm_constants(i, j);
    std::complex<double> acc = 0;
    long count = 0;
    for (auto [p, q] : oracle::coprime_pairs(x)) {
        const Rational y = (Rational(nc.R) * pow(R(q), nc.N - 2) * s_direct(i, j, p, q)).frac();
        acc += e(Rational(m1) * R(p, q) + Rational(m2) * y);
        ++count;
    }
    return acc / static_cast<double>(count);
}

// Naive K: powers by repeated multiplication, phase from the double value of F(x)/q.
std::complex<double> kloosterman_naive(const LaurentExponent& f, long q) {
    std::complex<double> acc = 0;
    for (long x = 0; x < q; ++x) {
        if (std::gcd(x, q) != 1) continue;
        long xinv = 1;
        while ((xinv * x) % q != 1 % q) ++xinv;
        long long v = 0;
        for (auto [c, ex] : f.terms) {
            const long base = ex >= 0 ? x : xinv;
            long long pw = 1 % q;
            for (int k = 0; k < std::abs(ex); ++k) pw = pw * base % q;
            v = (v + (c % q + q) % q * pw) % q;
        }
        const double a = 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(q);
        acc += std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}
}  // namespace

TEST_CASE("graph_point examples") {
    const GraphPoint a = graph_point(1, 1, 2, 3);
    CHECK(a.x == R(2, 3));
    CHECK(a.y == R(1, 3));
    const GraphPoint b = graph_point(1, 1, 1, 2);
    CHECK(b.x == R(1, 2));
    CHECK(b.y == R(0));
}

TEST_CASE("graph_point matches the certificate for (1,3)") {
    const NormConstants nc = norm_constants(1, 3);
    for (auto [p, q] : oracle::coprime_pairs(60)) {
        const GraphPoint gp = graph_point(1, 3, p, q);
        const long pinv = mod_inverse(p, q).get_si();
        const Rational cert = Rational(nc.alpha * nc.r * (BigInt(pinv) * 3 + pow(BigInt(p), 3))) / R(q);
        CHECK(gp.y == cert.frac());
        CHECK(gp.y.sign() >= 0);
        CHECK(gp.y < R(1));
    }
}

TEST_CASE("graph_point rejects bad input") {
    CHECK_THROWS_AS(graph_point(1, 1, 2, 4), PreconditionError);
    CHECK_THROWS_AS(graph_point(1, 2, 1, 3), PreconditionError);
    CHECK_THROWS_AS(graph_point(1, 1, 3, 3), PreconditionError);
    CHECK_THROWS_AS(graph_point(1, 1, 0, 3), PreconditionError);
}

TEST_CASE("certificate residue equals the fractional certificate") {
    for (unsigned N : {2U, 4U, 6U}) {
        for (unsigned i = 1; i < N; ++i) {
            for (auto [p, q] : oracle::random_coprime_pairs(80, 2000, N * 10 + i)) {
                const Rational c = fractional_certificate(i, N - i, p, q).frac();
                CHECK(Rational(BigInt(certificate_residue(i, N - i, p, q)), BigInt(q)) == c);
            }
        }
    }
}

TEST_CASE("exp_sum_K examples") {
    const LaurentExponent lin{{{1, 1}}};
    for (long P : {2L, 3L, 5L, 7L, 101L, 997L}) {
        const auto k = exp_sum_K(lin, P);
        CHECK(k.real() == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(k.imag()) < 1e-9);
    }
    const LaurentExponent kl{{{1, 1}, {1, -1}}};
    const auto k5 = exp_sum_K(kl, 5);
    CHECK(k5.real() == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(std::abs(k5.imag()) < 1e-12);
    CHECK(exp_sum_K(kl, 1) == std::complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(exp_sum_K(kl, 0), PreconditionError);
}

TEST_CASE("exp_sum_K agrees with a naive evaluation") {
    const std::vector<LaurentExponent> fs = {
        LaurentExponent::for_graph(1, 1, 1, 1), LaurentExponent::for_graph(2, 1, 1, 3),
        LaurentExponent::for_graph(0, 1, 2, 2), LaurentExponent{{{3, 2}, {-5, -3}}}};
    std::vector<long> qs = {1, 2, 9, 30, 97, 360, 1001, 4096, 9973, 10000};
    for (const auto& f : fs) {
        for (long q : qs) {
            CHECK(std::abs(exp_sum_K(f, q) - kloosterman_naive(f, q)) < 1e-9);
        }
    }
}

TEST_CASE("LaurentExponent normalization") {
    LaurentExponent f{{{2, 1}, {3, -2}, {-2, 1}, {0, 5}}};
    f.normalize();
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0] == std::pair<std::int64_t, int>{3, -2});
    // For (1,1) the x terms merge: m1 x + m2 alpha r (x^{-1} + x).
    const NormConstants nc = norm_constants(1, 1);
    const long ar = BigInt(nc.alpha * nc.r).get_si();
    const LaurentExponent g = LaurentExponent::for_graph(1, 1, 1, 1);
    REQUIRE(g.terms.size() == 2);
    CHECK(g.terms[0] == std::pair<std::int64_t, int>{ar, -1});
    CHECK(g.terms[1] == std::pair<std::int64_t, int>{1 + ar, 1});
}

TEST_CASE("weyl_sum against direct enumeration") {
    long pairs = 0;
    for (long q = 2; q <= 10; ++q) pairs += oracle::phi(q);
    CHECK(pairs == 31);
    for (auto [m1, m2] : std::vector<std::pair<long, long>>{{1, 1}, {1, 0}, {0, 1}, {2, 1}, {-3, 2}}) {
        for (auto [i, j] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 3}, {2, 2}, {3, 3}}) {
            CHECK(std::abs(weyl_sum(m1, m2, i, j, 10) - weyl_naive(m1, m2, i, j, 10)) < 1e-12);
        }
    }
    CHECK(std::abs(weyl_sum(1, 1, 1, 3, 80) - weyl_naive(1, 1, 1, 3, 80)) < 1e-12);
}

TEST_CASE("weyl_sum with m = (1,0) is a sum of Mertens values") {
    // sum_{p coprime to q} e(p/q) = mu(q), so the numerator is M(x) - 1.
    const long x = 500;
    std::vector<int> mu(x + 1, 1);
    std::vector<bool> comp(x + 1, false);
    for (long k = 2; k <= x; ++k) {
        if (comp[k]) continue;
        for (long m = k; m <= x; m += k) {
            if (m > k) comp[m] = true;
            mu[m] = -mu[m];
        }
        for (long m = k * k; m <= x; m += k * k) mu[m] = 0;
    }
    long mertens = 0, pairs = 0;
    for (long q = 2; q <= x; ++q) {
        mertens += mu[q];
        pairs += oracle::phi(q);
    }
    const auto w = weyl_sum(1, 0, 2, 2, x);
    CHECK(w.real() == doctest::Approx(static_cast<double>(mertens) / pairs).epsilon(1e-12));
    CHECK(std::abs(w.imag()) < 1e-12);
}

TEST_CASE("weyl_sums does not depend on the worker count") {
    const std::vector<std::int64_t> cps = {37, 200, 401};
    const auto one = weyl_sums(2, 1, 1, 3, cps, 1);
    const auto three = weyl_sums(2, 1, 1, 3, cps, 3);
    const auto eight = weyl_sums(2, 1, 1, 3, {401, 37, 200}, 8);
    REQUIRE(one.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(one[k].x == cps[k]);
        CHECK(one[k].value == three[k].value);
        CHECK(one[k].value == eight[k].value);
        CHECK(one[k].pairs == eight[k].pairs);
    }
    CHECK_THROWS_AS(weyl_sum(0, 0, 1, 1, 10), PreconditionError);
    CHECK_THROWS_AS(weyl_sum(1, 0, 1, 2, 10), PreconditionError);
    CHECK_THROWS_AS(weyl_sums(1, 0, 1, 1, {1}), PreconditionError);
}

TEST_CASE("weyl sums shrink with x") {
    // Statistical trend: small at 3000 and decreasing in at least two of three steps.
    for (auto [m1, m2] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
        for (auto [i, j] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 3}, {2, 2}}) {
            const auto cps = weyl_sums(m1, m2, i, j, {250, 500, 1500, 3000});
            CHECK(std::abs(cps.back().value) < 0.1);
            int drops = 0;
            for (std::size_t k = 0; k + 1 < cps.size(); ++k) {
                drops += std::abs(cps[k + 1].value) < std::abs(cps[k].value) ? 1 : 0;
            }
            CHECK(drops >= 2);
        }
    }
}

TEST_CASE("pole orders") {
    CHECK(weil_pole_orders(1, 0, 1, 1) == std::pair<unsigned, unsigned>{0, 1});
    CHECK(weil_pole_orders(0, 1, 1, 1) == std::pair<unsigned, unsigned>{1, 1});
    CHECK(weil_pole_orders(1, 1, 1, 3) == std::pair<unsigned, unsigned>{1, 3});
    CHECK(weil_pole_orders(2, 1, 2, 2) == std::pair<unsigned, unsigned>{2, 2});
    // x-coefficient cancels: m1 = -m2 alpha r C(N-1,1).
    const NormConstants nc = norm_constants(3, 1);
    const long c = BigInt(nc.alpha * nc.r * 3).get_si();
    CHECK(weil_pole_orders(-c, 1, 3, 1) == std::pair<unsigned, unsigned>{3, 0});
    CHECK(weil_pole_orders(1 - c, 1, 3, 1) == std::pair<unsigned, unsigned>{3, 1});
}

TEST_CASE("Weil ratio examples") {
    const WeilReport kl = weil_check(0, 1, 1, 1, 500);
    CHECK(kl.C == 2.0);
    CHECK(kl.pass());
    CHECK(kl.primes == primes_up_to(500).size());

    const WeilReport ram = weil_check(1, 0, 1, 1, 500);
    CHECK(ram.C == 1.0);
    CHECK(ram.max_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ram.worst_prime == 2);

    const WeilReport mixed = weil_check(1, 1, 1, 3, 500);
    CHECK(mixed.C == 4.0);
    CHECK(mixed.pass());
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(2000).size() == 303);
}

TEST_CASE("scan rows") {
    const auto rows = scan(1, 1, 5);
    CHECK(rows.size() == 9);
    const auto two = scan(1, 1, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].q == 2);
    CHECK(two[0].p == 1);
    CHECK(two[0].point.x == R(1, 2));
    CHECK(two[0].point.y == R(0));
    for (const auto& r : scan(1, 3, 3)) {
        CHECK(r.point.y.sign() >= 0);
        CHECK(r.point.y < R(1));
    }
}

TEST_CASE("scan rows agree with the exact graph point and with each other across workers") {
    const auto a = scan(2, 4, 90, 1);
    const auto b = scan(2, 4, 90, 4);
    REQUIRE(a.size() == b.size());
    long expected = 0;
    for (long q = 2; q <= 90; ++q) expected += oracle::phi(q);
    CHECK(static_cast<long>(a.size()) == expected);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].q == b[k].q);
        CHECK(a[k].p == b[k].p);
        CHECK(a[k].point.y == b[k].point.y);
        if (k > 0) CHECK(std::pair{a[k - 1].q, a[k - 1].p} < std::pair{a[k].q, a[k].p});
        const GraphPoint gp = graph_point(2, 4, a[k].p, a[k].q);
        CHECK(gp.x == a[k].point.x);
        CHECK(gp.y == a[k].point.y);
    }
}

TEST_CASE("scan_emit writes CSV") {
    const auto path = std::filesystem::temp_directory_path() / "gdsum_scan_test.csv";
    CHECK(scan_emit(1, 1, 5, path.string(), 2) == 9);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string header, first;
    std::getline(ss, header);
    std::getline(ss, first);
    CHECK(header == "q,p,x,y,x_exact,y_exact");
    CHECK(first == "2,1,0.500000000000,0.000000000000,1/2,0");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(scan_emit(1, 1, 5, "/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("default_workers honours GDSUM_WORKERS") {
    setenv("GDSUM_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    setenv("GDSUM_WORKERS", "junk", 1);
    CHECK(default_workers() >= 1);
    unsetenv("GDSUM_WORKERS");
    CHECK(default_workers() >= 1);
}
