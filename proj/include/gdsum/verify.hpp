#pragma once

#include "gdsum/quadfield.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gdsum {

/// One named invariant checked over a sweep.
struct Check {
    Check() = default;
    Check(std::string n) : name(std::move(n)) {}  // NOLINT(google-explicit-constructor)

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0;            // largest observed error or ratio, where meaningful
    std::string first_failure;   // empty when the check passed

    [[nodiscard]] bool pass() const { return failures == 0 && cases > 0; }
    void record(bool ok, const std::string& what);
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const Check& check(const std::string& name) const;
};

/// s_decomposed reconstruction == s_direct and R sI, R sR integral for all coprime
/// 1 <= p < q <= q_max and e, f >= 1 with e + f even and <= max_weight.
SuiteReport verify_oracle(long q_max, unsigned max_weight = 8);

/// hickerson_classical == 12 s_direct(1,1) for both parities, q <= q_max.
SuiteReport verify_hickerson(long q_max);

/// Table formulas == closed-form integral part, both parities, weights 4 and 6.
SuiteReport verify_tables(long q_max);

/// Homogeneous Todd expansion == coefficient relation for q <= q_max and
/// N in {2, 4, 6}; floating character sum within 1e-9 for q <= numeric_q_max.
SuiteReport verify_todd(long q_max, long numeric_q_max = 20, unsigned max_degree = 6);

/// Siegel == higher Meyer and cancellation_T == 0 for N = 1..max_N.
SuiteReport verify_zeta(const std::vector<HyperbolicMatrix>& matrices, unsigned max_N = 4);
/// Same on the normalized unit matrix of each maximal order.
SuiteReport verify_zeta_fields(const std::vector<long>& discriminants, unsigned max_N = 4);

/// R_N q^{N-2} s_direct - fractional_certificate is an integer, q <= q_max.
SuiteReport verify_congruence(long q_max, unsigned max_weight = 6);

/// s_direct(i, j, p, q) == 0 for i + j odd over `count` random inputs.
SuiteReport verify_odd_vanishing(std::size_t count, long q_max = 1000, std::uint64_t seed = 1);

/// |E(m, x)| < threshold and the trend over x/12, x/6, x/2, x for
/// m in {(1,0),(0,1),(1,1),(2,1)}, (i,j) in {(1,1),(1,3),(2,2)}; Weil ratio <= C
/// for primes up to prime_max.
SuiteReport verify_weyl(long x, long prime_max, double threshold = 0.1, unsigned workers = 0);

/// Hyperbolic matrices with 0 < p < q < 40, |s| < q, trace t = 3, 4, ... in order.
std::vector<HyperbolicMatrix> sample_hyperbolic_matrices(std::size_t count);

}  // namespace gdsum
