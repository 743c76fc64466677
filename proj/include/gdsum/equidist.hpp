#pragma once

#include "gdsum/rational.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdsum {

/// Raised when an output file cannot be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (p/q, frac(R_N q^{N-2} s_ij(p, q))).
struct GraphPoint {
    Rational x;
    Rational y;
};

struct ScanRecord {
    std::int64_t q;
    std::int64_t p;
    GraphPoint point;
};

/// Exact graph point through s_direct; throws std::logic_error if the certificate
/// residue disagrees.
GraphPoint graph_point(unsigned i, unsigned j, const BigInt& p, const BigInt& q);

/// Residue Y in [0, q) with frac(R_N q^{N-2} s_ij(p, q)) = Y/q, from the certificate
/// alpha_N r_N (p'^i C(N-1,i) + p^j C(N-1,j)). Requires gcd(p, q) = 1, q >= 1.
std::int64_t certificate_residue(unsigned i, unsigned j, std::int64_t p, std::int64_t q);

/// Laurent polynomial sum_t c_t x^{e_t} with distinct exponents and nonzero coefficients.
struct LaurentExponent {
    std::vector<std::pair<std::int64_t, int>> terms;  // (coefficient, exponent)

    /// m1 x + m2 alpha_N r_N (C(N-1,i) x^{-i} + C(N-1,j) x^j).
    static LaurentExponent for_graph(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j);
    /// Merges equal exponents and drops zero coefficients.
    void normalize();
};

/// sum over units x mod q of e(F(x)/q), with F evaluated exactly mod q.
std::complex<double> exp_sum_K(const LaurentExponent& f, std::int64_t q);

/// Worker count from GDSUM_WORKERS when set and positive, else hardware concurrency.
unsigned default_workers();

struct WeylCheckpoint {
    std::int64_t x;
    std::int64_t pairs;
    std::complex<double> value;
};

/// Normalized averages of e(m . H_ij(p, q)) over coprime 0 < p < q <= x for each
/// checkpoint x (ascending). Blocks of q are summed in parallel and merged in q order,
/// so the result does not depend on the worker count.
std::vector<WeylCheckpoint> weyl_sums(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j,
                                      std::vector<std::int64_t> checkpoints, unsigned workers = 0);
std::complex<double> weyl_sum(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j, std::int64_t x_max,
                              unsigned workers = 0);

struct WeilReport {
    unsigned v0 = 0;
    unsigned vinf = 0;
    double C = 0;  // v0 + vinf
    double max_ratio = 0;
    std::int64_t worst_prime = 0;
    std::size_t primes = 0;
    [[nodiscard]] bool pass() const { return max_ratio <= C; }
};

/// Pole orders of m . F_ij at 0 and infinity, as integers.
std::pair<unsigned, unsigned> weil_pole_orders(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j);

/// Max over primes P <= prime_max of |K(m . F_ij, P)| / sqrt(P), against C = v0 + vinf.
WeilReport weil_check(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j, std::int64_t prime_max);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Rows for all coprime 0 < p < q <= q_max in (q, p) order, via the certificate residue.
std::vector<ScanRecord> scan(unsigned i, unsigned j, std::int64_t q_max, unsigned workers = 0);

/// Writes the scan as CSV (q,p,x,y,x_exact,y_exact; decimals to 12 digits) and returns
/// the row count. Throws IoError when the file cannot be written.
std::size_t scan_emit(unsigned i, unsigned j, std::int64_t q_max, const std::string& path, unsigned workers = 0);

}  // namespace gdsum
