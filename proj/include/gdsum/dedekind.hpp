#pragma once

#include "gdsum/contfrac.hpp"
#include "gdsum/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gdsum {

/// Parameters of s_{ij}(p, q); p is stored reduced mod q and gcd(p, q) = 1.
struct SumParams {
    unsigned i;
    unsigned j;
    BigInt p;
    BigInt q;

    static SumParams make(unsigned i, unsigned j, const BigInt& p, const BigInt& q);
};

/// delta(e, f) = 1 if e == 1 or f == 1, else 0.
int delta(unsigned e, unsigned f);

/// Reference evaluation of sum_{k=0}^{q-1} B_i(k/q) B_j(pk/q) with periodic Bernoulli
/// functions (index 0 means the constant 1). O(q); q must fit in 64 bits.
Rational s_direct(unsigned i, unsigned j, const BigInt& p, const BigInt& q);
Rational s_direct(const SumParams& params);

/// Evaluates s_direct for many (i, j, p) at a fixed q, sharing the scaled
/// Bernoulli tables L_i q^i B_i(r/q), r = 0..q-1 (all integers).
class DirectSumEvaluator {
public:
    explicit DirectSumEvaluator(std::int64_t q);

    [[nodiscard]] std::int64_t q() const { return q_; }
    Rational operator()(unsigned i, unsigned j, std::int64_t p);

private:
    struct Table {
        BigInt scale;  // L_i q^i
        std::vector<BigInt> values;
    };
    const Table& table(unsigned i);

    std::int64_t q_;
    std::map<unsigned, Table> tables_;
};

/// 12 s(p, q) from the continued fraction p/q = [0, a_1, ..., a_n]
/// (Hickerson). q == 1 returns 0.
Rational hickerson_classical(const BigInt& p, const BigInt& q, Parity parity = Parity::canonical);

struct DedekindDecomposition {
    Rational sI;
    Rational sR;
    Rational delta_term;     // delta(e,f) B_e B_f
    Rational reconstructed;  // sI / q^{N-2} + sR / q^{N-1} - delta_term
    int n = 0;               // continued-fraction length used
    BigInt s_entry;          // (-1)^{n-1} q_{n-1}
};

/// Continued-fraction closed form of s_{e,f}(p, q) for one expansion of q/p.
///
/// With M_k = m_k x + l_k y, (m_k, l_k) = (-1)^k (q_k, D_k) for -1 <= k <= n, the
/// integral part is
///
///   sI = e! f! sum_{a+b=e-1} [ sum_{k=-1}^{n-1} (-1)^{k+1} f_k(a,b)
///                              + B_N/N! sum_{k=0}^{n-1} (-1)^k a_{k+1} g_k(a,b) ]
///
/// and the fractional part
///
///   sR = e! f! B_N/N! [ C(N-1,f) p^f + C(N-1,e) s^e ],   s = (-1)^{n-1} q_{n-1}.
///
/// Both parities of the expansion give the same reconstruction; sI and sR
/// individually depend on the parity through s.
class ClosedForm {
public:
    ClosedForm(const BigInt& p, const BigInt& q, Parity parity = Parity::canonical);

    [[nodiscard]] const BigInt& p() const { return p_; }
    [[nodiscard]] const BigInt& q() const { return q_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const BigInt& s_entry() const { return s_entry_; }
    [[nodiscard]] const BigInt& m(int k) const { return m_.at(static_cast<std::size_t>(k + 1)); }
    [[nodiscard]] const BigInt& l(int k) const { return l_.at(static_cast<std::size_t>(k + 1)); }
    [[nodiscard]] const BigInt& q_k(int k) const { return qk_.at(static_cast<std::size_t>(k + 1)); }
    [[nodiscard]] const BigInt& D_k(int k) const { return dk_.at(static_cast<std::size_t>(k + 1)); }
    [[nodiscard]] const BigInt& a(int k) const { return terms_.at(static_cast<std::size_t>(k - 1)); }

    /// Integral part via the signed linear-form coefficients (m_k, l_k).
    Rational integral_part(unsigned e, unsigned f);
    /// Same quantity written with q_k, D_k and an explicit (-1)^i inside f_k.
    Rational integral_part_display(unsigned e, unsigned f);
    Rational fractional_part(unsigned e, unsigned f) const;
    DedekindDecomposition decompose(unsigned e, unsigned f);

private:
    const BigInt& mpow(int k, unsigned e);
    const BigInt& lpow(int k, unsigned e);
    const BigInt& qpow(int k, unsigned e);
    const BigInt& dpow(int k, unsigned e);
    static const BigInt& cached_pow(std::vector<std::vector<BigInt>>& cache, const std::vector<BigInt>& base,
                                    int k, unsigned e);

    BigInt p_, q_;
    int n_ = 0;
    BigInt s_entry_;
    std::vector<BigInt> terms_;
    std::vector<BigInt> m_, l_, qk_, dk_;  // indexed k + 1, k = -1..n
    std::vector<std::vector<BigInt>> mpow_, lpow_, qpow_, dpow_;
};

void require_even_weight(unsigned e, unsigned f);

/// Closed-form decomposition of s_{e,f}(p, q). p is reduced mod q; q == 1 uses the
/// empty continued fraction (sR = 0, sI = B_e B_f).
DedekindDecomposition s_decomposed(unsigned e, unsigned f, const BigInt& p, const BigInt& q,
                                   Parity parity = Parity::canonical);

/// Hand-expanded integral parts for weight 4 and 6, written with q_k, D_k, a_k.
Rational s_integral_table(unsigned e, unsigned f, const BigInt& p, const BigInt& q,
                          Parity parity = Parity::canonical);

struct NormConstants {
    unsigned N;
    BigInt alpha;  // numerator of B_N
    BigInt beta;   // denominator of B_N, > 0
    BigInt r;      // lcm of denominators of beta C(N, i+1) B_{i+1} B_{N-i-1}, i odd in [0, N-2]
    BigInt R;      // C(N, i) beta r
};

NormConstants norm_constants(unsigned i, unsigned j);

/// Least positive inverse of p mod q (q > 1), or 0 when q == 1.
BigInt mod_inverse(const BigInt& p, const BigInt& q);

/// alpha_N r_N (p'^i C(N-1,i) + p^j C(N-1,j)) / q, with p' p = 1 mod q; 0 for q == 1.
/// R q^{N-2} s_{ij}(p,q) minus this value is an integer.
Rational fractional_certificate(unsigned i, unsigned j, const BigInt& p, const BigInt& q);

}  // namespace gdsum
