#pragma once

#include "gdsum/rational.hpp"

#include <span>
#include <vector>

namespace gdsum {

enum class Parity { canonical, even, odd };

/// Expansion q/p = a_1 + 1/(a_2 + ... + 1/a_n) of a reduced fraction with 0 < p < q.
struct ContinuedFraction {
    std::vector<BigInt> terms;
    BigInt source_p;
    BigInt source_q;

    [[nodiscard]] int length() const { return static_cast<int>(terms.size()); }
    /// a_k, 1-based as in the usual notation.
    [[nodiscard]] const BigInt& a(int k) const { return terms.at(static_cast<std::size_t>(k - 1)); }
};

/// Convergent ladder k = -1..n with (p_{-1}, q_{-1}) = (1, 0), (p_0, q_0) = (0, 1),
/// (p_{k+1}, q_{k+1}) = (p_{k-1}, q_{k-1}) + a_{k+1} (p_k, q_k) and D_k = p q_k - q p_k.
class ConvergentTable {
public:
    struct Row {
        BigInt p;
        BigInt q;
        BigInt D;
    };

    explicit ConvergentTable(const ContinuedFraction& cf);

    [[nodiscard]] int n() const { return static_cast<int>(rows_.size()) - 2; }
    [[nodiscard]] const Row& row(int k) const { return rows_.at(static_cast<std::size_t>(k + 1)); }
    [[nodiscard]] const BigInt& p(int k) const { return row(k).p; }
    [[nodiscard]] const BigInt& q(int k) const { return row(k).q; }
    [[nodiscard]] const BigInt& D(int k) const { return row(k).D; }
    [[nodiscard]] const BigInt& a(int k) const { return terms_.at(static_cast<std::size_t>(k - 1)); }

private:
    std::vector<Row> rows_;
    std::vector<BigInt> terms_;
};

/// Throws PreconditionError unless 0 < p < q and gcd(p, q) = 1.
void require_reduced_proper(const BigInt& p, const BigInt& q);

/// Euclidean expansion of q/p. Canonical form has a_n >= 2 when n >= 2; a parity
/// request rewrites the tail [.., a_n] <-> [.., a_n - 1, 1] to force n even or odd.
ContinuedFraction cf_expand(const BigInt& p, const BigInt& q, Parity parity = Parity::canonical);

ConvergentTable convergent_table(const ContinuedFraction& cf);

/// Folds a_1 + 1/(a_2 + ...) back into a rational.
Rational fold(std::span<const BigInt> terms);

}  // namespace gdsum
