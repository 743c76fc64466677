#include "gdsum/contfrac.hpp"

#include "gdsum/bernoulli.hpp"

namespace gdsum {

void require_reduced_proper(const BigInt& p, const BigInt& q) {
    if (sgn(p) <= 0 || sgn(q) <= 0) {
        throw PreconditionError("expected positive p and q, got p=" + p.get_str() + ", q=" + q.get_str());
    }
    if (p >= q) {
        throw PreconditionError("expected p < q, got p=" + p.get_str() + ", q=" + q.get_str());
    }
    if (gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not coprime");
    }
}

ContinuedFraction cf_expand(const BigInt& p, const BigInt& q, Parity parity) {
    require_reduced_proper(p, q);
    ContinuedFraction cf{{}, p, q};
    BigInt x = q, y = p;
    while (y != 0) {
        BigInt quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        cf.terms.push_back(quot);
        x = y;
        y = rem;
    }
    const bool want_even = parity == Parity::even;
    // q > p forces the canonical last term to be >= 2, so the split is always legal.
    if (parity != Parity::canonical && (cf.length() % 2 == 0) != want_even) {
        cf.terms.back() -= 1;
        cf.terms.emplace_back(1);
    }
    return cf;
}

ConvergentTable::ConvergentTable(const ContinuedFraction& cf) : terms_(cf.terms) {
    const BigInt& P = cf.source_p;
    const BigInt& Q = cf.source_q;
    rows_.reserve(terms_.size() + 2);
    rows_.push_back({1, 0, -Q});
    rows_.push_back({0, 1, P});
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Row& prev = rows_[k];
        const Row& cur = rows_[k + 1];
        Row next{prev.p + terms_[k] * cur.p, prev.q + terms_[k] * cur.q, 0};
        next.D = P * next.q - Q * next.p;
        rows_.push_back(std::move(next));
    }
}

ConvergentTable convergent_table(const ContinuedFraction& cf) { return ConvergentTable(cf); }

Rational fold(std::span<const BigInt> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("cannot fold an empty continued fraction");
    }
    Rational acc(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        acc = Rational(*it) + Rational(1) / acc;
    }
    return acc;
}

}  // namespace gdsum
