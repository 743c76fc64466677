#include "gdsum/zeta.hpp"

#include "gdsum/bernoulli.hpp"
#include "gdsum/dedekind.hpp"

namespace gdsum {

namespace {

Rational sign_pow(unsigned k) { return Rational(k % 2 == 0 ? 1 : -1); }

void require_usable(const HyperbolicMatrix& M, unsigned N) {
    if (N == 0) throw PreconditionError("N must be at least 1");
    M.validate();
    if (M.q == 1 || M.p <= 0 || M.p >= M.q || abs(M.s) >= M.q) {
        throw PreconditionError("matrix needs 0 < p < q and |s| < q (got p=" + M.p.get_str() + ", q=" + M.q.get_str() +
                                ", s=" + M.s.get_str() + "); renormalize the ideal basis");
    }
}

// Expansion of q/p whose last-but-one denominator reproduces the matrix entry s.
ClosedForm closed_form_for(const HyperbolicMatrix& M) {
    for (Parity parity : {Parity::even, Parity::odd}) {
        ClosedForm cf(M.p, M.q, parity);
        if (cf.s_entry() == M.s) return cf;
    }
    throw PreconditionError("matrix entry s=" + M.s.get_str() + " is not (-1)^(n-1) q_(n-1) for either expansion of q/p");
}

Rational polynomial_part(const ZetaCoeffs& c) {
    Rational total;
    const Rational t(c.trace);
    for (unsigned k = 0; k < c.e.size(); ++k) {
        total += sign_pow(k) * Rational(c.e[k]) * pow(t, k + 1) / Rational(BigInt(k + 1));
    }
    return total;
}

Rational weight(unsigned N, unsigned k) { return Rational(1) / Rational(BigInt((k + 1) * (2 * N - 1 - k))); }

}  // namespace

ZetaCoeffs e_coeffs(unsigned N, const BigInt& trace) {
    if (N == 0) throw PreconditionError("N must be at least 1");
    ZetaCoeffs out{N, trace, {1}};
    for (unsigned step = 1; step < N; ++step) {
        std::vector<BigInt> next(out.e.size() + 2, 0);
        for (std::size_t i = 0; i < out.e.size(); ++i) {
            next[i] += out.e[i];
            next[i + 1] += trace * out.e[i];
            next[i + 2] += out.e[i];
        }
        out.e = std::move(next);
    }
    return out;
}

Rational zeta_siegel(const HyperbolicMatrix& M, unsigned N) {
    require_usable(M, N);
    const ZetaCoeffs c = e_coeffs(N, M.trace());
    const Rational b2n = bernoulli_number(2 * N);
    const Rational scale = Rational(BigInt(2 * N)) / b2n;

    const Rational poly = polynomial_part(c) / pow(Rational(M.q), 2 * N - 1);
    Rational sums;
    for (unsigned k = 0; k <= 2 * N - 2; ++k) {
        const unsigned e = k + 1, f = 2 * N - k - 1;
        const Rational s = s_direct(e, f, M.p, M.q) +
                           Rational(delta(e, f)) * bernoulli_number(e) * bernoulli_number(f);
        sums += sign_pow(k + 1) * Rational(c.e[k]) * s * weight(N, k);
    }
    return sign_pow(N) * (poly + scale * sums) / scale;
}

Rational zeta_meyer_higher(const HyperbolicMatrix& M, unsigned N) {
    require_usable(M, N);
    const ZetaCoeffs c = e_coeffs(N, M.trace());
    ClosedForm cf = closed_form_for(M);
    Rational total;
    for (unsigned k = 0; k <= 2 * N - 2; ++k) {
        total += sign_pow(k + 1) * Rational(c.e[k]) * cf.integral_part(k + 1, 2 * N - k - 1) * weight(N, k);
    }
    return sign_pow(N) * total / pow(Rational(M.q), 2 * N - 2);
}

Rational cancellation_T(const HyperbolicMatrix& M, unsigned N) {
    require_usable(M, N);
    const ZetaCoeffs c = e_coeffs(N, M.trace());
    ClosedForm cf = closed_form_for(M);
    const Rational scale = Rational(BigInt(2 * N)) / bernoulli_number(2 * N);
    Rational sums;
    for (unsigned k = 0; k <= 2 * N - 2; ++k) {
        sums += sign_pow(k + 1) * Rational(c.e[k]) * cf.fractional_part(k + 1, 2 * N - k - 1) * weight(N, k);
    }
    return polynomial_part(c) + scale * sums;
}

OrderZeta zeta_maximal_order(const BigInt& D, unsigned N) {
    IdealMatrix ideal = ideal_matrix(D);
    const Rational v = zeta_meyer_higher(ideal.matrix, N);
    const Rational factor = N == 1 ? Rational(1) : Rational(1) / pow(ideal.lattice_norm, N - 1);
    return OrderZeta{std::move(ideal), v, v * factor};
}

}  // namespace gdsum
