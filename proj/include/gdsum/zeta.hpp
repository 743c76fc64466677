#pragma once

#include "gdsum/quadfield.hpp"
#include "gdsum/rational.hpp"

#include <vector>

namespace gdsum {

/// Coefficients of (z^2 + trace z + 1)^(N-1) = sum_k e_k z^k, k = 0..2N-2.
struct ZetaCoeffs {
    unsigned N = 0;
    BigInt trace;
    std::vector<BigInt> e;
};

ZetaCoeffs e_coeffs(unsigned N, const BigInt& trace);

/// Siegel's formula for zeta(a, 1 - N), evaluated with the direct Dedekind sums:
///
///   (-1)^N (2N / B_2N) zeta = q^{1-2N} sum_k (-1)^k e_k (p+s)^{k+1} / (k+1)
///                           + (2N / B_2N) sum_k (-1)^{k+1} e_k (s_{k+1,2N-k-1} + delta B B) / ((k+1)(2N-1-k)).
///
/// The matrix must satisfy 0 < p < q and |s| < q; p and q are taken as the
/// Dedekind-sum arguments.
Rational zeta_siegel(const HyperbolicMatrix& M, unsigned N);

/// (-1)^N / q^{2N-2} sum_k (-1)^{k+1} e_k sI_{k+1,2N-k-1}(p,q) / ((k+1)(2N-1-k)), with the
/// continued fraction of q/p expanded in the parity for which (-1)^{n-1} q_{n-1} = s.
Rational zeta_meyer_higher(const HyperbolicMatrix& M, unsigned N);

/// The polynomial part plus the sR part of Siegel's formula; identically zero.
Rational cancellation_T(const HyperbolicMatrix& M, unsigned N);

/// Partial zeta of the maximal order at 1 - N: the higher Meyer value of the
/// normalized unit matrix times N([1, beta/alpha])^{1-N}.
struct OrderZeta {
    IdealMatrix ideal;
    Rational matrix_value;  // zeta_meyer_higher(ideal.matrix, N)
    Rational value;
};

OrderZeta zeta_maximal_order(const BigInt& D, unsigned N);

}  // namespace gdsum
