#pragma once

#include "gdsum/rational.hpp"

#include <vector>

namespace gdsum {

/// M(x, y) = m x + l y.
struct LinearForm {
    BigInt m;
    BigInt l;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Homogeneous polynomial of degree N in x, y; coeffs[a] multiplies x^a y^(N-a).
struct HomogeneousPoly {
    unsigned N = 0;
    std::vector<Rational> coeffs;

    explicit HomogeneousPoly(unsigned degree = 0) : N(degree), coeffs(degree + 1) {}
    [[nodiscard]] const Rational& coefficient(unsigned i, unsigned j) const;
    HomogeneousPoly& operator+=(const HomogeneousPoly& other);
};

/// t_ij(p, q) = -(-q)^(i+j-1) (s_ij(p, q) + delta(i, j) B_i B_j), the x^i y^j
/// coefficient of the Todd series times i! j!. i, j >= 0.
Rational todd_coefficient(unsigned i, unsigned j, const BigInt& p, const BigInt& q);

/// Forms M_{-1}..M_n of the nonsingular subdivision of the cone spanned by
/// (1, 0) and (p, q); entry k + 1 holds M_k.
std::vector<LinearForm> mk_forms(const BigInt& p, const BigInt& q);

/// Degree-N part of the Todd series assembled from the subdivision:
///
///   q x y sum_{k=-1}^{n-1} (-1)^{k+1} sum_i B_{i+1} B_{N-i-1} / ((i+1)! (N-i-1)!) M_k^{N-2-i} M_{k+1}^i
///   + q B_N/N! x y sum_{k=0}^{n-1} (-1)^k a_{k+1} sum_i M_{k-1}^{N-2-i} M_{k+1}^i
///   + B_N/N! (M_0^{N-1} x + M_{n-1}^{N-1} y).
HomogeneousPoly todd_homogeneous(unsigned N, const BigInt& p, const BigInt& q);

/// Max |numeric - exact| over i + j <= max_degree of the Taylor coefficients of
/// sum_{k mod q} x/(1 - e(-pk/q) e^{-x}) * y/(1 - e(k/q) e^{-y}), in double precision.
double todd_numeric_check(const BigInt& p, const BigInt& q, unsigned max_degree);

}  // namespace gdsum
