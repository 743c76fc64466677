#pragma once

#include "gdsum/rational.hpp"

#include <vector>

namespace gdsum {

bool is_squarefree(const BigInt& n);

/// (a + b sqrt(D)) / c with c > 0 and gcd(a, b, c) = 1; D > 1 squarefree.
class QuadraticSurd {
public:
    QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt D);
    static QuadraticSurd from_rational(const Rational& x, const BigInt& D);
    /// sqrt(D) itself.
    static QuadraticSurd root(const BigInt& D);

    [[nodiscard]] const BigInt& a() const { return a_; }
    [[nodiscard]] const BigInt& b() const { return b_; }
    [[nodiscard]] const BigInt& c() const { return c_; }
    [[nodiscard]] const BigInt& D() const { return D_; }
    [[nodiscard]] bool is_rational() const { return b_ == 0; }
    [[nodiscard]] Rational rational_part() const { return Rational(a_, c_); }
    [[nodiscard]] Rational irrational_part() const { return Rational(b_, c_); }

    [[nodiscard]] QuadraticSurd conjugate() const;
    [[nodiscard]] Rational norm() const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] BigInt floor() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x);
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (y - x).sign() > 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x; }

private:
    BigInt a_, b_, c_, D_;
};

struct SurdExpansion {
    std::vector<BigInt> preperiod;
    std::vector<BigInt> period;
};

/// Eventually periodic continued fraction of an irrational quadratic surd.
SurdExpansion surd_cf(const QuadraticSurd& x);

/// Inverse of surd_cf: [preperiod; period, period, ...] as an exact surd in Q(sqrt D).
QuadraticSurd fold_surd(const SurdExpansion& cf, const BigInt& D);

/// (x + y sqrt(D)) / 2.
struct FieldUnit {
    BigInt x;
    BigInt y;
    BigInt D;

    [[nodiscard]] BigInt norm() const;  // (x^2 - D y^2) / 4
    [[nodiscard]] QuadraticSurd value() const { return QuadraticSurd(x, y, 2, D); }
    friend bool operator==(const FieldUnit&, const FieldUnit&) = default;
};

/// Ring generator of the maximal order: (1 + sqrt D)/2 for D = 1 mod 4, else sqrt D.
QuadraticSurd maximal_order_generator(const BigInt& D);

/// Fundamental unit > 1, read off the first convergent of the ring generator's
/// continued fraction that has norm +-1.
FieldUnit fundamental_unit(const BigInt& D);
/// Fundamental unit, squared when its norm is -1.
FieldUnit totally_positive_unit(const BigInt& D);

/// Matrix (p q; r s) with eps^{-1} (alpha, beta)^t = (p q; r s) (alpha, beta)^t.
struct HyperbolicMatrix {
    BigInt p, q, r, s;

    [[nodiscard]] BigInt det() const { return p * s - q * r; }
    [[nodiscard]] BigInt trace() const { return p + s; }
    /// Throws PreconditionError unless det = 1, q > 0, |trace| > 2, gcd(p, q) = 1.
    void validate() const;
    friend bool operator==(const HyperbolicMatrix&, const HyperbolicMatrix&) = default;
};

struct IdealMatrix {
    HyperbolicMatrix matrix;
    QuadraticSurd alpha;
    QuadraticSurd beta;
    FieldUnit unit;         // totally positive fundamental unit
    Rational lattice_norm;  // norm of the lattice [1, beta/alpha] relative to the maximal order

    /// omega = -beta/alpha.
    [[nodiscard]] QuadraticSurd omega() const { return -(beta / alpha); }
};

/// omega is fixed by w -> (p w + r)/(q w + s).
bool is_fixed_point(const HyperbolicMatrix& M, const QuadraticSurd& omega);

/// Matrix of multiplication by eps^{-1} on the lattice spanned by alpha, beta, after
/// an SL2(Z) change of basis chosen so that 0 < p < q, |s| < q and omega > omega'
/// (smallest q, then p, among the conjugates searched). Throws if eps^{-1} does not
/// preserve the lattice.
IdealMatrix ideal_matrix(const BigInt& D, const QuadraticSurd& alpha, const QuadraticSurd& beta);
/// Same for the maximal order with basis (1, generator).
IdealMatrix ideal_matrix(const BigInt& D);

}  // namespace gdsum
