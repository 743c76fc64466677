#pragma once

#include "gdsum/rational.hpp"

#include <shared_mutex>
#include <span>
#include <vector>

namespace gdsum {

BigInt factorial(unsigned n);
/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Memoized Bernoulli numbers (B_1 = -1/2) and Bernoulli polynomial
/// coefficients. Reads take a shared lock; extension takes an exclusive one.
class BernoulliCache {
public:
    static BernoulliCache& instance();

    Rational number(unsigned n);
    /// Coefficients c_0..c_i of B_i(x) = sum_k c_k x^k.
    std::vector<Rational> polynomial(unsigned i);
    /// Fill the cache up to degree n so later reads never block on a writer.
    void warm(unsigned n);

private:
    void extend_locked(unsigned n);

    std::shared_mutex mu_;
    std::vector<Rational> numbers_{Rational(1)};
    std::vector<std::vector<Rational>> polys_;
};

/// B_n with the convention B_1 = -1/2.
Rational bernoulli_number(unsigned n);

/// B_i(x) for the Bernoulli polynomial (no reduction mod 1).
Rational bernoulli_polynomial(unsigned i, const Rational& x);

/// Periodic Bernoulli function: B_i({x}) for i >= 2; for i == 1 the sawtooth
/// ((x)), which is 0 at integers. i == 0 gives the constant 1.
Rational periodic_bernoulli(unsigned i, const Rational& x);

/// Numerator and denominator of B_n in lowest terms, denominator > 0.
struct ReducedBernoulli {
    BigInt alpha;
    BigInt beta;
};
ReducedBernoulli reduced_bernoulli(unsigned n);

}  // namespace gdsum
