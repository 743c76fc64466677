#include "gdsum/bernoulli.hpp"

#include <mutex>

namespace gdsum {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BernoulliCache& BernoulliCache::instance() {
    static BernoulliCache cache;
    return cache;
}

void BernoulliCache::extend_locked(unsigned n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    for (auto m = static_cast<unsigned>(numbers_.size()); m <= n; ++m) {
        if (m >= 3 && m % 2 == 1) {
            numbers_.emplace_back(0);
            continue;
        }
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            if (numbers_[k].is_zero()) continue;
            acc += Rational(binomial(m + 1, k)) * numbers_[k];
        }
        numbers_.push_back(-acc / Rational(BigInt(m + 1)));
    }
    for (auto i = static_cast<unsigned>(polys_.size()); i <= n; ++i) {
        std::vector<Rational> coeffs(i + 1);
        // B_i(x) = sum_k C(i,k) B_k x^{i-k}
        for (unsigned k = 0; k <= i; ++k) {
            coeffs[i - k] = Rational(binomial(i, k)) * numbers_[k];
        }
        polys_.push_back(std::move(coeffs));
    }
}

Rational BernoulliCache::number(unsigned n) {
    {
        std::shared_lock lock(mu_);
        if (n < numbers_.size()) return numbers_[n];
    }
    std::unique_lock lock(mu_);
    extend_locked(n);
    return numbers_[n];
}

std::vector<Rational> BernoulliCache::polynomial(unsigned i) {
    {
        std::shared_lock lock(mu_);
        if (i < polys_.size()) return polys_[i];
    }
    std::unique_lock lock(mu_);
    extend_locked(i);
    return polys_[i];
}

void BernoulliCache::warm(unsigned n) {
    std::unique_lock lock(mu_);
    extend_locked(n);
}

Rational bernoulli_number(unsigned n) { return BernoulliCache::instance().number(n); }

Rational bernoulli_polynomial(unsigned i, const Rational& x) {
    const auto coeffs = BernoulliCache::instance().polynomial(i);
    // Horner
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational periodic_bernoulli(unsigned i, const Rational& x) {
    if (i == 0) return Rational(1);
    const Rational fx = x.frac();
    if (i == 1) {
        return fx.is_zero() ? Rational(0) : fx - Rational(1, 2);
    }
    return bernoulli_polynomial(i, fx);
}

ReducedBernoulli reduced_bernoulli(unsigned n) {
    const Rational b = bernoulli_number(n);
    if (b.is_zero()) {
        throw PreconditionError("B_" + std::to_string(n) + " vanishes; no reduced fraction");
    }
    return {b.num(), b.den()};
}

}  // namespace gdsum
