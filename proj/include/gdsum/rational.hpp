#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace gdsum {

using BigInt = mpz_class;

/// Raised when a mathematical precondition of an operation is violated
/// (non-coprime pair, odd weight where even is required, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact signed rational. Always canonical: lowest terms, positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}                // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}       // NOLINT(google-explicit-constructor)
    /// Integer-valued gmpxx expressions, e.g. Rational(a * b).
    template <class T, class U>
        requires std::is_same_v<T, mpz_t>
    Rational(const __gmp_expr<T, U>& e) : v_(BigInt(e)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "n" or "n/d" (optionally signed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt num() const { return v_.get_num(); }
    [[nodiscard]] BigInt den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    /// Largest integer <= value.
    [[nodiscard]] BigInt floor() const;
    /// value - floor(value), in [0, 1).
    [[nodiscard]] Rational frac() const;
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    /// "num/den", or just "num" when the denominator is 1.
    [[nodiscard]] std::string str() const;
    /// Fixed-point decimal rendering with `digits` fractional digits.
    [[nodiscard]] std::string decimal(int digits = 12) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_{0};
};

/// base^exp for a non-negative exponent.
Rational pow(const Rational& base, unsigned exp);
BigInt pow(const BigInt& base, unsigned exp);

/// Floor division and non-negative remainder for big integers.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);

/// Checked narrowing; throws PreconditionError if the value does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace gdsum
