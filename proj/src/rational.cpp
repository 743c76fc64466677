#include "gdsum/rational.hpp"

#include <ostream>
#include <sstream>

namespace gdsum {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s, 10));
        }
        BigInt num(s.substr(0, slash), 10);
        BigInt den(s.substr(slash + 1), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + s + "'");
        }
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const { return v_.get_str(10); }

std::string Rational::decimal(int digits) const {
    // Round half away from zero at the requested digit.
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
    mpq_class scaled = v_ * mpq_class(scale);
    const bool neg = sgn(scaled) < 0;
    if (neg) scaled = -scaled;
    BigInt r;
    mpq_class half(1, 2);
    mpq_class shifted = scaled + half;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    BigInt ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), r.get_mpz_t(), scale.get_mpz_t());
    std::string frac_digits = fp.get_str();
    if (static_cast<int>(frac_digits.size()) < digits) {
        frac_digits.insert(0, static_cast<std::size_t>(digits) - frac_digits.size(), '0');
    }
    std::string out = (neg && r != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        out += '.';
        out += frac_digits;
    }
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exp) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(n, d);
}

BigInt pow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) < 0) r += abs(b);
    return r;
}

std::int64_t to_int64(const BigInt& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) {
        throw PreconditionError("integer " + v.get_str() + " does not fit in 64 bits");
    }
    return v.get_si();
}

}  // namespace gdsum
