#include "gdsum/toddcone.hpp"

#include "gdsum/bernoulli.hpp"
#include "gdsum/contfrac.hpp"
#include "gdsum/dedekind.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace gdsum {

namespace {

using Complex = std::complex<double>;

HomogeneousPoly form_power(const LinearForm& M, unsigned d) {
    HomogeneousPoly out(d);
    for (unsigned a = 0; a <= d; ++a) {
        out.coeffs[a] = Rational(binomial(d, a) * pow(M.m, a) * pow(M.l, d - a));
    }
    return out;
}

HomogeneousPoly multiply(const HomogeneousPoly& u, const HomogeneousPoly& v) {
    HomogeneousPoly out(u.N + v.N);
    for (unsigned a = 0; a <= u.N; ++a) {
        if (u.coeffs[a].is_zero()) continue;
        for (unsigned b = 0; b <= v.N; ++b) out.coeffs[a + b] += u.coeffs[a] * v.coeffs[b];
    }
    return out;
}

// Multiplies by c x^dx y^dy.
HomogeneousPoly shift(const HomogeneousPoly& u, unsigned dx, unsigned dy, const Rational& c) {
    HomogeneousPoly out(u.N + dx + dy);
    for (unsigned a = 0; a <= u.N; ++a) out.coeffs[a + dx] = c * u.coeffs[a];
    return out;
}

// Taylor coefficients of x / (1 - z e^{-x}) up to x^{len-1}.
std::vector<Complex> todd_factor(const Complex& z, bool z_is_one, unsigned len) {
    std::vector<Complex> out(len);
    if (z_is_one) {
        double fact = 1.0;
        for (unsigned i = 0; i < len; ++i) {
            if (i > 0) fact *= i;
            const double b = bernoulli_number(i).to_double() / fact;
            out[i] = (i % 2 == 0) ? b : -b;
        }
        return out;
    }
    // h(x) = 1 - z e^{-x}; invert the power series and shift by one.
    std::vector<Complex> h(len), inv(len);
    h[0] = 1.0 - z;
    double fact = 1.0;
    for (unsigned m = 1; m < len; ++m) {
        fact *= m;
        h[m] = z * ((m % 2 == 1) ? 1.0 : -1.0) / fact;
    }
    inv[0] = 1.0 / h[0];
    for (unsigned k = 1; k < len; ++k) {
        Complex acc = 0.0;
        for (unsigned i = 1; i <= k; ++i) acc += h[i] * inv[k - i];
        inv[k] = -acc / h[0];
    }
    for (unsigned k = 1; k < len; ++k) out[k] = inv[k - 1];
    return out;
}

}  // namespace

const Rational& HomogeneousPoly::coefficient(unsigned i, unsigned j) const {
    if (i + j != N) throw std::invalid_argument("monomial degree does not match polynomial degree");
    return coeffs.at(i);
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
    if (other.N != N) throw std::invalid_argument("adding polynomials of different degree");
    for (unsigned a = 0; a <= N; ++a) coeffs[a] += other.coeffs[a];
    return *this;
}

Rational todd_coefficient(unsigned i, unsigned j, const BigInt& p, const BigInt& q) {
    const Rational s = s_direct(i, j, p, q) + Rational(delta(i, j)) * bernoulli_number(i) * bernoulli_number(j);
    const Rational mq = Rational(BigInt(-q));
    const Rational scale = (i + j == 0) ? Rational(1) / mq : pow(mq, i + j - 1);
    return -scale * s;
}

std::vector<LinearForm> mk_forms(const BigInt& p, const BigInt& q) {
    if (q == 1) {
        return {LinearForm{0, 1}, LinearForm{1, 0}};
    }
    const ConvergentTable t(cf_expand(p, q));
    std::vector<LinearForm> out;
    out.reserve(static_cast<std::size_t>(t.n()) + 2);
    out.push_back({0, q});
    for (int k = 0; k <= t.n(); ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        out.push_back({sign * t.q(k), sign * t.D(k)});
    }
    return out;
}

HomogeneousPoly todd_homogeneous(unsigned N, const BigInt& p, const BigInt& q) {
    if (N < 2 || N % 2 != 0) {
        throw PreconditionError("degree must be even and at least 2, got " + std::to_string(N));
    }
    if (sgn(q) <= 0 || gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not a coprime pair");
    }
    const BigInt pr = mod_floor(p, q);
    const std::vector<LinearForm> M = mk_forms(pr, q);
    const int n = static_cast<int>(M.size()) - 2;
    auto form = [&M](int k) -> const LinearForm& { return M[static_cast<std::size_t>(k + 1)]; };
    std::vector<BigInt> terms;
    if (q != 1) terms = cf_expand(pr, q).terms;

    const Rational bn = bernoulli_number(N) / Rational(factorial(N));
    const Rational qr(q);

    HomogeneousPoly inner(N - 2);
    for (int k = -1; k <= n - 1; ++k) {
        HomogeneousPoly part(N - 2);
        for (unsigned i = 0; i <= N - 2; ++i) {
            const Rational w = bernoulli_number(i + 1) * bernoulli_number(N - i - 1) /
                               Rational(factorial(i + 1) * factorial(N - i - 1));
            if (w.is_zero()) continue;
            part += shift(multiply(form_power(form(k), N - 2 - i), form_power(form(k + 1), i)), 0, 0, w);
        }
        inner += shift(part, 0, 0, Rational((k + 1) % 2 == 0 ? 1 : -1));
    }
    for (int k = 0; k <= n - 1; ++k) {
        HomogeneousPoly part(N - 2);
        for (unsigned i = 0; i <= N - 2; ++i) {
            part += multiply(form_power(form(k - 1), N - 2 - i), form_power(form(k + 1), i));
        }
        const BigInt c = ((k % 2 == 0) ? 1 : -1) * terms[static_cast<std::size_t>(k)];
        inner += shift(part, 0, 0, bn * Rational(c));
    }

    HomogeneousPoly out = shift(inner, 1, 1, qr);
    out += shift(form_power(form(0), N - 1), 1, 0, bn);
    out += shift(form_power(form(n - 1), N - 1), 0, 1, bn);
    return out;
}

double todd_numeric_check(const BigInt& p, const BigInt& q, unsigned max_degree) {
    if (sgn(q) <= 0 || gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not a coprime pair");
    }
    if (!q.fits_slong_p()) throw PreconditionError("q too large for the numeric check");
    const long Q = q.get_si();
    const long P = mod_floor(p, q).get_si();
    const unsigned len = max_degree + 1;

    std::vector<std::vector<Complex>> T(len, std::vector<Complex>(len, 0.0));
    for (long k = 0; k < Q; ++k) {
        const long r1 = ((-P * k) % Q + Q) % Q;
        const double t1 = 2.0 * std::numbers::pi * static_cast<double>(r1) / static_cast<double>(Q);
        const double t2 = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(Q);
        const auto a = todd_factor(std::polar(1.0, t1), r1 == 0, len);
        const auto b = todd_factor(std::polar(1.0, t2), k == 0, len);
        for (unsigned i = 0; i < len; ++i) {
            for (unsigned j = 0; i + j < len; ++j) T[i][j] += a[i] * b[j];
        }
    }

    double worst = 0.0;
    for (unsigned i = 0; i < len; ++i) {
        for (unsigned j = 0; i + j < len; ++j) {
            const Rational exact = todd_coefficient(i, j, p, q) / Rational(factorial(i) * factorial(j));
            worst = std::max(worst, std::abs(T[i][j] - exact.to_double()));
        }
    }
    return worst;
}

}  // namespace gdsum
