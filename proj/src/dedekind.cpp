#include "gdsum/dedekind.hpp"

#include "gdsum/bernoulli.hpp"

#include <functional>
#include <string>

namespace gdsum {

namespace {

int neg1_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

BigInt reduce_mod(const BigInt& p, const BigInt& q) { return mod_floor(p, q); }

void require_coprime(const BigInt& p, const BigInt& q) {
    if (sgn(q) <= 0) {
        throw PreconditionError("q must be positive, got " + q.get_str());
    }
    if (gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not coprime");
    }
}

}  // namespace

int delta(unsigned e, unsigned f) { return (e == 1 || f == 1) ? 1 : 0; }

SumParams SumParams::make(unsigned i, unsigned j, const BigInt& p, const BigInt& q) {
    require_coprime(p, q);
    return SumParams{i, j, reduce_mod(p, q), q};
}

// ---------------------------------------------------------------------------
// Direct summation

DirectSumEvaluator::DirectSumEvaluator(std::int64_t q) : q_(q) {
    if (q <= 0) {
        throw PreconditionError("q must be positive, got " + std::to_string(q));
    }
}

const DirectSumEvaluator::Table& DirectSumEvaluator::table(unsigned i) {
    if (auto it = tables_.find(i); it != tables_.end()) return it->second;

    const auto n = static_cast<std::size_t>(q_);
    Table t;
    t.values.resize(n);
    const BigInt Q(static_cast<long>(q_));
    if (i == 0) {
        t.scale = 1;
        for (auto& v : t.values) v = 1;
    } else if (i == 1) {
        // 2q ((r/q)) = 2r - q for r != 0
        t.scale = 2 * Q;
        t.values[0] = 0;
        for (std::size_t r = 1; r < n; ++r) t.values[r] = 2 * BigInt(static_cast<long>(r)) - Q;
    } else {
        BigInt L = 1;
        for (unsigned k = 0; k <= i; ++k) {
            const Rational b = bernoulli_number(k);
            if (!b.is_zero()) L = lcm(L, b.den());
        }
        // q^i B_i(r/q) = sum_k C(i,k) B_k q^k r^{i-k}; coeff[m] multiplies r^m
        std::vector<BigInt> coeff(i + 1);
        for (unsigned k = 0; k <= i; ++k) {
            const Rational c = Rational(L * binomial(i, k) * pow(Q, k)) * bernoulli_number(k);
            coeff[i - k] = c.num();  // integral by choice of L
        }
        t.scale = L * pow(Q, i);
        for (std::size_t r = 0; r < n; ++r) {
            const BigInt R(static_cast<long>(r));
            BigInt acc = 0;
            for (unsigned m = i + 1; m-- > 0;) acc = acc * R + coeff[m];
            t.values[r] = std::move(acc);
        }
    }
    return tables_.emplace(i, std::move(t)).first->second;
}

Rational DirectSumEvaluator::operator()(unsigned i, unsigned j, std::int64_t p) {
    const Table& ti = table(i);
    const Table& tj = table(j);
    std::int64_t pr = ((p % q_) + q_) % q_;
    BigInt acc = 0;
    std::int64_t idx = 0;
    for (std::int64_t r = 0; r < q_; ++r) {
        mpz_addmul(acc.get_mpz_t(), ti.values[static_cast<std::size_t>(r)].get_mpz_t(),
                   tj.values[static_cast<std::size_t>(idx)].get_mpz_t());
        idx += pr;
        if (idx >= q_) idx -= q_;
    }
    return Rational(acc, ti.scale * tj.scale);
}

Rational s_direct(unsigned i, unsigned j, const BigInt& p, const BigInt& q) {
    const SumParams params = SumParams::make(i, j, p, q);
    return s_direct(params);
}

Rational s_direct(const SumParams& params) {
    DirectSumEvaluator eval(to_int64(params.q));
    return eval(params.i, params.j, to_int64(params.p));
}

// ---------------------------------------------------------------------------
// Hickerson

Rational hickerson_classical(const BigInt& p, const BigInt& q, Parity parity) {
    if (q == 1) return Rational(0);
    const auto cf = cf_expand(p, q, parity);
    const ConvergentTable table(cf);
    const int n = cf.length();
    BigInt alternating = 0;
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1) alternating += cf.a(i);
        else alternating -= cf.a(i);
    }
    const BigInt& q_prev = table.q(n - 1);
    if (n % 2 == 0) {
        return Rational(p - q_prev, q) + Rational(alternating);
    }
    return Rational(p + q_prev, q) + Rational(alternating - 3);
}

// ---------------------------------------------------------------------------
// Closed form

ClosedForm::ClosedForm(const BigInt& p, const BigInt& q, Parity parity) : q_(q) {
    require_coprime(p, q);
    p_ = reduce_mod(p, q);
    ContinuedFraction cf;
    if (q == 1) {
        cf = ContinuedFraction{{}, 0, 1};
    } else {
        cf = cf_expand(p_, q_, parity);
    }
    const ConvergentTable table(cf);
    terms_ = cf.terms;
    n_ = table.n();
    for (int k = -1; k <= n_; ++k) {
        const int sign = neg1_pow(k < 0 ? -k : k);
        qk_.push_back(table.q(k));
        dk_.push_back(table.D(k));
        m_.push_back(sign * table.q(k));
        l_.push_back(sign * table.D(k));
    }
    s_entry_ = neg1_pow(n_ - 1 < 0 ? 1 : n_ - 1) * table.q(n_ - 1);
    const std::size_t rows = m_.size();
    mpow_.resize(rows);
    lpow_.resize(rows);
    qpow_.resize(rows);
    dpow_.resize(rows);
}

const BigInt& ClosedForm::cached_pow(std::vector<std::vector<BigInt>>& cache, const std::vector<BigInt>& base,
                                     int k, unsigned e) {
    auto& powers = cache.at(static_cast<std::size_t>(k + 1));
    if (powers.empty()) powers.emplace_back(1);
    while (powers.size() <= e) powers.push_back(powers.back() * base[static_cast<std::size_t>(k + 1)]);
    return powers[e];
}

const BigInt& ClosedForm::mpow(int k, unsigned e) { return cached_pow(mpow_, m_, k, e); }
const BigInt& ClosedForm::lpow(int k, unsigned e) { return cached_pow(lpow_, l_, k, e); }
const BigInt& ClosedForm::qpow(int k, unsigned e) { return cached_pow(qpow_, qk_, k, e); }
const BigInt& ClosedForm::dpow(int k, unsigned e) { return cached_pow(dpow_, dk_, k, e); }

void require_even_weight(unsigned e, unsigned f) {
    if (e == 0 || f == 0) {
        throw PreconditionError("indices must be positive, got (" + std::to_string(e) + ", " + std::to_string(f) + ")");
    }
    if ((e + f) % 2 != 0) {
        throw PreconditionError("weight e+f must be even, got " + std::to_string(e + f));
    }
}

namespace {

// Shared driver for the two algebraically equivalent sI evaluations. `f_term(k, a, b, i)`
// and `g_term(k, a, b, i)` return the integral k-summands of f_k and g_k.
Rational integral_part_impl(unsigned e, unsigned f, int n, const std::function<BigInt(int, unsigned, unsigned, unsigned)>& f_term,
                            const std::function<BigInt(int, unsigned, unsigned, unsigned)>& g_term) {
    require_even_weight(e, f);
    const unsigned N = e + f;
    const Rational bn_over_nfact = bernoulli_number(N) / Rational(factorial(N));

    std::vector<Rational> bern_pair(N - 1);
    for (unsigned i = 0; i + 2 <= N; ++i) {
        bern_pair[i] = bernoulli_number(i + 1) / Rational(BigInt(i + 1)) * bernoulli_number(N - i - 1) /
                       Rational(BigInt(N - i - 1));
    }

    Rational total;
    for (unsigned alpha = 0; alpha < e; ++alpha) {
        const unsigned beta = e - 1 - alpha;
        const BigInt ab_fact = factorial(alpha) * factorial(beta);
        for (unsigned i = alpha; i + beta + 2 <= N; ++i) {
            BigInt fsum = 0;
            for (int k = -1; k <= n - 1; ++k) {
                BigInt t = f_term(k, alpha, beta, i);
                if ((k + 1) % 2 != 0) t = -t;
                fsum += t;
            }
            if (fsum != 0) {
                total += bern_pair[i] * Rational(fsum, ab_fact * factorial(N - 2 - i - beta) * factorial(i - alpha));
            }
            BigInt gsum = 0;
            for (int k = 0; k <= n - 1; ++k) {
                BigInt t = g_term(k, alpha, beta, i);
                if (k % 2 != 0) t = -t;
                gsum += t;
            }
            if (gsum != 0) {
                const BigInt weight = factorial(N - i - 2) / factorial(N - 2 - i - beta) * factorial(i) / factorial(i - alpha);
                total += bn_over_nfact * Rational(gsum * weight, ab_fact);
            }
        }
    }
    return Rational(factorial(e) * factorial(f)) * total;
}

}  // namespace

Rational ClosedForm::integral_part(unsigned e, unsigned f) {
    const unsigned N = e + f;
    auto f_term = [&](int k, unsigned a, unsigned b, unsigned i) {
        return BigInt(mpow(k, b) * mpow(k + 1, a) * lpow(k, N - 2 - i - b) * lpow(k + 1, i - a));
    };
    auto g_term = [&](int k, unsigned a, unsigned b, unsigned i) {
        return BigInt(this->a(k + 1) * mpow(k - 1, b) * mpow(k + 1, a) * lpow(k - 1, N - i - 2 - b) * lpow(k + 1, i - a));
    };
    return integral_part_impl(e, f, n_, f_term, g_term);
}

Rational ClosedForm::integral_part_display(unsigned e, unsigned f) {
    const unsigned N = e + f;
    // Same sums with q_k, D_k; the (-1)^k signs of m_k, l_k collapse to (-1)^i in f_k
    // and cancel completely in g_k because N is even.
    auto f_term = [&](int k, unsigned a, unsigned b, unsigned i) {
        BigInt t = qpow(k, b) * qpow(k + 1, a) * dpow(k, N - 2 - i - b) * dpow(k + 1, i - a);
        return (i % 2 == 0) ? t : BigInt(-t);
    };
    auto g_term = [&](int k, unsigned a, unsigned b, unsigned i) {
        return BigInt(this->a(k + 1) * qpow(k - 1, b) * qpow(k + 1, a) * dpow(k - 1, N - i - 2 - b) * dpow(k + 1, i - a));
    };
    return integral_part_impl(e, f, n_, f_term, g_term);
}

Rational ClosedForm::fractional_part(unsigned e, unsigned f) const {
    require_even_weight(e, f);
    const unsigned N = e + f;
    const Rational lead = Rational(factorial(e) * factorial(f)) * bernoulli_number(N) / Rational(factorial(N));
    return lead * Rational(binomial(N - 1, f) * pow(p_, f) + binomial(N - 1, e) * pow(s_entry_, e));
}

DedekindDecomposition ClosedForm::decompose(unsigned e, unsigned f) {
    DedekindDecomposition out;
    out.sI = integral_part(e, f);
    out.sR = fractional_part(e, f);
    out.delta_term = delta(e, f) != 0 ? bernoulli_number(e) * bernoulli_number(f) : Rational(0);
    const unsigned N = e + f;
    out.reconstructed = out.sI / Rational(pow(q_, N - 2)) + out.sR / Rational(pow(q_, N - 1)) - out.delta_term;
    out.n = n_;
    out.s_entry = s_entry_;
    return out;
}

DedekindDecomposition s_decomposed(unsigned e, unsigned f, const BigInt& p, const BigInt& q, Parity parity) {
    require_even_weight(e, f);
    ClosedForm form(p, q, parity);
    return form.decompose(e, f);
}

// ---------------------------------------------------------------------------
// Weight 4 and 6 tables

Rational s_integral_table(unsigned e, unsigned f, const BigInt& p, const BigInt& q, Parity parity) {
    require_even_weight(e, f);
    if (e + f != 4 && e + f != 6) {
        throw PreconditionError("table formulas exist only for weight 4 and 6, got " + std::to_string(e + f));
    }
    ClosedForm form(p, q, parity);
    const int n = form.n();
    auto Q = [&](int k) -> const BigInt& { return form.q_k(k); };
    auto D = [&](int k) -> const BigInt& { return form.D_k(k); };

    // outer(k) summed over k = -1..n-1 with sign (-1)^{k+1}; inner(k) summed over
    // k = 0..n-1 with sign (-1)^k a_{k+1}.
    auto outer = [&](auto&& term) {
        BigInt s = 0;
        for (int k = -1; k <= n - 1; ++k) s += ((k + 1) % 2 == 0) ? BigInt(term(k)) : BigInt(-term(k));
        return s;
    };
    auto inner = [&](auto&& term) {
        BigInt s = 0;
        for (int k = 0; k <= n - 1; ++k) {
            BigInt t = form.a(k + 1) * BigInt(term(k));
            s += (k % 2 == 0) ? t : BigInt(-t);
        }
        return s;
    };
    auto rat = [](const BigInt& num, long den) { return Rational(num, BigInt(den)); };

    switch (e * 10 + f) {
        case 22:
            // first sum carries (-1)^k, like the (3,1) and (1,3) rows
            return rat(-outer([&](int k) -> BigInt { return D(k + 1) * Q(k) + D(k) * Q(k + 1); }), 36) -
                   rat(inner([&](int k) -> BigInt {
                           return Q(k + 1) * (D(k - 1) + 2 * D(k + 1)) + Q(k - 1) * (2 * D(k - 1) + D(k + 1));
                       }),
                       180);
        case 31:
            return rat(-outer([&](int k) -> BigInt { return Q(k) * Q(k + 1); }), 24) -
                   rat(inner([&](int k) -> BigInt { return Q(k + 1) * Q(k + 1) + Q(k - 1) * Q(k + 1) + Q(k - 1) * Q(k - 1); }),
                       120);
        case 13:
            return rat(-outer([&](int k) -> BigInt { return D(k) * D(k + 1); }), 24) -
                   rat(inner([&](int k) -> BigInt { return D(k + 1) * D(k + 1) + D(k - 1) * D(k + 1) + D(k - 1) * D(k - 1); }),
                       120);
        case 51:
            return rat(outer([&](int k) -> BigInt { return Q(k + 1) * pow(Q(k), 3) + Q(k) * pow(Q(k + 1), 3); }), 72) +
                   rat(inner([&](int k) -> BigInt {
                           const BigInt &u = Q(k - 1), &v = Q(k + 1);
                           return pow(u, 4) + pow(u, 3) * v + u * u * v * v + u * pow(v, 3) + pow(v, 4);
                       }),
                       252);
        case 42:
            return rat(outer([&](int k) -> BigInt {
                           return D(k + 1) * pow(Q(k), 3) + 3 * D(k) * Q(k) * Q(k) * Q(k + 1) +
                                  3 * D(k + 1) * Q(k) * Q(k + 1) * Q(k + 1) + D(k) * pow(Q(k + 1), 3);
                       }),
                       180) +
                   rat(inner([&](int k) -> BigInt {
                           const BigInt &dm = D(k - 1), &dp = D(k + 1), &qm = Q(k - 1), &qp = Q(k + 1);
                           return 4 * dm * pow(qm, 3) + dp * pow(qm, 3) + 3 * dm * qm * qm * qp + 2 * dp * qm * qm * qp +
                                  2 * dm * qm * qp * qp + 3 * dp * qm * qp * qp + dm * pow(qp, 3) + 4 * dp * pow(qp, 3);
                       }),
                       630);
        case 33:
            return rat(outer([&](int k) -> BigInt {
                           return D(k) * D(k + 1) * Q(k) * Q(k) + D(k) * D(k) * Q(k) * Q(k + 1) +
                                  D(k + 1) * D(k + 1) * Q(k) * Q(k + 1) + D(k) * D(k + 1) * Q(k + 1) * Q(k + 1);
                       }),
                       80) +
                   rat(inner([&](int k) -> BigInt {
                           const BigInt &dm = D(k - 1), &dp = D(k + 1), &qm = Q(k - 1), &qp = Q(k + 1);
                           return 6 * dm * dm * qm * qm + 3 * dm * dp * qm * qm + dp * dp * qm * qm + 3 * dm * dm * qm * qp +
                                  4 * dm * dp * qm * qp + 3 * dp * dp * qm * qp + dm * dm * qp * qp + 3 * dm * dp * qp * qp +
                                  6 * dp * dp * qp * qp;
                       }),
                       840);
        case 24:
            return rat(outer([&](int k) -> BigInt {
                           return 3 * D(k) * D(k) * D(k + 1) * Q(k) + pow(D(k + 1), 3) * Q(k) + pow(D(k), 3) * Q(k + 1) +
                                  3 * D(k) * D(k + 1) * D(k + 1) * Q(k + 1);
                       }),
                       180) +
                   rat(inner([&](int k) -> BigInt {
                           const BigInt &dm = D(k - 1), &dp = D(k + 1), &qm = Q(k - 1), &qp = Q(k + 1);
                           return 4 * pow(dm, 3) * qm + 3 * dm * dm * dp * qm + 2 * dm * dp * dp * qm + pow(dp, 3) * qm +
                                  pow(dm, 3) * qp + 2 * dm * dm * dp * qp + 3 * dm * dp * dp * qp + 4 * pow(dp, 3) * qp;
                       }),
                       630);
        case 15:
            // no overall factor of q: the row is homogeneous of the same degree as (5,1)
            return rat(outer([&](int k) -> BigInt { return D(k + 1) * pow(D(k), 3) + D(k) * pow(D(k + 1), 3); }), 72) +
                   rat(inner([&](int k) -> BigInt {
                           const BigInt &u = D(k - 1), &v = D(k + 1);
                           return pow(u, 4) + pow(u, 3) * v + u * u * v * v + u * pow(v, 3) + pow(v, 4);
                       }),
                       252);
        default:
            throw PreconditionError("no table row for (" + std::to_string(e) + ", " + std::to_string(f) + ")");
    }
}

// ---------------------------------------------------------------------------
// Normalization constants and the fractional certificate

NormConstants norm_constants(unsigned i, unsigned j) {
    if (i == 0 || j == 0) {
        throw PreconditionError("indices must be positive");
    }
    const unsigned N = i + j;
    if (N % 2 != 0) {
        throw PreconditionError("weight " + std::to_string(N) + " is odd; B_N has no reduced fraction with beta > 0");
    }
    const auto [alpha, beta] = reduced_bernoulli(N);
    BigInt r = 1;
    for (unsigned t = 1; t + 2 <= N; t += 2) {
        const Rational v = Rational(beta * binomial(N, t + 1)) * bernoulli_number(t + 1) * bernoulli_number(N - t - 1);
        r = lcm(r, v.den());
    }
    return NormConstants{N, alpha, beta, r, binomial(N, i) * beta * r};
}

BigInt mod_inverse(const BigInt& p, const BigInt& q) {
    if (q == 1) return 0;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0) {
        throw PreconditionError(p.get_str() + " is not invertible mod " + q.get_str());
    }
    return mod_floor(inv, q);
}

Rational fractional_certificate(unsigned i, unsigned j, const BigInt& p, const BigInt& q) {
    require_coprime(p, q);
    const NormConstants nc = norm_constants(i, j);
    if (q == 1) return Rational(0);
    const BigInt pr = reduce_mod(p, q);
    const BigInt pinv = mod_inverse(pr, q);
    const unsigned N = i + j;
    const BigInt num = nc.alpha * nc.r * (pow(pinv, i) * binomial(N - 1, i) + pow(pr, j) * binomial(N - 1, j));
    return Rational(num, q);
}

}  // namespace gdsum
