#include "gdsum/equidist.hpp"

#include "gdsum/bernoulli.hpp"
#include "gdsum/dedekind.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>
#include <utility>

namespace gdsum {

namespace {

using i128 = __int128;

std::int64_t mod(std::int64_t a, std::int64_t q) {
    const std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

std::int64_t mod(i128 a, std::int64_t q) {
    auto r = static_cast<std::int64_t>(a % q);
    return r < 0 ? r + q : r;
}

constexpr std::int64_t kSmallModulus = std::int64_t{1} << 31;

// a, b already reduced mod q.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t q) {
    if (q < kSmallModulus) return a * b % q;
    return mod(static_cast<i128>(a) * b, q);
}

std::int64_t powmod(std::int64_t a, unsigned e, std::int64_t q) {
    std::int64_t result = 1 % q;
    a = mod(a, q);
    while (e > 0) {
        if (e & 1U) result = mulmod(result, a, q);
        a = mulmod(a, a, q);
        e >>= 1U;
    }
    return result;
}

// Inverse of a mod q, or 0 when gcd(a, q) != 1 (q > 1).
std::int64_t inverse_or_zero(std::int64_t a, std::int64_t q) {
    std::int64_t r0 = q, r1 = mod(a, q), t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        r0 = std::exchange(r1, r0 - k * r1);
        t0 = std::exchange(t1, t0 - k * t1);
    }
    return r0 == 1 ? mod(t0, q) : 0;
}

void require_even(unsigned i, unsigned j) {
    if (i == 0 || j == 0 || (i + j) % 2 != 0) {
        throw PreconditionError("need i, j >= 1 with i + j even, got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j));
    }
}

// alpha_N r_N C(N-1, i) and alpha_N r_N C(N-1, j) as machine integers.
struct CertificateCoeffs {
    unsigned i, j;
    std::int64_t ci, cj;

    CertificateCoeffs(unsigned i_, unsigned j_) : i(i_), j(j_) {
        require_even(i, j);
        const NormConstants nc = norm_constants(i, j);
        const unsigned N = i + j;
        const BigInt a = nc.alpha * nc.r;
        const BigInt bi = a * binomial(N - 1, i);
        const BigInt bj = a * binomial(N - 1, j);
        if (!bi.fits_slong_p() || !bj.fits_slong_p()) throw PreconditionError("weight too large for residue arithmetic");
        ci = bi.get_si();
        cj = bj.get_si();
    }

    [[nodiscard]] std::int64_t residue(std::int64_t p, std::int64_t q) const {
        return q == 1 ? 0 : residue(p, inverse_or_zero(p, q), q);
    }

    [[nodiscard]] std::int64_t residue(std::int64_t p, std::int64_t pinv, std::int64_t q) const {
        const std::int64_t v = mulmod(mod(ci, q), powmod(pinv, i, q), q) + mulmod(mod(cj, q), powmod(p, j, q), q);
        return v % q;
    }
};

// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
    void add(std::complex<double> v) {
        add_one(re_, cre_, v.real());
        add_one(im_, cim_, v.imag());
    }
    [[nodiscard]] std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_one(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

std::complex<double> e_frac(std::int64_t r, std::int64_t q) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

constexpr std::int64_t kBlock = 16;

// Runs body(q) for q in [lo, hi] on up to `workers` threads in blocks of kBlock.
template <class Body>
void parallel_over_q(std::int64_t lo, std::int64_t hi, unsigned workers, Body body) {
    if (hi < lo) return;
    if (workers == 0) workers = default_workers();
    const std::int64_t blocks = (hi - lo) / kBlock + 1;
    std::atomic<std::int64_t> next{0};
    auto run = [&] {
        for (std::int64_t b = next++; b < blocks; b = next++) {
            const std::int64_t start = lo + b * kBlock;
            const std::int64_t stop = std::min(hi, start + kBlock - 1);
            for (std::int64_t q = start; q <= stop; ++q) body(q);
        }
    };
    const auto count = static_cast<unsigned>(std::min<std::int64_t>(workers, blocks));
    if (count <= 1) {
        run();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

}  // namespace

std::int64_t certificate_residue(unsigned i, unsigned j, std::int64_t p, std::int64_t q) {
    if (q <= 0 || std::gcd(p, q) != 1) {
        throw PreconditionError("p=" + std::to_string(p) + " and q=" + std::to_string(q) + " are not a coprime pair");
    }
    return CertificateCoeffs(i, j).residue(mod(p, q), q);
}

GraphPoint graph_point(unsigned i, unsigned j, const BigInt& p, const BigInt& q) {
    require_even(i, j);
    if (sgn(p) <= 0 || p >= q || gcd(p, q) != 1) {
        throw PreconditionError("need coprime 0 < p < q, got p=" + p.get_str() + ", q=" + q.get_str());
    }
    if (!q.fits_slong_p()) throw PreconditionError("q too large for graph_point");
    const NormConstants nc = norm_constants(i, j);
    const Rational v = Rational(nc.R) * pow(Rational(q), nc.N - 2) * s_direct(i, j, p, q);
    GraphPoint gp{Rational(p, q), v.frac()};
    const std::int64_t Y = certificate_residue(i, j, p.get_si(), q.get_si());
    if (gp.y != Rational(BigInt(static_cast<long>(Y)), q)) {
        throw std::logic_error("certificate residue disagrees with the direct sum at p=" + p.get_str() +
                               ", q=" + q.get_str());
    }
    return gp;
}

void LaurentExponent::normalize() {
    std::map<int, std::int64_t> merged;
    for (const auto& [c, e] : terms) merged[e] += c;
    terms.clear();
    for (const auto& [e, c] : merged) {
        if (c != 0) terms.emplace_back(c, e);
    }
}

LaurentExponent LaurentExponent::for_graph(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j) {
    const CertificateCoeffs cc(i, j);
    LaurentExponent f;
    f.terms = {{m1, 1}, {m2 * cc.ci, -static_cast<int>(i)}, {m2 * cc.cj, static_cast<int>(j)}};
    f.normalize();
    return f;
}

std::complex<double> exp_sum_K(const LaurentExponent& f, std::int64_t q) {
    if (q <= 0) throw PreconditionError("q must be positive");
    if (q == 1) return {1.0, 0.0};
    CompensatedSum acc;
    for (std::int64_t x = 1; x < q; ++x) {
        const std::int64_t xinv = inverse_or_zero(x, q);
        if (xinv == 0) continue;
        i128 value = 0;
        for (const auto& [c, e] : f.terms) {
            const std::int64_t base = e >= 0 ? x : xinv;
            value += static_cast<i128>(mod(c, q)) * powmod(base, static_cast<unsigned>(std::abs(e)), q);
            value %= q;
        }
        acc.add(e_frac(mod(value, q), q));
    }
    return acc.value();
}

unsigned default_workers() {
    if (const char* env = std::getenv("GDSUM_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<WeylCheckpoint> weyl_sums(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j,
                                      std::vector<std::int64_t> checkpoints, unsigned workers) {
    if (m1 == 0 && m2 == 0) throw PreconditionError("m = (0, 0) is the trivial character");
    if (checkpoints.empty()) throw PreconditionError("no checkpoints requested");
    std::sort(checkpoints.begin(), checkpoints.end());
    if (checkpoints.front() < 2) throw PreconditionError("checkpoints must be >= 2");
    const CertificateCoeffs cc(i, j);
    const std::int64_t top = checkpoints.back();

    std::vector<std::complex<double>> per_q(static_cast<std::size_t>(top) + 1);
    std::vector<std::int64_t> units(static_cast<std::size_t>(top) + 1, 0);
    parallel_over_q(2, top, workers, [&](std::int64_t q) {
        CompensatedSum acc;
        std::int64_t count = 0;
        const std::int64_t a1 = mod(m1, q), a2 = mod(m2, q);
        for (std::int64_t p = 1; p < q; ++p) {
            const std::int64_t pinv = inverse_or_zero(p, q);
            if (pinv == 0) continue;
            const std::int64_t Y = cc.residue(p, pinv, q);
            acc.add(e_frac((mulmod(a1, p, q) + mulmod(a2, Y, q)) % q, q));
            ++count;
        }
        per_q[static_cast<std::size_t>(q)] = acc.value();
        units[static_cast<std::size_t>(q)] = count;
    });

    std::vector<WeylCheckpoint> out;
    CompensatedSum total;
    std::int64_t pairs = 0;
    std::size_t next = 0;
    for (std::int64_t q = 2; q <= top; ++q) {
        total.add(per_q[static_cast<std::size_t>(q)]);
        pairs += units[static_cast<std::size_t>(q)];
        while (next < checkpoints.size() && checkpoints[next] == q) {
            out.push_back({q, pairs, total.value() / static_cast<double>(pairs)});
            ++next;
        }
    }
    return out;
}

std::complex<double> weyl_sum(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j, std::int64_t x_max,
                              unsigned workers) {
    return weyl_sums(m1, m2, i, j, {x_max}, workers).front().value;
}

std::pair<unsigned, unsigned> weil_pole_orders(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j) {
    if (m1 == 0 && m2 == 0) throw PreconditionError("m = (0, 0) is the trivial character");
    const CertificateCoeffs cc(i, j);
    if (m2 == 0) return {0, 1};
    if (j > 1) return {i, j};
    // j = 1: the x-coefficient m1 + m2 alpha r C(N-1, 1) may cancel.
    return {i, (m1 + m2 * cc.cj == 0) ? 0U : 1U};
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t k = 2; k <= n; ++k) {
        if (composite[static_cast<std::size_t>(k)]) continue;
        out.push_back(k);
        for (std::int64_t m = k * k; m <= n; m += k) composite[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

WeilReport weil_check(std::int64_t m1, std::int64_t m2, unsigned i, unsigned j, std::int64_t prime_max) {
    const auto [v0, vinf] = weil_pole_orders(m1, m2, i, j);
    WeilReport report;
    report.v0 = v0;
    report.vinf = vinf;
    report.C = static_cast<double>(v0 + vinf);
    const LaurentExponent f = LaurentExponent::for_graph(m1, m2, i, j);
    for (std::int64_t P : primes_up_to(prime_max)) {
        const double ratio = std::abs(exp_sum_K(f, P)) / std::sqrt(static_cast<double>(P));
        ++report.primes;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.worst_prime = P;
        }
    }
    return report;
}

std::vector<ScanRecord> scan(unsigned i, unsigned j, std::int64_t q_max, unsigned workers) {
    const CertificateCoeffs cc(i, j);
    if (q_max < 2) return {};
    std::vector<std::vector<ScanRecord>> rows(static_cast<std::size_t>(q_max) + 1);
    parallel_over_q(2, q_max, workers, [&](std::int64_t q) {
        auto& bucket = rows[static_cast<std::size_t>(q)];
        const BigInt Q(static_cast<long>(q));
        for (std::int64_t p = 1; p < q; ++p) {
            const std::int64_t pinv = inverse_or_zero(p, q);
            if (pinv == 0) continue;
            const std::int64_t Y = cc.residue(p, pinv, q);
            bucket.push_back({q, p, GraphPoint{Rational(BigInt(static_cast<long>(p)), Q), Rational(BigInt(static_cast<long>(Y)), Q)}});
        }
    });
    std::vector<ScanRecord> out;
    for (auto& bucket : rows) {
        for (auto& r : bucket) out.push_back(std::move(r));
    }
    return out;
}

std::size_t scan_emit(unsigned i, unsigned j, std::int64_t q_max, const std::string& path, unsigned workers) {
    const std::vector<ScanRecord> rows = scan(i, j, q_max, workers);
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "q,p,x,y,x_exact,y_exact\n";
    for (const auto& r : rows) {
        out << r.q << ',' << r.p << ',' << r.point.x.decimal(12) << ',' << r.point.y.decimal(12) << ','
            << r.point.x.str() << ',' << r.point.y.str() << '\n';
    }
    out.flush();
    if (!out) throw IoError("failed while writing " + path);
    return rows.size();
}

}  // namespace gdsum
