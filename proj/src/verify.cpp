#include "gdsum/verify.hpp"

#include "gdsum/bernoulli.hpp"
#include "gdsum/contfrac.hpp"
#include "gdsum/dedekind.hpp"
#include "gdsum/equidist.hpp"
#include "gdsum/toddcone.hpp"
#include "gdsum/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gdsum {

namespace {

class Timer {
public:
    explicit Timer(SuiteReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    void stop() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    SuiteReport& report_;
    std::chrono::steady_clock::time_point start_;
};

std::string where(unsigned e, unsigned f, long p, long q) {
    return "(e,f)=(" + std::to_string(e) + "," + std::to_string(f) + ") p=" + std::to_string(p) +
           " q=" + std::to_string(q);
}

std::string where(const HyperbolicMatrix& M, unsigned N) {
    return "M=(" + M.p.get_str() + "," + M.q.get_str() + "," + M.r.get_str() + "," + M.s.get_str() +
           ") N=" + std::to_string(N);
}

// Runs body, turning an exception into a recorded failure.
template <class Body>
void guarded(Check& c, const std::string& what, Body body) {
    try {
        body();
    } catch (const std::exception& ex) {
        c.record(false, what + ": " + ex.what());
    }
}

}  // namespace

void Check::record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
}

bool SuiteReport::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const Check& SuiteReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no check named " + name + " in suite " + suite);
}

SuiteReport verify_oracle(long q_max, unsigned max_weight) {
    SuiteReport report{"oracle", {{"reconstruction"}, {"integrality"}}};
    Timer timer(report);
    Check& eq = report.checks[0];
    Check& integral = report.checks[1];

    std::vector<std::pair<unsigned, unsigned>> weights;
    std::vector<BigInt> Rs;
    for (unsigned N = 2; N <= max_weight; N += 2) {
        for (unsigned e = 1; e < N; ++e) {
            weights.emplace_back(e, N - e);
            Rs.push_back(norm_constants(e, N - e).R);
        }
    }
    for (long q = 2; q <= q_max; ++q) {
        DirectSumEvaluator direct(q);
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ClosedForm cf(p, q);
            for (std::size_t w = 0; w < weights.size(); ++w) {
                const auto [e, f] = weights[w];
                guarded(eq, where(e, f, p, q), [&] {
                    const DedekindDecomposition d = cf.decompose(e, f);
                    eq.record(d.reconstructed == direct(e, f, p), where(e, f, p, q));
                    const Rational R(Rs[w]);
                    integral.record((R * d.sI).is_integer() && (R * d.sR).is_integer(), where(e, f, p, q));
                });
            }
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_hickerson(long q_max) {
    SuiteReport report{"hickerson", {{"classical"}}};
    Timer timer(report);
    Check& c = report.checks[0];
    for (long q = 2; q <= q_max; ++q) {
        DirectSumEvaluator direct(q);
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational twelve_s = Rational(12) * direct(1, 1, p);
            for (Parity par : {Parity::even, Parity::odd}) {
                guarded(c, where(1, 1, p, q), [&] {
                    c.record(hickerson_classical(p, q, par) == twelve_s, where(1, 1, p, q));
                });
            }
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_tables(long q_max) {
    SuiteReport report{"tables", {{"table_rows"}}};
    Timer timer(report);
    Check& c = report.checks[0];
    const unsigned rows[][2] = {{2, 2}, {3, 1}, {1, 3}, {5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}};
    for (long q = 2; q <= q_max; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (Parity par : {Parity::even, Parity::odd}) {
                for (auto [e, f] : rows) {
                    guarded(c, where(e, f, p, q), [&] {
                        c.record(s_integral_table(e, f, p, q, par) == s_decomposed(e, f, p, q, par).sI,
                                 where(e, f, p, q));
                    });
                }
            }
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_todd(long q_max, long numeric_q_max, unsigned max_degree) {
    SuiteReport report{"todd", {{"homogeneous"}, {"numeric"}}};
    Timer timer(report);
    Check& hom = report.checks[0];
    Check& num = report.checks[1];
    for (long q = 1; q <= q_max; ++q) {
        for (long p = (q == 1 ? 0 : 1); p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (unsigned N = 2; N <= 6; N += 2) {
                guarded(hom, where(0, N, p, q), [&] {
                    const HomogeneousPoly h = todd_homogeneous(N, p, q);
                    bool ok = true;
                    for (unsigned a = 0; a <= N; ++a) {
                        ok = ok && h.coefficient(a, N - a) ==
                                       todd_coefficient(a, N - a, p, q) / Rational(factorial(a) * factorial(N - a));
                    }
                    hom.record(ok, "N=" + std::to_string(N) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
                });
            }
            if (q <= numeric_q_max) {
                guarded(num, where(0, max_degree, p, q), [&] {
                    const double dev = todd_numeric_check(p, q, max_degree);
                    num.worst = std::max(num.worst, dev);
                    num.record(dev < 1e-9, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                               " deviation=" + std::to_string(dev));
                });
            }
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_zeta(const std::vector<HyperbolicMatrix>& matrices, unsigned max_N) {
    SuiteReport report{"zeta", {{"siegel_meyer"}, {"cancellation"}}};
    Timer timer(report);
    Check& agree = report.checks[0];
    Check& cancel = report.checks[1];
    for (const auto& M : matrices) {
        for (unsigned N = 1; N <= max_N; ++N) {
            guarded(agree, where(M, N), [&] { agree.record(zeta_siegel(M, N) == zeta_meyer_higher(M, N), where(M, N)); });
            guarded(cancel, where(M, N), [&] { cancel.record(cancellation_T(M, N).is_zero(), where(M, N)); });
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_zeta_fields(const std::vector<long>& discriminants, unsigned max_N) {
    std::vector<HyperbolicMatrix> matrices;
    SuiteReport setup{"zeta", {{"ideal_matrix"}}};
    for (long D : discriminants) {
        guarded(setup.checks[0], "D=" + std::to_string(D), [&] {
            const IdealMatrix im = ideal_matrix(D);
            setup.checks[0].record(is_fixed_point(im.matrix, im.omega()), "D=" + std::to_string(D));
            matrices.push_back(im.matrix);
        });
    }
    SuiteReport report = verify_zeta(matrices, max_N);
    report.checks.insert(report.checks.begin(), setup.checks[0]);
    return report;
}

SuiteReport verify_congruence(long q_max, unsigned max_weight) {
    SuiteReport report{"congruence", {{"certificate"}}};
    Timer timer(report);
    Check& c = report.checks[0];
    std::vector<std::pair<unsigned, unsigned>> weights;
    std::vector<NormConstants> consts;
    for (unsigned N = 2; N <= max_weight; N += 2) {
        for (unsigned i = 1; i < N; ++i) {
            weights.emplace_back(i, N - i);
            consts.push_back(norm_constants(i, N - i));
        }
    }
    for (long q = 2; q <= q_max; ++q) {
        DirectSumEvaluator direct(q);
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (std::size_t w = 0; w < weights.size(); ++w) {
                const auto [i, j] = weights[w];
                guarded(c, where(i, j, p, q), [&] {
                    const NormConstants& nc = consts[w];
                    const Rational v = Rational(nc.R) * pow(Rational(BigInt(q)), nc.N - 2) * direct(i, j, p);
                    c.record((v - fractional_certificate(i, j, p, q)).is_integer(), where(i, j, p, q));
                });
            }
        }
    }
    timer.stop();
    return report;
}

SuiteReport verify_odd_vanishing(std::size_t count, long q_max, std::uint64_t seed) {
    SuiteReport report{"odd_vanishing", {{"odd_weight_zero"}}};
    Timer timer(report);
    Check& c = report.checks[0];
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> qd(1, q_max);
    std::uniform_int_distribution<unsigned> wd(0, 9);
    while (c.cases < count) {
        const long q = qd(rng);
        const long p = std::uniform_int_distribution<long>(-3 * q, 3 * q)(rng);
        if (std::gcd(p, q) != 1) continue;
        const unsigned i = wd(rng);
        unsigned j = wd(rng);
        if ((i + j) % 2 == 0) j = j == 0 ? 1 : j - 1;
        guarded(c, where(i, j, p, q), [&] { c.record(s_direct(i, j, p, q).is_zero(), where(i, j, p, q)); });
    }
    timer.stop();
    return report;
}

SuiteReport verify_weyl(long x, long prime_max, double threshold, unsigned workers) {
    SuiteReport report{"weyl", {{"weyl_bound"}, {"weyl_trend"}, {"weil_ratio"}}};
    Timer timer(report);
    Check& bound = report.checks[0];
    Check& trend = report.checks[1];
    Check& weil = report.checks[2];
    const std::vector<std::pair<long, long>> ms = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    const std::vector<std::pair<unsigned, unsigned>> ijs = {{1, 1}, {1, 3}, {2, 2}};
    const std::vector<std::int64_t> cps = {std::max<long>(2, x / 12), std::max<long>(2, x / 6), std::max<long>(2, x / 2), x};
    for (auto [m1, m2] : ms) {
        for (auto [i, j] : ijs) {
            const std::string tag = "m=(" + std::to_string(m1) + "," + std::to_string(m2) + ") (i,j)=(" +
                                    std::to_string(i) + "," + std::to_string(j) + ")";
            guarded(bound, tag, [&] {
                const auto sums = weyl_sums(m1, m2, i, j, cps, workers);
                const double last = std::abs(sums.back().value);
                bound.worst = std::max(bound.worst, last);
                bound.record(last < threshold, tag + " |E|=" + std::to_string(last));
                int drops = 0;
                for (std::size_t k = 0; k + 1 < sums.size(); ++k) {
                    drops += std::abs(sums[k + 1].value) < std::abs(sums[k].value) ? 1 : 0;
                }
                trend.record(drops >= 2, tag + " decreasing steps=" + std::to_string(drops));
            });
            guarded(weil, tag, [&] {
                const WeilReport w = weil_check(m1, m2, i, j, prime_max);
                weil.worst = std::max(weil.worst, w.max_ratio / w.C);
                weil.record(w.pass(), tag + " ratio=" + std::to_string(w.max_ratio) + " at P=" +
                                          std::to_string(w.worst_prime) + " C=" + std::to_string(w.C));
            });
        }
    }
    timer.stop();
    return report;
}

std::vector<HyperbolicMatrix> sample_hyperbolic_matrices(std::size_t count) {
    std::vector<HyperbolicMatrix> out;
    for (long t = 3; out.size() < count; ++t) {
        for (long q = 2; q < 40 && out.size() < count; ++q) {
            for (long p = 1; p < q && out.size() < count; ++p) {
                const long s = t - p;
                if (std::gcd(p, q) != 1 || std::labs(s) >= q || (p * s - 1) % q != 0) continue;
                out.push_back(HyperbolicMatrix{p, q, (p * s - 1) / q, s});
            }
        }
    }
    return out;
}

}  // namespace gdsum
