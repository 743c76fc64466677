#include "gdsum/cli.hpp"

#include "gdsum/contfrac.hpp"
#include "gdsum/dedekind.hpp"
#include "gdsum/equidist.hpp"
#include "gdsum/quadfield.hpp"
#include "gdsum/toddcone.hpp"
#include "gdsum/verify.hpp"
#include "gdsum/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace gdsum {

namespace {

using json = nlohmann::ordered_json;

// Largest q for which the O(q) direct sum is evaluated alongside the closed form.
constexpr long kDirectLimit = 1'000'000;

class InvalidArgs : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BigInt parse_int(const std::string& text, const std::string& what) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0) throw InvalidArgs(what + ": not an integer: '" + text + "'");
    return v;
}

std::vector<BigInt> parse_list(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    if (out.size() != count) {
        throw InvalidArgs(what + ": expected " + std::to_string(count) + " comma-separated integers");
    }
    return out;
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    return Parity::canonical;
}

json unit_json(const FieldUnit& u) {
    return {{"x", u.x.get_str()},
            {"y", u.y.get_str()},
            {"norm", u.norm().get_str()},
            {"value", u.value().str()},
            {"approx", u.value().to_double()}};
}

json complex_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
}

json report_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.pass()}};
        if (c.worst != 0) j["worst"] = c.worst;
        if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
        checks.push_back(j);
    }
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

struct SumArgs {
    unsigned i = 0, j = 0;
    std::string p, q, parity = "canonical";
    bool decompose = false, as_json = false;
};

int cmd_sum(const SumArgs& a, std::ostream& out) {
    const BigInt p = parse_int(a.p, "--p");
    const BigInt q = parse_int(a.q, "--q");
    if (sgn(q) <= 0 || gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not a coprime pair");
    }
    const bool direct_ok = q <= kDirectLimit;
    const bool even = (a.i + a.j) % 2 == 0;
    std::optional<Rational> direct;
    if (direct_ok) direct = s_direct(a.i, a.j, p, q);

    json j = {{"s", nullptr}, {"sI", nullptr}, {"sR", nullptr}, {"R", nullptr}, {"check", nullptr}};
    Rational s;
    if (even && a.i > 0 && a.j > 0) {
        const DedekindDecomposition d = s_decomposed(a.i, a.j, p, q, parse_parity(a.parity));
        s = d.reconstructed;
        j["sI"] = d.sI.str();
        j["sR"] = d.sR.str();
        j["R"] = norm_constants(a.i, a.j).R.get_str();
        if (direct) j["check"] = (*direct == d.reconstructed);
    } else if (direct) {
        s = *direct;
    } else if (!even) {
        s = Rational(0);
    } else {
        throw PreconditionError("q too large for direct summation with index 0");
    }
    j["s"] = s.str();

    if (a.as_json) {
        out << j.dump(2) << '\n';
    } else if (a.decompose) {
        for (const char* key : {"s", "sI", "sR", "R", "check"}) {
            out << key << ' ' << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << '\n';
        }
    } else {
        out << s.str() << '\n';
    }
    return exit_ok;
}

int cmd_cf(const std::string& ps, const std::string& qs, const std::string& parity, bool as_json, std::ostream& out) {
    const BigInt p = parse_int(ps, "--p");
    const BigInt q = parse_int(qs, "--q");
    const ContinuedFraction cf = cf_expand(p, q, parse_parity(parity));
    const ConvergentTable t(cf);
    if (as_json) {
        json terms = json::array(), rows = json::array();
        for (const auto& a : cf.terms) terms.push_back(a.get_str());
        for (int k = -1; k <= t.n(); ++k) {
            rows.push_back({{"k", k}, {"p", t.p(k).get_str()}, {"q", t.q(k).get_str()}, {"D", t.D(k).get_str()}});
        }
        out << json{{"terms", terms}, {"table", rows}}.dump(2) << '\n';
        return exit_ok;
    }
    out << "k,p_k,q_k,D_k\n";
    for (int k = -1; k <= t.n(); ++k) out << k << ',' << t.p(k) << ',' << t.q(k) << ',' << t.D(k) << '\n';
    return exit_ok;
}

int cmd_todd(const std::string& ps, const std::string& qs, unsigned degree, bool numeric, std::ostream& out,
             std::ostream& err) {
    const BigInt p = parse_int(ps, "--p");
    const BigInt q = parse_int(qs, "--q");
    if (sgn(q) <= 0 || gcd(p, q) != 1) {
        throw PreconditionError("p=" + p.get_str() + " and q=" + q.get_str() + " are not a coprime pair");
    }
    if (q > kDirectLimit) throw PreconditionError("q too large for the coefficient table");
    out << "i,j,t_ij\n";
    for (unsigned i = 0; i <= degree; ++i) {
        for (unsigned j = 0; i + j <= degree; ++j) out << i << ',' << j << ',' << todd_coefficient(i, j, p, q).str() << '\n';
    }
    if (numeric) {
        const double dev = todd_numeric_check(p, q, degree);
        err << "numeric deviation " << std::scientific << std::setprecision(3) << dev << '\n';
        if (!(dev < 1e-9)) return exit_check_failed;
    }
    return exit_ok;
}

int cmd_unit(const std::string& Ds, std::ostream& out) {
    const BigInt D = parse_int(Ds, "--D");
    out << json{{"D", D.get_str()},
                {"fundamental", unit_json(fundamental_unit(D))},
                {"totally_positive", unit_json(totally_positive_unit(D))}}
               .dump(2)
        << '\n';
    return exit_ok;
}

QuadraticSurd parse_surd(const std::string& text, const BigInt& D, const std::string& what) {
    const auto v = parse_list(text, 3, what);
    if (sgn(v[2]) == 0) throw InvalidArgs(what + ": zero denominator");
    return QuadraticSurd(v[0], v[1], v[2], D);
}

int cmd_matrix(const std::string& Ds, const std::string& alpha, const std::string& beta, std::ostream& out) {
    const BigInt D = parse_int(Ds, "--D");
    if (alpha.empty() != beta.empty()) throw InvalidArgs("--alpha and --beta go together");
    const IdealMatrix im = alpha.empty()
                               ? ideal_matrix(D)
                               : ideal_matrix(D, parse_surd(alpha, D, "--alpha"), parse_surd(beta, D, "--beta"));
    const HyperbolicMatrix& M = im.matrix;
    out << json{{"D", D.get_str()},
                {"p", M.p.get_str()},
                {"q", M.q.get_str()},
                {"r", M.r.get_str()},
                {"s", M.s.get_str()},
                {"trace", M.trace().get_str()},
                {"det", M.det().get_str()},
                {"alpha", im.alpha.str()},
                {"beta", im.beta.str()},
                {"omega", im.omega().str()},
                {"unit", unit_json(im.unit)},
                {"lattice_norm", im.lattice_norm.str()}}
               .dump(2)
        << '\n';
    return exit_ok;
}

struct ZetaArgs {
    std::string matrix, D;
    unsigned N = 0;
    bool siegel = false, meyer = false, both = false;
};

int cmd_zeta(const ZetaArgs& a, std::ostream& out) {
    if (a.matrix.empty() == a.D.empty()) throw InvalidArgs("give exactly one of --matrix and --D");
    if (a.N == 0) throw InvalidArgs("--N must be at least 1");
    const char* method = a.siegel ? "siegel" : (a.meyer ? "meyer" : "both");
    json j;
    if (!a.matrix.empty()) {
        const auto v = parse_list(a.matrix, 4, "--matrix");
        const HyperbolicMatrix M{v[0], v[1], v[2], v[3]};
        M.validate();
        const Rational zs = zeta_siegel(M, a.N);
        const Rational zm = zeta_meyer_higher(M, a.N);
        j = {{"value", (a.siegel ? zs : zm).str()}, {"method", method}, {"agreement", zs == zm}};
    } else {
        const BigInt D = parse_int(a.D, "--D");
        const OrderZeta z = zeta_maximal_order(D, a.N);
        const HyperbolicMatrix& M = z.ideal.matrix;
        const Rational factor = pow(Rational(1) / z.ideal.lattice_norm, a.N - 1);
        const Rational zs = zeta_siegel(M, a.N) * factor;
        j = {{"value", (a.siegel ? zs : z.value).str()},
             {"method", method},
             {"agreement", zs == z.value},
             {"matrix", {M.p.get_str(), M.q.get_str(), M.r.get_str(), M.s.get_str()}}};
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

struct EquidistArgs {
    unsigned i = 0, j = 0;
    long qmax = 0;
    std::string out_path, weyl;
    long weil = 0;
    unsigned workers = 0;
};

int cmd_equidist(const EquidistArgs& a, std::ostream& out) {
    std::optional<std::pair<long, long>> m;
    if (!a.weyl.empty()) {
        const auto v = parse_list(a.weyl, 2, "--weyl");
        if (!v[0].fits_slong_p() || !v[1].fits_slong_p()) throw InvalidArgs("--weyl: entries too large");
        m = {v[0].get_si(), v[1].get_si()};
    }
    const unsigned workers = a.workers == 0 ? default_workers() : a.workers;
    json j;
    j["rows"] = scan_emit(a.i, a.j, a.qmax, a.out_path, workers);
    if (m) {
        if (a.qmax < 2) throw PreconditionError("--weyl needs --qmax >= 2");
        const auto w = weyl_sum(m->first, m->second, a.i, a.j, a.qmax, workers);
        j["weyl"] = {{"m", {m->first, m->second}}, {"x", a.qmax}, {"value", complex_json(w)}};
    }
    if (a.weil > 0) {
        const auto [m1, m2] = m.value_or(std::pair<long, long>{0, 1});
        const WeilReport w = weil_check(m1, m2, a.i, a.j, a.weil);
        j["weil"] = {{"m", {m1, m2}},
                     {"C", w.C},
                     {"max_ratio", w.max_ratio},
                     {"worst_prime", w.worst_prime},
                     {"primes", w.primes},
                     {"pass", w.pass()}};
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

struct VerifyArgs {
    std::string suite;
    long qmax = 0;
    unsigned max_weight = 8;
    std::vector<long> D{3, 5, 13};
    std::size_t matrices = 20;
    unsigned N = 4;
    long x = 3000;
    long pmax = 2000;
    std::size_t count = 1000;
    unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    auto qmax = [&a](long def) { return a.qmax > 0 ? a.qmax : def; };
    SuiteReport r;
    if (a.suite == "oracle") r = verify_oracle(qmax(100), a.max_weight);
    else if (a.suite == "hickerson") r = verify_hickerson(qmax(500));
    else if (a.suite == "tables") r = verify_tables(qmax(100));
    else if (a.suite == "todd") r = verify_todd(qmax(50));
    else if (a.suite == "congruence") r = verify_congruence(qmax(300));
    else if (a.suite == "weyl") r = verify_weyl(a.x, a.pmax, 0.1, a.workers == 0 ? default_workers() : a.workers);
    else if (a.suite == "zeta") {
        r = verify_zeta_fields(a.D, a.N);
        if (a.matrices > 0) {
            const SuiteReport extra = verify_zeta(sample_hyperbolic_matrices(a.matrices), a.N);
            for (std::size_t k = 0; k < extra.checks.size(); ++k) {
                Check& c = r.checks[k + 1];
                c.cases += extra.checks[k].cases;
                if (c.failures == 0) c.first_failure = extra.checks[k].first_failure;
                c.failures += extra.checks[k].failures;
            }
        }
    } else {
        throw InvalidArgs("unknown suite '" + a.suite + "'");
    }
    out << report_json(r).dump(2) << '\n';
    err << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << " in " << std::fixed << std::setprecision(2) << r.seconds
        << " s\n";
    return r.pass() ? exit_ok : exit_check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Dedekind sums, partial zeta values and equidistribution scans", "gdsum"};
    app.require_subcommand(1);

    SumArgs sum;
    auto* sum_cmd = app.add_subcommand("sum", "s_ij(p, q) by direct summation and the closed form");
    sum_cmd->add_option("--i", sum.i)->required();
    sum_cmd->add_option("--j", sum.j)->required();
    sum_cmd->add_option("--p", sum.p)->required();
    sum_cmd->add_option("--q", sum.q)->required();
    sum_cmd->add_option("--parity", sum.parity)->check(CLI::IsMember({"canonical", "even", "odd"}));
    sum_cmd->add_flag("--decompose", sum.decompose);
    sum_cmd->add_flag("--json", sum.as_json);

    std::string cf_p, cf_q, cf_parity = "canonical";
    bool cf_json = false;
    auto* cf_cmd = app.add_subcommand("cf", "continued fraction of q/p and its convergent table");
    cf_cmd->add_option("--p", cf_p)->required();
    cf_cmd->add_option("--q", cf_q)->required();
    cf_cmd->add_option("--parity", cf_parity)->check(CLI::IsMember({"canonical", "even", "odd"}));
    cf_cmd->add_flag("--json", cf_json);

    std::string todd_p, todd_q;
    unsigned todd_degree = 0;
    bool todd_numeric = false;
    auto* todd_cmd = app.add_subcommand("todd", "Todd coefficient table t_ij, i + j <= degree");
    todd_cmd->add_option("--p", todd_p)->required();
    todd_cmd->add_option("--q", todd_q)->required();
    todd_cmd->add_option("--degree", todd_degree)->required()->check(CLI::Range(0U, 40U));
    todd_cmd->add_flag("--check-numeric", todd_numeric);

    std::string unit_D;
    auto* unit_cmd = app.add_subcommand("unit", "fundamental and totally positive units of Q(sqrt D)");
    unit_cmd->add_option("--D", unit_D)->required();

    std::string mat_D, mat_alpha, mat_beta;
    auto* mat_cmd = app.add_subcommand("matrix", "matrix of the inverse unit on an ideal basis");
    mat_cmd->add_option("--D", mat_D)->required();
    mat_cmd->add_option("--alpha", mat_alpha, "a,b,c for (a + b sqrt D)/c");
    mat_cmd->add_option("--beta", mat_beta, "a,b,c for (a + b sqrt D)/c");

    ZetaArgs zeta;
    auto* zeta_cmd = app.add_subcommand("zeta", "partial zeta value at 1 - N");
    auto* zm = zeta_cmd->add_option("--matrix", zeta.matrix, "p,q,r,s");
    auto* zd = zeta_cmd->add_option("--D", zeta.D);
    zm->excludes(zd);
    zeta_cmd->add_option("--N", zeta.N)->required()->check(CLI::Range(1U, 30U));
    auto* f_siegel = zeta_cmd->add_flag("--siegel", zeta.siegel);
    auto* f_meyer = zeta_cmd->add_flag("--meyer", zeta.meyer);
    auto* f_both = zeta_cmd->add_flag("--both", zeta.both);
    f_siegel->excludes(f_meyer)->excludes(f_both);
    f_meyer->excludes(f_both);

    EquidistArgs eq;
    auto* eq_cmd = app.add_subcommand("equidist", "scan graph points to CSV, optional Weyl and Weil checks");
    eq_cmd->add_option("--i", eq.i)->required();
    eq_cmd->add_option("--j", eq.j)->required();
    eq_cmd->add_option("--qmax", eq.qmax)->required()->check(CLI::Range(1L, 100'000L));
    eq_cmd->add_option("--out", eq.out_path)->required();
    eq_cmd->add_option("--weyl", eq.weyl, "m1,m2");
    eq_cmd->add_option("--weil", eq.weil, "largest prime for the Weil ratio")->check(CLI::Range(2L, 1'000'000L));
    eq_cmd->add_option("--workers", eq.workers)->check(CLI::Range(1U, 1024U));

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "run an invariant sweep");
    ver_cmd->add_option("--suite", ver.suite)
        ->required()
        ->check(CLI::IsMember({"oracle", "hickerson", "tables", "todd", "zeta", "congruence", "weyl"}));
    ver_cmd->add_option("--qmax", ver.qmax)->check(CLI::Range(2L, 100'000L));
    ver_cmd->add_option("--max-weight", ver.max_weight)->check(CLI::Range(2U, 20U));
    ver_cmd->add_option("--D", ver.D, "discriminants for the zeta suite")->delimiter(',');
    ver_cmd->add_option("--matrices", ver.matrices, "generated matrices for the zeta suite");
    ver_cmd->add_option("--N", ver.N)->check(CLI::Range(1U, 12U));
    ver_cmd->add_option("--x", ver.x)->check(CLI::Range(12L, 1'000'000L));
    ver_cmd->add_option("--pmax", ver.pmax)->check(CLI::Range(2L, 1'000'000L));
    ver_cmd->add_option("--workers", ver.workers)->check(CLI::Range(1U, 1024U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_args;
    }

    try {
        if (*sum_cmd) return cmd_sum(sum, out);
        if (*cf_cmd) return cmd_cf(cf_p, cf_q, cf_parity, cf_json, out);
        if (*todd_cmd) return cmd_todd(todd_p, todd_q, todd_degree, todd_numeric, out, err);
        if (*unit_cmd) return cmd_unit(unit_D, out);
        if (*mat_cmd) return cmd_matrix(mat_D, mat_alpha, mat_beta, out);
        if (*zeta_cmd) return cmd_zeta(zeta, out);
        if (*eq_cmd) return cmd_equidist(eq, out);
        if (*ver_cmd) return cmd_verify(ver, out, err);
    } catch (const InvalidArgs& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_args;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    }
    return exit_invalid_args;
}

}  // namespace gdsum
