#include "gdsum/quadfield.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <tuple>

namespace gdsum {

namespace {

BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const BigInt& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

void require_field(const BigInt& D) {
    if (D <= 1 || !is_squarefree(D)) {
        throw PreconditionError("D must be a squarefree integer > 1, got " + D.get_str());
    }
}

void require_same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.D() != y.D()) {
        throw std::invalid_argument("surds from different fields: D=" + x.D().get_str() + " and D=" + y.D().get_str());
    }
}

using Mat2 = std::array<BigInt, 4>;  // (m0 m1; m2 m3)

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

// Inverse of a unimodular matrix.
Mat2 inverse(const Mat2& u) {
    const BigInt d = u[0] * u[3] - u[1] * u[2];
    return {d * u[3], -d * u[1], -d * u[2], d * u[0]};
}

}  // namespace

bool is_squarefree(const BigInt& n) {
    if (n <= 0) return false;
    BigInt m = n;
    for (BigInt d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// QuadraticSurd

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt D)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), D_(std::move(D)) {
    if (c_ == 0) throw std::domain_error("surd with zero denominator");
    if (D_ <= 1) throw PreconditionError("D must be > 1, got " + D_.get_str());
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    BigInt g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& x, const BigInt& D) { return {x.num(), 0, x.den(), D}; }

QuadraticSurd QuadraticSurd::root(const BigInt& D) {
    require_field(D);
    return {0, 1, 1, D};
}

QuadraticSurd QuadraticSurd::conjugate() const { return {a_, -b_, c_, D_}; }

Rational QuadraticSurd::norm() const { return Rational(a_ * a_ - b_ * b_ * D_, c_ * c_); }

Rational QuadraticSurd::trace() const { return Rational(2 * a_, c_); }

int QuadraticSurd::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    const int cmp = sgn(BigInt(a_ * a_ - b_ * b_ * D_));
    return sa > 0 ? cmp : -cmp;
}

BigInt QuadraticSurd::floor() const {
    if (b_ == 0) return floor_div(a_, c_);
    const BigInt t = isqrt(b_ * b_ * D_);
    // b sqrt(D) is irrational, so it lies strictly inside (t, t+1) or (-t-1, -t).
    return b_ > 0 ? floor_div(a_ + t, c_) : floor_div(a_ - t - 1, c_);
}

double QuadraticSurd::to_double() const {
    return (a_.get_d() + b_.get_d() * std::sqrt(D_.get_d())) / c_.get_d();
}

std::string QuadraticSurd::str() const {
    std::string out;
    if (a_ != 0) out = a_.get_str();
    if (b_ != 0) {
        const BigInt mag = abs(b_);
        if (b_ < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (mag != 1) out += mag.get_str() + "*";
        out += "sqrt(" + D_.get_str() + ")";
    }
    if (out.empty()) out = "0";
    if (c_ != 1) {
        const bool compound = a_ != 0 && b_ != 0;
        out = (compound ? "(" + out + ")" : out) + "/" + c_.get_str();
    }
    return out;
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    require_same_field(x, y);
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, x.D_};
}

QuadraticSurd operator-(const QuadraticSurd& x) { return {-x.a_, -x.b_, x.c_, x.D_}; }

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    require_same_field(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * x.D_, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, x.D_};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    require_same_field(x, y);
    const BigInt n = y.a_ * y.a_ - y.b_ * y.b_ * y.D_;
    if (n == 0) throw std::domain_error("division by zero surd");
    // 1/y = c (a - b sqrt D) / (a^2 - b^2 D)
    const QuadraticSurd inv(y.c_ * y.a_, -y.c_ * y.b_, n, y.D_);
    return x * inv;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
}

// ---------------------------------------------------------------------------
// Continued fractions of surds

SurdExpansion surd_cf(const QuadraticSurd& x) {
    if (x.is_rational()) throw PreconditionError("surd_cf needs an irrational surd, got " + x.str());
    std::map<std::tuple<BigInt, BigInt, BigInt>, std::size_t> seen;
    std::vector<BigInt> terms;
    QuadraticSurd cur = x;
    const QuadraticSurd one = QuadraticSurd::from_rational(Rational(1), x.D());
    for (;;) {
        auto key = std::make_tuple(cur.a(), cur.b(), cur.c());
        if (auto it = seen.find(key); it != seen.end()) {
            SurdExpansion out;
            out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
            out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
            return out;
        }
        seen.emplace(std::move(key), terms.size());
        const BigInt a = cur.floor();
        terms.push_back(a);
        cur = one / (cur - QuadraticSurd::from_rational(Rational(a), x.D()));
    }
}

QuadraticSurd fold_surd(const SurdExpansion& cf, const BigInt& D) {
    if (cf.period.empty()) throw std::invalid_argument("a surd expansion needs a non-empty period");
    Mat2 per{1, 0, 0, 1};
    for (const auto& a : cf.period) per = mul(per, Mat2{a, 1, 1, 0});
    // y = (P0 y + P1)/(P2 y + P3)  =>  P2 y^2 + (P3 - P0) y - P1 = 0, take the root > 1.
    const BigInt disc = (per[3] - per[0]) * (per[3] - per[0]) + 4 * per[2] * per[1];
    if (disc % D != 0 || !is_square(BigInt(disc / D))) {
        throw PreconditionError("period does not describe an element of Q(sqrt(" + D.get_str() + "))");
    }
    const BigInt f = isqrt(BigInt(disc / D));
    const QuadraticSurd y(per[0] - per[3], f, 2 * per[2], D);
    Mat2 pre{1, 0, 0, 1};
    for (const auto& a : cf.preperiod) pre = mul(pre, Mat2{a, 1, 1, 0});
    auto lift = [&D](const BigInt& v) { return QuadraticSurd(v, 0, 1, D); };
    return (lift(pre[0]) * y + lift(pre[1])) / (lift(pre[2]) * y + lift(pre[3]));
}

// ---------------------------------------------------------------------------
// Units

BigInt FieldUnit::norm() const { return (x * x - D * y * y) / 4; }

QuadraticSurd maximal_order_generator(const BigInt& D) {
    require_field(D);
    return mod_floor(D, 4) == 1 ? QuadraticSurd(1, 1, 2, D) : QuadraticSurd(0, 1, 1, D);
}

FieldUnit fundamental_unit(const BigInt& D) {
    const QuadraticSurd theta = maximal_order_generator(D);
    auto lift = [&D](const BigInt& v) { return QuadraticSurd(v, 0, 1, D); };
    BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
    QuadraticSurd cur = theta;
    for (;;) {
        const BigInt a = cur.floor();
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
        const QuadraticSurd approx = lift(h) - lift(k) * theta;
        const Rational n = approx.norm();
        if (n == Rational(1) || n == Rational(-1)) {
            // The unit > 1 is the conjugate of the small approximation error.
            const QuadraticSurd eps = approx.conjugate();
            const Rational x = Rational(2) * eps.rational_part();
            const Rational y = Rational(2) * eps.irrational_part();
            return FieldUnit{x.num(), y.num(), D};
        }
        cur = lift(1) / (cur - lift(a));
    }
}

FieldUnit totally_positive_unit(const BigInt& D) {
    FieldUnit u = fundamental_unit(D);
    if (u.norm() == 1) return u;
    return FieldUnit{(u.x * u.x + D * u.y * u.y) / 2, u.x * u.y, D};
}

// ---------------------------------------------------------------------------
// Matrix of the unit on an ideal basis

void HyperbolicMatrix::validate() const {
    if (det() != 1) throw PreconditionError("matrix determinant is " + BigInt(det()).get_str() + ", expected 1");
    if (q <= 0) throw PreconditionError("matrix entry q must be positive, got " + q.get_str());
    if (abs(BigInt(trace())) <= 2) {
        throw PreconditionError("matrix is not hyperbolic (|p+s| <= 2)");
    }
    if (gcd(p, q) != 1) throw PreconditionError("matrix entries p and q are not coprime");
}

bool is_fixed_point(const HyperbolicMatrix& M, const QuadraticSurd& omega) {
    auto lift = [&omega](const BigInt& v) { return QuadraticSurd(v, 0, 1, omega.D()); };
    return (lift(M.p) * omega + lift(M.r)) / (lift(M.q) * omega + lift(M.s)) == omega;
}

namespace {

struct Basis {
    QuadraticSurd alpha;
    QuadraticSurd beta;
};

// Coordinates (c1, c2) with u = c1 alpha + c2 beta.
std::pair<Rational, Rational> coordinates(const Basis& b, const QuadraticSurd& u) {
    const Rational a0 = b.alpha.rational_part(), a1 = b.alpha.irrational_part();
    const Rational b0 = b.beta.rational_part(), b1 = b.beta.irrational_part();
    const Rational u0 = u.rational_part(), u1 = u.irrational_part();
    const Rational det = a0 * b1 - b0 * a1;
    if (det.is_zero()) throw PreconditionError("ideal basis elements are linearly dependent over Q");
    return {(u0 * b1 - b0 * u1) / det, (a0 * u1 - u0 * a1) / det};
}

Mat2 unit_matrix(const Basis& b, const QuadraticSurd& einv) {
    const auto [p, q] = coordinates(b, einv * b.alpha);
    const auto [r, s] = coordinates(b, einv * b.beta);
    if (!p.is_integer() || !q.is_integer() || !r.is_integer() || !s.is_integer()) {
        throw PreconditionError("the unit does not preserve the lattice spanned by the basis");
    }
    return {p.num(), q.num(), r.num(), s.num()};
}

Basis change(const Basis& b, const Mat2& u) {
    auto lift = [&b](const BigInt& v) { return QuadraticSurd(v, 0, 1, b.alpha.D()); };
    return {lift(u[0]) * b.alpha + lift(u[1]) * b.beta, lift(u[2]) * b.alpha + lift(u[3]) * b.beta};
}

bool oriented(const Basis& b) {
    const QuadraticSurd omega = -(b.beta / b.alpha);
    return omega > omega.conjugate();
}

bool normalized(const Mat2& m) { return m[1] > 1 && m[0] > 0 && m[0] < m[1] && abs(m[3]) < m[1]; }

}  // namespace

IdealMatrix ideal_matrix(const BigInt& D, const QuadraticSurd& alpha, const QuadraticSurd& beta) {
    require_field(D);
    if (alpha.D() != D || beta.D() != D) throw PreconditionError("basis elements must lie in Q(sqrt(" + D.get_str() + "))");
    const FieldUnit eps = totally_positive_unit(D);
    const QuadraticSurd einv = eps.value().conjugate();

    Basis start{alpha, beta};
    Mat2 m0 = unit_matrix(start, einv);

    // Breadth-first search over SL2(Z) changes of basis (plus the sign flip of beta),
    // keeping the conjugate with the smallest (q, p) that satisfies the normalization.
    const std::array<Mat2, 4> moves{Mat2{1, 1, 0, 1}, Mat2{1, -1, 0, 1}, Mat2{0, -1, 1, 0}, Mat2{1, 0, 0, -1}};
    constexpr std::size_t kMaxStates = 6000;
    std::map<Mat2, Basis> seen;
    std::deque<Mat2> queue;
    std::optional<std::pair<Mat2, Basis>> best;
    auto consider = [&best](const Mat2& m, const Basis& b) {
        if (!normalized(m) || !oriented(b)) return;
        if (!best || std::tie(m[1], m[0]) < std::tie(best->first[1], best->first[0])) best.emplace(m, b);
    };
    seen.emplace(m0, start);
    queue.push_back(m0);
    while (!queue.empty() && seen.size() < kMaxStates) {
        const Mat2 m = queue.front();
        queue.pop_front();
        const Basis b = seen.at(m);
        consider(m, b);
        if (m[1] > 0) {
            // (1 0; -k 1) moves p into [0, q) without touching q.
            const BigInt k = floor_div(m[0], m[1]);
            const Mat2 u{1, 0, -k, 1};
            consider(mul(mul(u, m), inverse(u)), change(b, u));
        }
        for (const auto& u : moves) {
            const Mat2 next = mul(mul(u, m), inverse(u));
            if (seen.contains(next)) continue;
            seen.emplace(next, change(b, u));
            queue.push_back(next);
        }
    }
    if (!best) throw PreconditionError("no normalized basis found for D=" + D.get_str());

    const auto& [m, b] = *best;
    const QuadraticSurd tau = b.beta / b.alpha;
    const Rational w1 = maximal_order_generator(D).irrational_part();
    Rational lattice_norm = tau.irrational_part() / w1;
    if (lattice_norm.sign() < 0) lattice_norm = -lattice_norm;

    IdealMatrix out{HyperbolicMatrix{m[0], m[1], m[2], m[3]}, b.alpha, b.beta, eps, lattice_norm};
    out.matrix.validate();
    return out;
}

IdealMatrix ideal_matrix(const BigInt& D) {
    const QuadraticSurd one(1, 0, 1, D);
    return ideal_matrix(D, one, maximal_order_generator(D));
}

}  // namespace gdsum
