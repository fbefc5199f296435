#include "qfield.hpp"

#include <sstream>

namespace mww {

std::string to_string(const P1Point& x) { return x.inf ? "inf" : to_string(x.v); }

FactoredRatFunc FactoredRatFunc::constant(const Rational& a) {
    if (a == 0) throw Error(ErrorCode::ZeroEntry, "zero constant is not in Q(t)^x");
    FactoredRatFunc f;
    f.lead = a;
    return f;
}

FactoredRatFunc FactoredRatFunc::from_poly(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial is not in Q(t)^x");
    FactoredRatFunc f;
    auto fac = factor_poly(p);
    f.lead = fac.lead;
    for (auto& pf : fac.factors) f.factors[pf.p] = pf.mult;
    return f;
}

FactoredRatFunc FactoredRatFunc::linear(const Rational& root) {
    FactoredRatFunc f;
    f.factors[Poly::linear_root(root)] = 1;
    return f;
}

FactoredRatFunc FactoredRatFunc::var() { return linear(Rational(0)); }

int FactoredRatFunc::degree_num() const {
    int d = 0;
    for (auto& [p, e] : factors)
        if (e > 0) d += e * p.degree();
    return d;
}

int FactoredRatFunc::degree_den() const {
    int d = 0;
    for (auto& [p, e] : factors)
        if (e < 0) d -= e * p.degree();
    return d;
}

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    FactoredRatFunc r = a;
    r.lead *= b.lead;
    for (auto& [p, e] : b.factors) {
        int& x = r.factors[p];
        x += e;
        if (x == 0) r.factors.erase(p);
    }
    return r;
}

FactoredRatFunc frf_inverse(const FactoredRatFunc& a) {
    FactoredRatFunc r;
    r.lead = Rational(1) / a.lead;
    for (auto& [p, e] : a.factors) r.factors[p] = -e;
    return r;
}

FactoredRatFunc operator/(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    return a * frf_inverse(b);
}

FactoredRatFunc frf_pow(const FactoredRatFunc& a, int e) {
    FactoredRatFunc r;
    if (e == 0) return r;
    r.lead = 1;
    Rational base = a.lead;
    int n = e < 0 ? -e : e;
    for (int i = 0; i < n; ++i) r.lead *= base;
    if (e < 0) r.lead = Rational(1) / r.lead;
    for (auto& [p, k] : a.factors) r.factors[p] = k * e;
    return r;
}

std::pair<Poly, Poly> expand(const FactoredRatFunc& f) {
    Poly num = Poly::constant(f.lead), den = Poly::constant(1);
    for (auto& [p, e] : f.factors) {
        if (e > 0) num = num * poly_pow(p, e);
        else den = den * poly_pow(p, -e);
    }
    return {num, den};
}

FactoredRatFunc from_num_den(const Poly& num, const Poly& den) {
    if (num.is_zero()) throw Error(ErrorCode::ZeroEntry, "zero function");
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
    return FactoredRatFunc::from_poly(num) / FactoredRatFunc::from_poly(den);
}

FactoredRatFunc frf_add(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    auto [na, da] = expand(a);
    auto [nb, db] = expand(b);
    return from_num_den(na * db + nb * da, da * db);
}

FactoredRatFunc frf_sub(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    auto [na, da] = expand(a);
    auto [nb, db] = expand(b);
    return from_num_den(na * db - nb * da, da * db);
}

FactoredRatFunc one_minus(const FactoredRatFunc& f) {
    auto [n, d] = expand(f);
    return from_num_den(d - n, d);
}

int total_order_cmp(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    if (a.lead != b.lead) return a.lead < b.lead ? -1 : 1;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    for (; ia != a.factors.end() && ib != b.factors.end(); ++ia, ++ib) {
        int c = poly_cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.factors.end()) return 1;
    if (ib != b.factors.end()) return -1;
    return 0;
}

std::string to_string(const FactoredRatFunc& f) {
    std::ostringstream os;
    os << to_string(f.lead);
    for (auto& [p, e] : f.factors) {
        os << " * (" << to_string(p) << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::optional<P1Point> Place::point() const {
    if (at_infinity) return P1Point::infinity();
    if (p.degree() == 1) return P1Point::finite(-p.c[0]); // monic: t - root
    return std::nullopt;
}

std::string to_string(const Place& v) {
    if (v.at_infinity) return "inf";
    if (v.p.degree() == 1) return to_string(-v.p.c[0]);
    return "(" + to_string(v.p) + ")";
}

void DivisorP1::add(const Place& v, int n) {
    if (n == 0) return;
    int& x = orders[v];
    x += n;
    if (x == 0) orders.erase(v);
}

int DivisorP1::total_degree() const {
    int d = 0;
    for (auto& [v, n] : orders) d += n * v.degree();
    return d;
}

std::set<P1Point> DivisorP1::rational_support() const {
    std::set<P1Point> s;
    for (auto& [v, n] : orders)
        if (auto x = v.point()) s.insert(*x);
    return s;
}

DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b) {
    DivisorP1 r = a;
    for (auto& [v, n] : b.orders) r.add(v, n);
    return r;
}

int ord_at(const FactoredRatFunc& f, const Place& v) {
    if (v.at_infinity) return f.degree_den() - f.degree_num();
    auto it = f.factors.find(v.p);
    return it == f.factors.end() ? 0 : it->second;
}

DivisorP1 divisor_of(const FactoredRatFunc& f) {
    DivisorP1 d;
    for (auto& [p, e] : f.factors) d.add(Place::finite(p), e);
    d.add(Place::infinity(), ord_at(f, Place::infinity()));
    return d;
}

bool is_split(const FactoredRatFunc& f) {
    for (auto& [p, e] : f.factors)
        if (p.degree() != 1) return false;
    return true;
}

bool disjoint_supports(const FactoredRatFunc& f, const FactoredRatFunc& g) {
    auto df = divisor_of(f), dg = divisor_of(g);
    for (auto& [v, n] : df.orders)
        if (dg.orders.count(v)) return false;
    return true;
}

P1Point value_at(const FactoredRatFunc& f, const P1Point& x) {
    int o = ord_at(f, Place::of_point(x));
    if (o > 0) return P1Point::finite(0);
    if (o < 0) return P1Point::infinity();
    return P1Point::finite(unit_value_at(f, x));
}

Rational unit_value_at(const FactoredRatFunc& f, const P1Point& x) {
    if (ord_at(f, Place::of_point(x)) != 0)
        throw Error(ErrorCode::NotAUnit, "not a unit at " + to_string(x));
    if (x.inf) {
        // all factors are monic, so at infinity only the lead survives
        return f.lead;
    }
    Rational v = f.lead;
    for (auto& [p, e] : f.factors) {
        Rational pv = p.eval(x.v);
        if (pv == 0) throw Error(ErrorCode::Internal, "unit with vanishing factor");
        Rational pw = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) pw *= pv;
        if (e < 0) pw = Rational(1) / pw;
        v *= pw;
    }
    return v;
}

Mobius::Mobius(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() == 0) throw Error(ErrorCode::InvalidInput, "degenerate Mobius map");
}

P1Point Mobius::apply(const P1Point& x) const {
    if (x.inf) {
        if (c == 0) return P1Point::infinity();
        return P1Point::finite(a / c);
    }
    Rational den = c * x.v + d;
    if (den == 0) return P1Point::infinity();
    return P1Point::finite((a * x.v + b) / den);
}

Mobius Mobius::inverse() const { return Mobius(d, -b, -c, a); }

Mobius compose(const Mobius& f, const Mobius& g) {
    return Mobius(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                  f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
}

FactoredRatFunc mobius_pullback(const Mobius& phi, const FactoredRatFunc& f) {
    Poly numer({phi.b, phi.a}); // a t + b
    Poly denom({phi.d, phi.c}); // c t + d
    FactoredRatFunc r = FactoredRatFunc::constant(f.lead);
    int den_pow = 0;
    for (auto& [p, e] : f.factors) {
        // p((at+b)/(ct+d)) * (ct+d)^deg(p)
        int k = p.degree();
        Poly q;
        for (int i = 0; i <= k; ++i) {
            if (p.c[i] == 0) continue;
            q = q + poly_pow(numer, i) * poly_pow(denom, k - i) * p.c[i];
        }
        r = r * frf_pow(FactoredRatFunc::from_poly(q), e);
        den_pow += k * e;
    }
    if (denom.degree() >= 1 && den_pow != 0)
        r = r * frf_pow(FactoredRatFunc::from_poly(denom), -den_pow);
    return r;
}

void FreshStream::block_points(const std::set<P1Point>& pts) {
    for (auto& x : pts)
        if (!x.inf) avoid.insert(x.v);
}

Rational FreshStream::take() {
    while (avoid.count(next_candidate)) next_candidate += 2;
    Rational r = next_candidate;
    avoid.insert(r);
    next_candidate += 2;
    return r;
}

namespace {

Rational default_fresh(const P1Point& x, const std::set<P1Point>& D, FreshStream* fresh) {
    if (fresh) return fresh->take();
    Rational c = 2;
    auto used = [&](const Rational& r) {
        if (!x.inf && x.v == r) return true;
        return D.count(P1Point::finite(r)) > 0;
    };
    while (used(c)) c += 1;
    return c;
}

void verify_moving(const FactoredRatFunc& f, const P1Point& x, const std::set<P1Point>& D,
                   MovingMode mode) {
    if (ord_at(f, Place::of_point(x)) != 1)
        throw Error(ErrorCode::MovingFunctionFailure, "ord at x is not 1");
    for (auto& y : D) {
        if (mode == MovingMode::UnitOnD) {
            if (ord_at(f, Place::of_point(y)) != 0 || unit_value_at(f, y) != 1)
                throw Error(ErrorCode::MovingFunctionFailure, "value at D is not 1");
        } else {
            if (ord_at(f, Place::of_point(y)) != 0)
                throw Error(ErrorCode::MovingFunctionFailure, "support meets D");
        }
    }
}

// UnitOnD interpolation with every point finite: p = 1 + s * prod(t - y),
// s scaled so that (t - x) divides p, with ord exactly one.
FactoredRatFunc unit_on_finite(const Rational& x, const std::set<Rational>& ys) {
    Poly P = Poly::constant(1);
    for (auto& y : ys) P = P * Poly::linear_root(y);
    Rational Px = P.eval(x);
    Rational s0 = Rational(-1) / Px;
    Poly p = Poly::constant(1) + P * s0;
    if (derivative(p).eval(x) == 0) {
        for (Rational lam = 1;; lam += 1) {
            Poly scale = Poly::constant(1) + Poly::linear_root(x) * lam;
            p = Poly::constant(1) + P * scale * s0;
            if (derivative(p).eval(x) != 0) break;
        }
    }
    return FactoredRatFunc::from_poly(p);
}

} // namespace

FactoredRatFunc moving_function(const P1Point& x, const std::set<P1Point>& D, MovingMode mode,
                                FreshStream* fresh) {
    if (D.count(x)) throw Error(ErrorCode::InvalidInput, "x lies in D");
    FactoredRatFunc f;
    if (mode == MovingMode::Simple) {
        Rational c = default_fresh(x, D, fresh);
        if (x.inf) {
            f = frf_inverse(FactoredRatFunc::linear(c)); // 1/(t-c), ord_inf = 1
        } else {
            f = FactoredRatFunc::linear(x.v) / FactoredRatFunc::linear(c);
        }
    } else if (D.empty()) {
        f = x.inf ? frf_inverse(FactoredRatFunc::var()) : FactoredRatFunc::linear(x.v);
    } else if (!x.inf && !D.count(P1Point::infinity())) {
        std::set<Rational> ys;
        for (auto& y : D) ys.insert(y.v);
        f = unit_on_finite(x.v, ys);
    } else {
        // move everything to finite coordinates through t -> 1/(t - e)
        Rational e = default_fresh(x, D, fresh);
        Mobius psi(0, 1, 1, -e);
        P1Point x2 = psi.apply(x);
        std::set<Rational> ys;
        for (auto& y : D) {
            P1Point y2 = psi.apply(y);
            if (y2.inf) throw Error(ErrorCode::Internal, "flip left a point at infinity");
            ys.insert(y2.v);
        }
        f = mobius_pullback(psi, unit_on_finite(x2.v, ys));
    }
    verify_moving(f, x, D, mode);
    return f;
}

} // namespace mww
