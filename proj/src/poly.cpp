#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace mww {

Poly Poly::constant(const Rational& a) {
    Poly p;
    if (a != 0) p.c.push_back(a);
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.c = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::linear_root(const Rational& r) {
    Poly p;
    p.c = {-r, Rational(1)};
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rational& Poly::lead() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "lead of zero polynomial");
    return c.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Rational& k) {
    if (k == 0) return Poly();
    Poly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    Poly rem = a, quot;
    int db = b.degree();
    if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rational f = rem.lead() / b.lead();
        quot.c[k] = f;
        for (int i = 0; i <= db; ++i) rem.c[k + i] -= f * b.c[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly derivative(const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<Rational> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * Rational((unsigned)i);
    return Poly(std::move(r));
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    Rational inv = Rational(1) / a.lead();
    return a * inv;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return monic(x);
}

Poly poly_pow(const Poly& a, int e) {
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // descending constant-up comparison makes t-a sort by root a
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] > b.c[i] ? -1 : 1;
    }
    return 0;
}

bool poly_less(const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.c[i];
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Yun's square-free decomposition for characteristic zero: p = prod a_i^i
std::vector<Poly> squarefree_parts(const Poly& p) {
    std::vector<Poly> parts;
    Poly g = poly_gcd(p, derivative(p));
    if (g.degree() <= 0) {
        parts.push_back(monic(p));
        return parts;
    }
    Poly w = divmod(p, g).first;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly a = divmod(w, y).first;
        parts.push_back(monic(a)); // may be constant 1
        w = y;
        g = divmod(g, y).first;
    }
    return parts;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factor_integer(n);
    std::vector<Int> ds = {1};
    for (auto& [p, e] : fac) {
        size_t base = ds.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// All rational roots of a square-free polynomial, in ascending order.
std::vector<Rational> rational_roots(const Poly& sq) {
    std::vector<Rational> roots;
    Poly q = sq;
    // strip t
    while (!q.is_zero() && q.c[0] == 0) {
        roots.push_back(Rational(0));
        q.c.erase(q.c.begin());
    }
    if (q.degree() < 1) { std::sort(roots.begin(), roots.end()); return roots; }
    // scale to an integer polynomial
    Int den = 1;
    for (auto& a : q.c) den = lcm(den, rat_den(a));
    std::vector<Int> ic(q.c.size());
    for (size_t i = 0; i < q.c.size(); ++i) ic[i] = rat_num(q.c[i] * Rational(den));
    Int g = 0;
    for (auto& a : ic) g = gcd(g, a);
    for (auto& a : ic) a /= g;
    const Int a0 = abs(ic.front()), ad = abs(ic.back());
    for (const Int& u : divisors(a0)) {
        for (const Int& v : divisors(ad)) {
            if (gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rational r(u * s, v);
                if (q.eval(r) == 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

Factorization factor_poly(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_poly(0)");
    Factorization out;
    out.lead = p.lead();
    if (p.degree() == 0) return out;
    Poly m = monic(p);
    auto parts = squarefree_parts(m);
    for (size_t i = 0; i < parts.size(); ++i) {
        int mult = (int)i + 1;
        Poly part = parts[i];
        if (part.degree() < 1) continue;
        for (const Rational& r : rational_roots(part)) {
            out.factors.push_back({Poly::linear_root(r), mult});
            part = divmod(part, Poly::linear_root(r)).first;
        }
        if (part.degree() >= 1) out.factors.push_back({monic(part), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.p, b.p); });
    return out;
}

} // namespace mww
