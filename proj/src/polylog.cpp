#include "polylog.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace mww {

LiArg LiArg::of(const FactoredRatFunc& g) {
    if (g.is_constant()) return of(g.lead);
    LiArg a;
    a.kind = FuncArg;
    a.f = g;
    return a;
}

int liarg_cmp(const LiArg& a, const LiArg& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case LiArg::RationalArg:
            if (a.q != b.q) return a.q < b.q ? -1 : 1;
            return 0;
        case LiArg::InfinityArg: return 0;
        case LiArg::FuncArg: return total_order_cmp(a.f, b.f);
    }
    return 0;
}

std::string to_string(const LiArg& a) {
    switch (a.kind) {
        case LiArg::RationalArg: return to_string(a.q);
        case LiArg::InfinityArg: return "inf";
        case LiArg::FuncArg: return to_string(a.f);
    }
    return "?";
}

PolylogChain PolylogChain::zero(FieldTag t, int m, int j) {
    PolylogChain c;
    c.tag = t;
    c.weight = m;
    c.degree = j;
    if (j < 1 || j > m) throw Error(ErrorCode::DegreeOutOfRange, "chain degree out of range");
    c.wedge = WedgeElement::zero(t, j == m ? m : m - (m - j + 1));
    return c;
}

PolylogChain operator+(const PolylogChain& a, const PolylogChain& b) {
    if (a.tag != b.tag || a.weight != b.weight || a.degree != b.degree)
        throw Error(ErrorCode::WrongArity, "chain sum shape mismatch");
    PolylogChain r = a;
    for (auto& [k, v] : b.sym) {
        auto it = r.sym.find(k);
        if (it == r.sym.end()) {
            r.sym.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) r.sym.erase(it);
        }
    }
    r.wedge = r.wedge + b.wedge;
    return r;
}

PolylogChain operator*(const PolylogChain& a, const Rational& k) {
    PolylogChain r = PolylogChain::zero(a.tag, a.weight, a.degree);
    if (k == 0) return r;
    for (auto& [key, v] : a.sym) r.sym[key] = v * k;
    r.wedge = a.wedge * k;
    return r;
}

PolylogChain operator-(const PolylogChain& a, const PolylogChain& b) {
    return a + b * Rational(-1);
}

std::string to_string(const PolylogChain& c) {
    if (c.is_zero()) return "0";
    if (c.degree == c.weight) return to_string(c.wedge);
    std::ostringstream os;
    bool first = true;
    for (auto& [key, v] : c.sym) {
        if (!first) os << " + ";
        first = false;
        os << to_string(v) << "*{" << to_string(key.arg) << "}_" << c.level();
        if (!key.tup.empty()) {
            os << " (x) [";
            for (size_t i = 0; i < key.tup.size(); ++i) {
                if (i) os << " ^ ";
                os << to_string(key.tup[i]);
            }
            os << "]";
        }
    }
    return os.str();
}

B2Normal b2_normalize(const Rational& x) {
    if (x == 0 || x == 1) return {Rational(0), 0};
    struct OrbitMap {
        Rational (*f)(const Rational&);
        int sign;
    };
    static const std::array<OrbitMap, 6> maps = {{
        {[](const Rational& t) -> Rational { return t; }, 1},
        {[](const Rational& t) -> Rational { return Rational(1) / t; }, -1},
        {[](const Rational& t) -> Rational { return Rational(1) - t; }, -1},
        {[](const Rational& t) -> Rational { return Rational(1) / (Rational(1) - t); }, 1},
        {[](const Rational& t) -> Rational { return (t - 1) / t; }, 1},
        {[](const Rational& t) -> Rational { return t / (t - 1); }, -1},
    }};
    Rational rep;
    bool found = false;
    for (auto& m : maps) {
        Rational v = m.f(x);
        if (v > 0 && v < 1 && (!found || v < rep)) {
            rep = v;
            found = true;
        }
    }
    if (!found) throw Error(ErrorCode::Internal, "empty (0,1) orbit slice");
    for (auto& m : maps)
        if (m.f(x) == rep) return {rep, m.sign};
    throw Error(ErrorCode::Internal, "orbit scan failed");
}

void chain_insert(PolylogChain& c, const LiArg& arg0, const WedgeElement& w, const Rational& coeff) {
    if (coeff == 0 || w.is_zero()) return;
    if (w.arity != c.wedge_arity())
        throw Error(ErrorCode::WrongArity, "symbol wedge arity mismatch");
    LiArg arg = arg0;
    Rational k = coeff;
    if (arg.kind == LiArg::InfinityArg) return; // {inf}_k = 0
    if (arg.is_func()) {
        if (arg.f.is_constant()) arg = LiArg::of(arg.f.lead);
    }
    if (!arg.is_func()) {
        if (arg.q == 0 || arg.q == 1) return;
        if (c.level() == 2) {
            B2Normal n = b2_normalize(arg.q);
            if (n.sign == 0) return;
            arg = LiArg::of(n.rep);
            k = k * n.sign;
        }
    }
    for (auto& [tup, wk] : w.terms) {
        SymKey key{arg, tup};
        auto it = c.sym.find(key);
        Rational add = k * wk;
        if (it == c.sym.end()) {
            c.sym.emplace(std::move(key), add);
        } else {
            it->second += add;
            if (it->second == 0) c.sym.erase(it);
        }
    }
}

PolylogChain li_normalize(const PolylogChain& c) {
    PolylogChain r = PolylogChain::zero(c.tag, c.weight, c.degree);
    r.wedge = c.wedge;
    for (auto& [key, v] : c.sym) {
        WedgeElement w = WedgeElement::zero(c.tag, (int)key.tup.size());
        w.add_term(key.tup, 1);
        chain_insert(r, key.arg, w, v);
    }
    return r;
}

PolylogChain make_symbol_chain(FieldTag tag, int weight, int level, const LiArg& arg,
                               const WedgeElement& w, const Rational& coeff) {
    if (level < 2 || level > weight)
        throw Error(ErrorCode::UnsupportedSymbolLevel, "symbol level out of range");
    PolylogChain c = PolylogChain::zero(tag, weight, weight - level + 1);
    chain_insert(c, arg, w, coeff);
    return c;
}

namespace {

MulVector arg_decompose(FieldTag tag, const LiArg& arg) {
    if (arg.is_func()) return log_decompose(arg.f);
    MulVector v = log_decompose(arg.q);
    v.tag = tag;
    return v;
}

MulVector one_minus_decompose(FieldTag tag, const LiArg& arg) {
    if (arg.is_func()) return log_decompose(one_minus(arg.f));
    MulVector v = log_decompose(Rational(1) - arg.q);
    v.tag = tag;
    return v;
}

} // namespace

PolylogChain delta(const PolylogChain& c) {
    if (c.degree >= c.weight)
        throw Error(ErrorCode::DegreeOutOfRange, "delta undefined in top degree");
    PolylogChain r = PolylogChain::zero(c.tag, c.weight, c.degree + 1);
    int k = c.level();
    for (auto& [key, v] : c.sym) {
        WedgeElement w = WedgeElement::zero(c.tag, (int)key.tup.size());
        w.add_term(key.tup, 1);
        if (k > 2) {
            chain_insert(r, key.arg, wedge_prepend(arg_decompose(c.tag, key.arg), w), v);
        } else {
            // {x}_2 (x) w -> x ^ (1-x) ^ w
            WedgeElement top =
                wedge_prepend(arg_decompose(c.tag, key.arg),
                              wedge_prepend(one_minus_decompose(c.tag, key.arg), w));
            r.wedge = r.wedge + top * v;
        }
    }
    return r;
}

P1Point cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3, const P1Point& z4) {
    // homogeneous dets, so the inf limits come out right
    auto hx = [](const P1Point& z) { return z.inf ? Rational(1) : z.v; };
    auto hy = [](const P1Point& z) { return z.inf ? Rational(0) : Rational(1); };
    auto det = [&](const P1Point& a, const P1Point& b) { return hx(a) * hy(b) - hx(b) * hy(a); };
    Rational num = det(z1, z3) * det(z2, z4);
    Rational den = det(z1, z4) * det(z2, z3);
    if (den == 0) return P1Point::infinity();
    return P1Point::finite(num / den);
}

PolylogChain five_term(const std::array<P1Point, 5>& z) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (z[i] == z[j]) throw Error(ErrorCode::RepeatedPoints, "five_term needs distinct points");
    PolylogChain c = PolylogChain::zero(FieldTag::Q, 2, 1);
    WedgeElement unit = WedgeElement::zero(FieldTag::Q, 0);
    unit.add_term({}, 1);
    for (int i = 0; i < 5; ++i) {
        std::array<P1Point, 4> rest;
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) rest[k++] = z[j];
        P1Point cr = cross_ratio(rest[0], rest[1], rest[2], rest[3]);
        LiArg arg = cr.inf ? LiArg::infinity() : LiArg::of(cr.v);
        chain_insert(c, arg, unit, Rational(i % 2 == 0 ? -1 : 1));
    }
    return c;
}

PolylogChain polylog_tame_symbol(const PolylogChain& c, const P1Point& nu) {
    if (c.tag != FieldTag::Qt)
        throw Error(ErrorCode::InvalidInput, "tame symbol acts on chains over Q(t)");
    if (c.degree < 2 && c.degree != c.weight)
        throw Error(ErrorCode::DegreeOutOfRange, "tame symbol shifts below degree 1");
    PolylogChain r = PolylogChain::zero(FieldTag::Q, c.weight - 1, c.degree - 1);
    if (c.degree == c.weight) {
        r.wedge = tame_symbol(c.wedge, nu);
        return r;
    }
    for (auto& [key, v] : c.sym) {
        if (key.arg.is_func()) {
            if (!is_split(key.arg.f))
                throw Error(ErrorCode::NonSplitInput, "non-split symbol argument");
            if (ord_at(key.arg.f, Place::of_point(nu)) != 0) continue; // rule 2
        }
        // rule 3: -{u-bar}_k (x) ts(wedge)
        Rational ubar = key.arg.is_func() ? unit_value_at(key.arg.f, nu) : key.arg.q;
        WedgeElement w = WedgeElement::zero(FieldTag::Qt, (int)key.tup.size());
        w.add_term(key.tup, 1);
        chain_insert(r, LiArg::of(ubar), tame_symbol(w, nu), -v);
    }
    return r;
}

PolylogChain tot_polylog(const PolylogChain& c) {
    std::set<P1Point> pts;
    for (auto& [key, v] : c.sym) {
        if (key.arg.is_func())
            for (auto& x : divisor_of(key.arg.f).rational_support()) pts.insert(x);
        for (auto& a : key.tup)
            if (!a.is_const) {
                if (a.poly.degree() != 1)
                    throw Error(ErrorCode::NonSplitInput, "non-split wedge atom");
                pts.insert(P1Point::finite(-a.poly.c[0]));
            }
    }
    for (auto& x : support_points(c.wedge)) pts.insert(x);
    pts.insert(P1Point::infinity());
    PolylogChain r = PolylogChain::zero(FieldTag::Q, c.weight - 1, c.degree - 1);
    for (auto& x : pts) r = r + polylog_tame_symbol(c, x);
    return r;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

double dilog(double x) {
    // 0 <= x <= 1
    if (x > 0.5) return kPi * kPi / 6.0 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
    double sum = 0, term = 1;
    for (int n = 1; n < 200; ++n) {
        term *= x;
        double add = term / (double(n) * n);
        sum += add;
        if (std::abs(add) < 1e-18) break;
    }
    return sum;
}

} // namespace

double rogers_L(double x) {
    if (x == 0) return 0;
    if (x == 1) return kPi * kPi / 6.0;
    if (x > 0 && x < 1) return dilog(x) + 0.5 * std::log(x) * std::log1p(-x);
    // extensions; exact only modulo pi^2/6, callers normalize into (0,1) first
    if (x > 1) return kPi * kPi / 3.0 - rogers_L(1.0 / x);
    return -rogers_L(x / (x - 1.0)); // x < 0
}

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace

WeightMap weight_map_for(const PolylogChain& c, int which) {
    WeightMap w;
    for (auto& [key, v] : c.sym)
        for (auto& a : key.tup) {
            if (!a.is_const) continue;
            double p = a.prime.convert_to<double>();
            double val;
            switch (which % 3) {
                case 0: val = std::log(p); break;
                case 1: val = std::sqrt(p); break;
                default: val = 0.5 + std::fmod(0.7548776662466927 * p, 1.0); break;
            }
            w[a.prime] = val;
        }
    return w;
}

double rogers_eval(const PolylogChain& c, const WeightMap& weights) {
    if (c.tag != FieldTag::Q || c.degree != c.weight - 1)
        throw Error(ErrorCode::InvalidInput, "rogers_eval wants a degree m-1 chain over Q");
    double total = 0;
    for (auto& [key, v] : c.sym) {
        if (key.arg.is_func()) throw Error(ErrorCode::InvalidInput, "function argument over Q");
        double pair = 1;
        for (auto& a : key.tup) {
            auto it = weights.find(a.prime);
            pair *= it == weights.end() ? 1.0 : it->second;
        }
        total += to_double(v) * rogers_L(to_double(key.arg.q)) * pair;
    }
    return total;
}

double rogers_lattice_defect(const PolylogChain& c, const WeightMap& weights) {
    if (c.tag != FieldTag::Q || c.degree != c.weight - 1)
        throw Error(ErrorCode::InvalidInput, "rogers defect wants a degree m-1 chain over Q");
    // group by wedge tuple, reduce each group modulo pi^2/6, recombine
    std::map<AtomTuple, double> groups;
    for (auto& [key, v] : c.sym)
        groups[key.tup] += to_double(v) * rogers_L(to_double(key.arg.q));
    const double unit = kPi * kPi / 6.0;
    double defect = 0;
    for (auto& [tup, val] : groups) {
        double res = val - std::round(val / unit) * unit;
        double pair = 1;
        for (auto& a : tup) {
            auto it = weights.find(a.prime);
            pair *= it == weights.end() ? 1.0 : it->second;
        }
        defect += res * pair;
    }
    return std::abs(defect);
}

} // namespace mww
