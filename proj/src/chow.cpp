#include "chow.hpp"

#include <sstream>

namespace mww {

bool cycle_is_degenerate(const CurveCycle& c) {
    bool all_const = true;
    for (auto& f : c.entries) {
        if (!f.is_constant()) all_const = false;
        if (f.is_one()) return true; // image lies outside the cube
    }
    return all_const;
}

CycleChain CycleChain::zero(int m) {
    CycleChain c;
    c.weight = m;
    c.point_part = WedgeElement::zero(FieldTag::Q, m);
    return c;
}

void CycleChain::add_cycle(const CurveCycle& c, const Rational& k) {
    if (k == 0 || cycle_is_degenerate(c)) return;
    if ((int)c.entries.size() != weight + 1)
        throw Error(ErrorCode::WrongArity, "curve cycle arity must be weight + 1");
    for (auto& [c0, k0] : curve_terms) {
        if (c0.entries == c.entries) {
            k0 += k;
            return;
        }
    }
    curve_terms.push_back({c, k});
}

std::string to_string(const CurveCycle& c) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.entries.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c.entries[i]);
    }
    os << "]";
    return os.str();
}

namespace {

std::set<P1Point> cycle_support(const CurveCycle& c) {
    std::set<P1Point> pts;
    for (auto& f : c.entries)
        for (auto& x : divisor_of(f).rational_support()) pts.insert(x);
    pts.insert(P1Point::infinity());
    return pts;
}

bool has_value_one(const CurveCycle& c, const P1Point& x) {
    for (auto& f : c.entries) {
        if (ord_at(f, Place::of_point(x)) != 0) continue;
        if (unit_value_at(f, x) == 1) return true;
    }
    return false;
}

} // namespace

AdmissibleReport admissible(const CurveCycle& c) {
    for (auto& f : c.entries)
        if (!is_split(f)) throw Error(ErrorCode::NonSplitInput, "admissible: non-split entry");
    AdmissibleReport rep;
    for (auto& x : cycle_support(c)) {
        int hits = 0;
        for (auto& f : c.entries)
            if (ord_at(f, Place::of_point(x)) != 0) ++hits;
        if (hits >= 2 && !has_value_one(c, x)) {
            rep.ok = false;
            rep.violations.push_back(x);
        }
    }
    return rep;
}

WedgeElement alt_project(const PointCycle& p) {
    WedgeElement w = WedgeElement::zero(FieldTag::Q, (int)p.entries.size());
    std::vector<MulVector> vs;
    for (auto& c : p.entries) {
        if (c == 0) throw Error(ErrorCode::ZeroEntry, "point cycle entry is zero");
        if (c == 1) return w; // outside the cube
        vs.push_back(log_decompose(c));
    }
    return wedge_canon(FieldTag::Q, vs, 1);
}

WedgeElement cycle_boundary(const CurveCycle& c) {
    AdmissibleReport rep = admissible(c);
    if (!rep.ok) throw Error(ErrorCode::NotAdmissible, "cycle_boundary: not admissible");
    WedgeElement out = WedgeElement::zero(FieldTag::Q, (int)c.entries.size() - 1);
    if (cycle_is_degenerate(c)) return out;
    for (auto& x : cycle_support(c)) {
        if (has_value_one(c, x)) continue; // outside the cube
        for (size_t i = 0; i < c.entries.size(); ++i) {
            int o = ord_at(c.entries[i], Place::of_point(x));
            if (o == 0) continue;
            PointCycle face;
            for (size_t j = 0; j < c.entries.size(); ++j) {
                if (j == i) continue;
                face.entries.push_back(unit_value_at(c.entries[j], x));
            }
            Rational k = Rational(o) * (i % 2 == 0 ? 1 : -1);
            out = out + alt_project(face) * k;
        }
    }
    return out;
}

WedgeElement cycle_boundary(const CycleChain& c) {
    WedgeElement out = WedgeElement::zero(FieldTag::Q, c.weight);
    for (auto& [cyc, k] : c.curve_terms) out = out + cycle_boundary(cyc) * k;
    return out;
}

CurveCycle totaro_cycle(const Rational& a, const AtomTuple& tail) {
    if (a == 0 || a == 1)
        throw Error(ErrorCode::DegenerateParameters, "totaro cycle needs a outside {0,1}");
    CurveCycle c;
    c.entries.push_back(FactoredRatFunc::var());              // t
    c.entries.push_back(one_minus(FactoredRatFunc::var()));   // 1 - t
    c.entries.push_back(one_minus(FactoredRatFunc::constant(a) / FactoredRatFunc::var()));
    for (auto& atom : tail) {
        if (!atom.is_const)
            throw Error(ErrorCode::InvalidInput, "totaro tail must be constant");
        c.entries.push_back(FactoredRatFunc::constant(Rational(atom.prime)));
    }
    return c;
}

CycleChain totaro_map(const PolylogChain& c) {
    if (c.tag != FieldTag::Q)
        throw Error(ErrorCode::InvalidInput, "totaro_map is defined over Q");
    CycleChain out = CycleChain::zero(c.weight);
    if (c.degree == c.weight) {
        out.point_part = c.wedge;
        return out;
    }
    if (c.degree != c.weight - 1 || c.level() != 2)
        throw Error(ErrorCode::UnsupportedSymbolLevel,
                    "totaro_map takes weight-2 symbols in degree m-1");
    for (auto& [key, v] : c.sym) {
        if (key.arg.is_func())
            throw Error(ErrorCode::InvalidInput, "totaro_map argument must be rational");
        out.add_cycle(totaro_cycle(key.arg.q, key.tup), v);
    }
    return out;
}

CurveCycle m_prime_homotopy_cycle(const Rational& g1, const Rational& g2,
                                  const std::vector<Rational>& tail) {
    Rational g3 = g1 * g2;
    for (const Rational& g : {g1, g2, g3})
        if (g == 0 || g == 1)
            throw Error(ErrorCode::DegenerateParameters,
                        "homotopy cycle needs g1, g2, g1*g2 outside {0,1}");
    CurveCycle c;
    c.entries.push_back(FactoredRatFunc::linear(g3) * FactoredRatFunc::linear(Rational(1)) /
                        (FactoredRatFunc::linear(g1) * FactoredRatFunc::linear(g2)));
    c.entries.push_back(FactoredRatFunc::var());
    for (auto& x : tail) {
        if (x == 0 || x == 1)
            throw Error(ErrorCode::DegenerateParameters, "tail constant in {0,1}");
        c.entries.push_back(FactoredRatFunc::constant(x));
    }
    AdmissibleReport rep = admissible(c);
    if (!rep.ok) throw Error(ErrorCode::Internal, "homotopy cycle should be admissible");
    return c;
}

} // namespace mww
