#include "residues.hpp"

namespace mww {

Rational unit_part_value(const FactoredRatFunc& f, const P1Point& x) {
    int o = ord_at(f, Place::of_point(x));
    if (o == 0) return unit_value_at(f, x);
    FactoredRatFunc pi = x.inf ? frf_inverse(FactoredRatFunc::var()) : FactoredRatFunc::linear(x.v);
    return unit_value_at(f * frf_pow(pi, -o), x);
}

WedgeElement tame_symbol(const WedgeElement& w, const P1Point& nu) {
    require_split(w, "tame_symbol");
    WedgeElement r = WedgeElement::zero(FieldTag::Q, w.arity - 1);
    if (w.arity < 1) throw Error(ErrorCode::WrongArity, "tame symbol needs arity >= 1");
    Place v = Place::of_point(nu);
    for (auto& [tup, coeff] : w.terms) {
        std::vector<int> ord(tup.size());
        for (size_t i = 0; i < tup.size(); ++i)
            ord[i] = tup[i].is_const ? 0 : ord_at(atom_as_frf(tup[i]), v);
        for (size_t i = 0; i < tup.size(); ++i) {
            if (ord[i] == 0) continue;
            // move pi to the front of slot i: sign (-1)^i, then the unit rule
            std::vector<MulVector> vals;
            vals.reserve(tup.size() - 1);
            bool dead = false;
            for (size_t j = 0; j < tup.size() && !dead; ++j) {
                if (j == i) continue;
                Rational uv = tup[j].is_const ? Rational(tup[j].prime)
                                              : unit_part_value(atom_as_frf(tup[j]), nu);
                MulVector mv = log_decompose(uv);
                if (mv.is_zero()) dead = true; // residue class of 1
                vals.push_back(std::move(mv));
            }
            if (dead) continue;
            Rational k = coeff * ord[i];
            if (i % 2 == 1) k = -k;
            r = r + wedge_canon(FieldTag::Q, vals, k);
        }
    }
    return r;
}

std::set<P1Point> support_points(const WedgeElement& w) {
    std::set<P1Point> pts;
    for (auto& [tup, k] : w.terms)
        for (auto& a : tup)
            if (!a.is_const) {
                // split atoms are monic linear: root is -c0
                pts.insert(P1Point::finite(-a.poly.c[0]));
            }
    pts.insert(P1Point::infinity());
    return pts;
}

WedgeElement total_residue(const WedgeElement& w) {
    require_split(w, "total_residue");
    WedgeElement r = WedgeElement::zero(FieldTag::Q, w.arity - 1);
    for (auto& x : support_points(w)) r = r + tame_symbol(w, x);
    return r;
}

bool weil_check(const FactoredRatFunc& f, const FactoredRatFunc& g) {
    return total_residue(wedge_canon({f, g})).is_zero();
}

std::string to_string(const SurfaceCurve& c) {
    return std::string(c.in_t ? "t=" : "s=") + to_string(c.at);
}

void require_split(const SurfaceWedge& w) {
    for (auto& term : w.terms)
        for (auto& e : term.entries)
            if (!is_split(e.u) || !is_split(e.v))
                throw Error(ErrorCode::NonSplitInput, "surface wedge: non-split entry");
}

namespace {

std::set<P1Point> surface_support(const SurfaceWedge& w, bool in_t) {
    std::set<P1Point> pts;
    for (auto& term : w.terms)
        for (auto& e : term.entries)
            for (auto& x : divisor_of(in_t ? e.u : e.v).rational_support()) pts.insert(x);
    pts.insert(P1Point::infinity());
    return pts;
}

// tame symbol of one split term along {t=a} (or {s=b}); the surviving factor
// lives in the other variable
WedgeElement term_residue(const SurfaceTerm& term, const SurfaceCurve& c) {
    WedgeElement r = WedgeElement::zero(FieldTag::Qt, (int)term.entries.size() - 1);
    for (size_t i = 0; i < term.entries.size(); ++i) {
        const FactoredRatFunc& fi = c.in_t ? term.entries[i].u : term.entries[i].v;
        int o = ord_at(fi, Place::of_point(c.at));
        if (o == 0) continue;
        std::vector<FactoredRatFunc> rest;
        rest.reserve(term.entries.size() - 1);
        for (size_t j = 0; j < term.entries.size(); ++j) {
            if (j == i) continue;
            const FactoredRatFunc& uj = c.in_t ? term.entries[j].u : term.entries[j].v;
            const FactoredRatFunc& vj = c.in_t ? term.entries[j].v : term.entries[j].u;
            rest.push_back(vj * FactoredRatFunc::constant(unit_part_value(uj, c.at)));
        }
        Rational k = term.coeff * o;
        if (i % 2 == 1) k = -k;
        r = r + wedge_canon(rest, k);
    }
    return r;
}

} // namespace

std::map<SurfaceCurve, WedgeElement> surface_residues(const SurfaceWedge& w) {
    require_split(w);
    std::map<SurfaceCurve, WedgeElement> out;
    for (bool in_t : {true, false}) {
        for (auto& x : surface_support(w, in_t)) {
            SurfaceCurve c{in_t, x};
            WedgeElement r = WedgeElement::zero(FieldTag::Qt, w.arity - 1);
            for (auto& term : w.terms) r = r + term_residue(term, c);
            if (!r.is_zero()) out[c] = std::move(r);
        }
    }
    return out;
}

WedgeElement parshin_double_residue_sum(const SurfaceWedge& w) {
    WedgeElement sum = WedgeElement::zero(FieldTag::Q, w.arity - 2);
    for (auto& [c, res] : surface_residues(w)) sum = sum + total_residue(res);
    return sum;
}

bool parshin_double_residue_check(const SurfaceWedge& w) {
    return parshin_double_residue_sum(w).is_zero();
}

SurfaceWedge m_prime_homotopy_surface(const Rational& g1, const Rational& g2,
                                      const Rational& w1, const Rational& w2,
                                      const std::vector<Rational>& tail) {
    auto relation_func = [](const Rational& a, const Rational& b) {
        // (x - ab)(x - 1) / ((x - a)(x - b))
        return FactoredRatFunc::linear(a * b) * FactoredRatFunc::linear(Rational(1)) /
               (FactoredRatFunc::linear(a) * FactoredRatFunc::linear(b));
    };
    FactoredRatFunc one = FactoredRatFunc::one();
    SurfaceTerm term;
    term.entries.push_back({relation_func(g1, g2), one});
    term.entries.push_back({FactoredRatFunc::var(), one});
    term.entries.push_back({one, relation_func(w1, w2)});
    term.entries.push_back({one, FactoredRatFunc::var()});
    for (auto& c : tail) term.entries.push_back({FactoredRatFunc::constant(c), one});
    SurfaceWedge w;
    w.arity = (int)term.entries.size();
    w.terms.push_back(std::move(term));
    return w;
}

} // namespace mww
