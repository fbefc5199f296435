#include "wedge.hpp"

#include <algorithm>
#include <sstream>

namespace mww {

std::string to_string(const Atom& a) {
    return a.is_const ? to_string(a.prime) : to_string(a.poly);
}

void MulVector::add(const Atom& a, const Rational& k) {
    if (k == 0) return;
    auto it = coords.find(a);
    if (it == coords.end()) {
        coords.emplace(a, k);
    } else {
        it->second += k;
        if (it->second == 0) coords.erase(it);
    }
}

MulVector log_decompose(const Rational& q) {
    if (q == 0) throw Error(ErrorCode::ZeroEntry, "log_decompose(0)");
    MulVector v;
    v.tag = FieldTag::Q;
    for (auto& [p, e] : factor_integer(rat_num(q))) v.add(Atom::of_prime(p), Rational(e));
    for (auto& [p, e] : factor_integer(rat_den(q))) v.add(Atom::of_prime(p), Rational(-e));
    return v;
}

MulVector log_decompose(const FactoredRatFunc& f) {
    MulVector v = log_decompose(f.lead);
    v.tag = FieldTag::Qt;
    for (auto& [p, e] : f.factors) v.add(Atom::of_poly(p), Rational(e));
    return v;
}

void WedgeElement::add_term(AtomTuple tup, const Rational& k) {
    if (k == 0) return;
    if ((int)tup.size() != arity) throw Error(ErrorCode::Internal, "tuple arity mismatch");
    // sort with sign; repeated atoms kill the term
    int sign = 1;
    for (size_t i = 1; i < tup.size(); ++i) {
        size_t j = i;
        while (j > 0 && tup[j] < tup[j - 1]) {
            std::swap(tup[j], tup[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < tup.size(); ++i)
        if (tup[i] == tup[i - 1]) return;
    Rational kk = k * sign;
    auto it = terms.find(tup);
    if (it == terms.end()) {
        terms.emplace(std::move(tup), kk);
    } else {
        it->second += kk;
        if (it->second == 0) terms.erase(it);
    }
}

WedgeElement operator+(const WedgeElement& a, const WedgeElement& b) {
    if (a.arity != b.arity || a.tag != b.tag)
        throw Error(ErrorCode::WrongArity, "wedge sum shape mismatch");
    WedgeElement r = a;
    for (auto& [t, k] : b.terms) r.add_term(t, k);
    return r;
}

WedgeElement operator-(const WedgeElement& a, const WedgeElement& b) {
    return a + b * Rational(-1);
}

WedgeElement operator*(const WedgeElement& a, const Rational& k) {
    WedgeElement r = WedgeElement::zero(a.tag, a.arity);
    if (k == 0) return r;
    for (auto& [t, c] : a.terms) r.terms[t] = c * k;
    return r;
}

WedgeElement wedge_canon(FieldTag tag, const std::vector<MulVector>& entries,
                         const Rational& coeff, long bound) {
    WedgeElement w = WedgeElement::zero(tag, (int)entries.size());
    if (coeff == 0) return w;
    long size = 1;
    for (auto& v : entries) {
        if (v.is_zero()) return w; // an entry equal to 1 kills the wedge
        size *= (long)v.coords.size();
        if (size > bound) throw Error(ErrorCode::ExpansionOverflow, "wedge expansion too large");
    }
    std::vector<std::vector<std::pair<Atom, Rational>>> flat;
    flat.reserve(entries.size());
    for (auto& v : entries) flat.emplace_back(v.coords.begin(), v.coords.end());
    std::vector<size_t> idx(entries.size(), 0);
    for (;;) {
        AtomTuple tup;
        Rational k = coeff;
        tup.reserve(entries.size());
        for (size_t i = 0; i < flat.size(); ++i) {
            tup.push_back(flat[i][idx[i]].first);
            k *= flat[i][idx[i]].second;
        }
        w.add_term(std::move(tup), k);
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == flat[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return w;
}

WedgeElement wedge_canon(const std::vector<FactoredRatFunc>& entries, const Rational& coeff,
                         long bound) {
    std::vector<MulVector> vs;
    vs.reserve(entries.size());
    for (auto& f : entries) vs.push_back(log_decompose(f));
    return wedge_canon(FieldTag::Qt, vs, coeff, bound);
}

WedgeElement wedge_canon_q(const std::vector<Rational>& entries, const Rational& coeff) {
    std::vector<MulVector> vs;
    vs.reserve(entries.size());
    for (auto& q : entries) vs.push_back(log_decompose(q));
    return wedge_canon(FieldTag::Q, vs, coeff);
}

WedgeElement wedge_product(const WedgeElement& a, const WedgeElement& b) {
    if (a.tag != b.tag) throw Error(ErrorCode::Internal, "wedge product over mixed fields");
    WedgeElement r = WedgeElement::zero(a.tag, a.arity + b.arity);
    for (auto& [ta, ka] : a.terms)
        for (auto& [tb, kb] : b.terms) {
            AtomTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(std::move(t), ka * kb);
        }
    return r;
}

WedgeElement wedge_prepend(const MulVector& v, const WedgeElement& w) {
    WedgeElement r = WedgeElement::zero(w.tag, w.arity + 1);
    for (auto& [a, k] : v.coords)
        for (auto& [t, c] : w.terms) {
            AtomTuple tup;
            tup.reserve(t.size() + 1);
            tup.push_back(a);
            tup.insert(tup.end(), t.begin(), t.end());
            r.add_term(std::move(tup), k * c);
        }
    return r;
}

FactoredRatFunc atom_as_frf(const Atom& a) {
    if (a.is_const) return FactoredRatFunc::constant(Rational(a.prime));
    FactoredRatFunc f;
    f.factors[a.poly] = 1;
    return f;
}

WedgeElement wedge_pullback(const Mobius& phi, const WedgeElement& w) {
    WedgeElement r = WedgeElement::zero(FieldTag::Qt, w.arity);
    for (auto& [t, k] : w.terms) {
        std::vector<FactoredRatFunc> entries;
        entries.reserve(t.size());
        for (auto& a : t) entries.push_back(mobius_pullback(phi, atom_as_frf(a)));
        r = r + wedge_canon(entries, k);
    }
    return r;
}

WedgeElement wedge_units_evaluate(const WedgeElement& w, const P1Point& nu) {
    WedgeElement r = WedgeElement::zero(FieldTag::Q, w.arity);
    for (auto& [t, k] : w.terms) {
        std::vector<MulVector> vals;
        vals.reserve(t.size());
        for (auto& a : t) {
            if (a.is_const) {
                vals.push_back(log_decompose(Rational(a.prime)));
                continue;
            }
            if (ord_at(atom_as_frf(a), Place::of_point(nu)) != 0)
                throw Error(ErrorCode::NotAUnit,
                            "atom " + to_string(a) + " is not a unit at " + to_string(nu));
            vals.push_back(log_decompose(unit_value_at(atom_as_frf(a), nu)));
        }
        r = r + wedge_canon(FieldTag::Q, vals, k);
    }
    return r;
}

bool wedge_is_split(const WedgeElement& w) {
    for (auto& [t, k] : w.terms)
        for (auto& a : t)
            if (!a.is_const && a.poly.degree() != 1) return false;
    return true;
}

void require_split(const WedgeElement& w, const char* who) {
    if (!wedge_is_split(w))
        throw Error(ErrorCode::NonSplitInput, std::string(who) + ": non-split input");
}

int tuple_nonconst_count(const AtomTuple& t) {
    int n = 0;
    for (auto& a : t)
        if (!a.is_const) ++n;
    return n;
}

std::string to_string(const WedgeElement& w) {
    if (w.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, k] : w.terms) {
        if (!first) os << " + ";
        first = false;
        os << to_string(k) << "*[";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) os << " ^ ";
            os << to_string(t[i]);
        }
        os << "]";
    }
    return os.str();
}

} // namespace mww
