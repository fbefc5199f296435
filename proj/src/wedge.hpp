#ifndef MWW_WEDGE_HPP
#define MWW_WEDGE_HPP

#include "qfield.hpp"

#include <vector>

namespace mww {

enum class FieldTag { Q, Qt };

// Basis atom of F^x tensor Q: a monic irreducible polynomial (Qt only) or a
// positive rational prime. Non-constant atoms sort before constants; linear
// factors sort by root; primes ascend.
struct Atom {
    bool is_const = true;
    Int prime = 0;
    Poly poly;

    static Atom of_prime(const Int& p) { Atom a; a.prime = p; return a; }
    static Atom of_poly(const Poly& p) { Atom a; a.is_const = false; a.poly = p; return a; }

    bool operator==(const Atom& o) const {
        if (is_const != o.is_const) return false;
        return is_const ? prime == o.prime : poly == o.poly;
    }
    bool operator<(const Atom& o) const {
        if (is_const != o.is_const) return !is_const;
        return is_const ? prime < o.prime : poly_less(poly, o.poly);
    }
};

std::string to_string(const Atom& a);

using AtomTuple = std::vector<Atom>; // strictly increasing

// Element of F^x tensor Q in prime-basis coordinates; sign is torsion and dropped.
struct MulVector {
    FieldTag tag = FieldTag::Q;
    std::map<Atom, Rational> coords;

    void add(const Atom& a, const Rational& k);
    bool is_zero() const { return coords.empty(); }
};

MulVector log_decompose(const Rational& q);             // over Q
MulVector log_decompose(const FactoredRatFunc& f);      // over Qt

// Canonical sparse element of Lambda^n(F^x) tensor Q.
struct WedgeElement {
    FieldTag tag = FieldTag::Q;
    int arity = 0;
    std::map<AtomTuple, Rational> terms;

    static WedgeElement zero(FieldTag t, int n) { WedgeElement w; w.tag = t; w.arity = n; return w; }
    bool is_zero() const { return terms.empty(); }
    void add_term(AtomTuple tup, const Rational& k); // sorts, signs, merges
    bool operator==(const WedgeElement& o) const {
        return tag == o.tag && arity == o.arity && terms == o.terms;
    }
    bool operator!=(const WedgeElement& o) const { return !(*this == o); }
};

WedgeElement operator+(const WedgeElement& a, const WedgeElement& b);
WedgeElement operator-(const WedgeElement& a, const WedgeElement& b);
WedgeElement operator*(const WedgeElement& a, const Rational& k);

// Default guard against runaway multilinear expansions.
inline constexpr long kExpansionBound = 1000000;

WedgeElement wedge_canon(FieldTag tag, const std::vector<MulVector>& entries,
                         const Rational& coeff, long bound = kExpansionBound);
WedgeElement wedge_canon(const std::vector<FactoredRatFunc>& entries,
                         const Rational& coeff = 1, long bound = kExpansionBound);
WedgeElement wedge_canon_q(const std::vector<Rational>& entries, const Rational& coeff = 1);

// w1 ^ w2 as canonical forms (bilinear merge with shuffle signs)
WedgeElement wedge_product(const WedgeElement& a, const WedgeElement& b);
// v ^ w for a rank-one prefix
WedgeElement wedge_prepend(const MulVector& v, const WedgeElement& w);

WedgeElement wedge_pullback(const Mobius& phi, const WedgeElement& w);

// Entrywise evaluation at a rational place; every atom must be a unit there.
WedgeElement wedge_units_evaluate(const WedgeElement& w, const P1Point& nu);

bool wedge_is_split(const WedgeElement& w); // every atom constant or degree 1
void require_split(const WedgeElement& w, const char* who);
int tuple_nonconst_count(const AtomTuple& t);

FactoredRatFunc atom_as_frf(const Atom& a);
std::string to_string(const WedgeElement& w);

} // namespace mww

#endif
