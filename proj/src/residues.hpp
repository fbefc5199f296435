#ifndef MWW_RESIDUES_HPP
#define MWW_RESIDUES_HPP

#include "wedge.hpp"

namespace mww {

// Value at x of the unit part f * pi^{-ord_x(f)}, pi the monic uniformiser
// at x (1/t at infinity).
Rational unit_part_value(const FactoredRatFunc& f, const P1Point& x);

// Tame symbol at a rational place; input must be split. Arity drops by one.
WedgeElement tame_symbol(const WedgeElement& w, const P1Point& nu);

// Every rational place in the support, plus infinity.
std::set<P1Point> support_points(const WedgeElement& w);

// Sum of tame symbols over all places of Q(t).
WedgeElement total_residue(const WedgeElement& w);

bool weil_check(const FactoredRatFunc& f, const FactoredRatFunc& g);

// Element of split shape in Lambda^n(Q(t,s)^x) tensor Q: a Q-combination of
// wedges whose entries are products u(t) * v(s).
struct SurfaceEntry {
    FactoredRatFunc u; // in t
    FactoredRatFunc v; // in s
};

struct SurfaceTerm {
    std::vector<SurfaceEntry> entries;
    Rational coeff = 1;
};

struct SurfaceWedge {
    int arity = 0;
    std::vector<SurfaceTerm> terms;
};

// Vertical {t=a}, horizontal {s=b} lines, including the two at infinity.
struct SurfaceCurve {
    bool in_t = true; // true: t = at, false: s = at
    P1Point at;

    bool operator<(const SurfaceCurve& o) const {
        if (in_t != o.in_t) return in_t;
        return at < o.at;
    }
    bool operator==(const SurfaceCurve& o) const { return in_t == o.in_t && at == o.at; }
};

std::string to_string(const SurfaceCurve& c);

void require_split(const SurfaceWedge& w);

// Tame symbol of W along each vertical/horizontal curve in the support; the
// residue along {t=a} lives over Q(s) and comes back re-tagged as Qt (and
// symmetrically for {s=b}).
std::map<SurfaceCurve, WedgeElement> surface_residues(const SurfaceWedge& w);

// Parshin at split desk scale: sum over curves of Tot of the curve residue.
bool parshin_double_residue_check(const SurfaceWedge& w);
WedgeElement parshin_double_residue_sum(const SurfaceWedge& w);

SurfaceWedge m_prime_homotopy_surface(const Rational& g1, const Rational& g2,
                                      const Rational& w1, const Rational& w2,
                                      const std::vector<Rational>& tail);

} // namespace mww

#endif
