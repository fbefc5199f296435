#ifndef MWW_CHOW_HPP
#define MWW_CHOW_HPP

#include "polylog.hpp"

namespace mww {

// Parametrized point cycle [c_1,...,c_n]_{Spec Q}; an entry equal to 1 puts
// the point outside the cube, so the class is zero.
struct PointCycle {
    std::vector<Rational> entries;
};

// Parametrized cycle [f_1,...,f_n]_{P^1}, entries split.
struct CurveCycle {
    std::vector<FactoredRatFunc> entries;
};

bool cycle_is_degenerate(const CurveCycle& c); // all entries constant, or an entry is 1

// Degrees m-1 and m of the cubical complex at desk scale: curve terms plus a
// degree-m part stored directly as its wedge class.
struct CycleChain {
    int weight = 2;
    std::vector<std::pair<CurveCycle, Rational>> curve_terms; // degree m-1, arity m+1
    WedgeElement point_part;                                  // degree m, arity m

    static CycleChain zero(int m);
    void add_cycle(const CurveCycle& c, const Rational& k);
};

std::string to_string(const CurveCycle& c);

struct AdmissibleReport {
    bool ok = true;
    std::vector<P1Point> violations;
};

// A curve cycle is admissible iff at every point where two or more entries
// land in {0, inf}, some entry takes the value 1.
AdmissibleReport admissible(const CurveCycle& c);

WedgeElement alt_project(const PointCycle& p);

// Signed sum of face restrictions: the z=0 face counts ord > 0, the z=inf
// face ord < 0, coordinate i carries (-1)^(i+1); points where some entry is 1
// lie outside the cube and are skipped.
WedgeElement cycle_boundary(const CurveCycle& c);
WedgeElement cycle_boundary(const CycleChain& c);

CurveCycle totaro_cycle(const Rational& a, const AtomTuple& tail);
CycleChain totaro_map(const PolylogChain& c);

CurveCycle m_prime_homotopy_cycle(const Rational& g1, const Rational& g2,
                                  const std::vector<Rational>& tail);

} // namespace mww

#endif
