#ifndef MWW_POLYLOG_HPP
#define MWW_POLYLOG_HPP

#include "residues.hpp"

#include <array>

namespace mww {

// Argument of a {x}_k symbol: a point of P^1(Q) or a rational function.
struct LiArg {
    enum Kind { RationalArg, InfinityArg, FuncArg } kind = RationalArg;
    Rational q = 0;
    FactoredRatFunc f;

    static LiArg of(const Rational& r) { LiArg a; a.q = r; return a; }
    static LiArg infinity() { LiArg a; a.kind = InfinityArg; return a; }
    static LiArg of(const FactoredRatFunc& g);
    bool is_func() const { return kind == FuncArg; }
};

int liarg_cmp(const LiArg& a, const LiArg& b);
std::string to_string(const LiArg& a);

// Canonical key of a symbol term: argument plus one wedge basis tuple.
struct SymKey {
    LiArg arg;
    AtomTuple tup;

    bool operator<(const SymKey& o) const {
        int c = liarg_cmp(arg, o.arg);
        if (c != 0) return c < 0;
        return tup < o.tup;
    }
    bool operator==(const SymKey& o) const {
        return liarg_cmp(arg, o.arg) == 0 && tup == o.tup;
    }
};

// One homogeneous degree of Gamma(F, m).  Degree j < m holds symbol terms
// {x}_k tensor wedge with k = m - j + 1; degree m is a plain wedge.
struct PolylogChain {
    FieldTag tag = FieldTag::Q;
    int weight = 2;
    int degree = 1;
    std::map<SymKey, Rational> sym;
    WedgeElement wedge; // used when degree == weight

    static PolylogChain zero(FieldTag t, int m, int j);
    int level() const { return weight - degree + 1; }
    int wedge_arity() const { return weight - level(); }
    bool is_zero() const { return sym.empty() && wedge.is_zero(); }
    bool operator==(const PolylogChain& o) const {
        return tag == o.tag && weight == o.weight && degree == o.degree && sym == o.sym &&
               wedge == o.wedge;
    }
};

PolylogChain operator+(const PolylogChain& a, const PolylogChain& b);
PolylogChain operator-(const PolylogChain& a, const PolylogChain& b);
PolylogChain operator*(const PolylogChain& a, const Rational& k);
std::string to_string(const PolylogChain& c);

// The six-fold orbit normal form of a level-2 symbol over Q: {0,1,inf} die;
// otherwise the representative is the smallest orbit value inside (0,1), the
// sign comes from the first map in the fixed order id, 1/x, 1-x, 1/(1-x),
// (x-1)/x, x/(x-1) that reaches it.
struct B2Normal {
    Rational rep;
    int sign; // 0 when the symbol dies
};

B2Normal b2_normalize(const Rational& x);

// Adds coeff * {arg}_level tensor w to the chain, applying normalization.
void chain_insert(PolylogChain& c, const LiArg& arg, const WedgeElement& w, const Rational& coeff);
PolylogChain li_normalize(const PolylogChain& c); // idempotent re-normalization

PolylogChain make_symbol_chain(FieldTag tag, int weight, int level, const LiArg& arg,
                               const WedgeElement& w, const Rational& coeff = 1);

PolylogChain delta(const PolylogChain& c);

// Cross-ratio convention (z1-z3)(z2-z4)/((z1-z4)(z2-z3)), with limits at inf;
// validated by delta(five_term) = 0.
P1Point cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3, const P1Point& z4);

PolylogChain five_term(const std::array<P1Point, 5>& z);

PolylogChain polylog_tame_symbol(const PolylogChain& c, const P1Point& nu);
PolylogChain tot_polylog(const PolylogChain& c);

double rogers_L(double x);

// Weight map: atom (prime) -> positive real; a tuple pairs to the product of
// its weights.
using WeightMap = std::map<Int, double>;
WeightMap weight_map_for(const PolylogChain& c, int which); // which = 0,1,2

double rogers_eval(const PolylogChain& c, const WeightMap& weights);

// Distance from Sum coeff*L(rep), taken per wedge tuple, to the nearest
// multiple of pi^2/6, recombined under the weight map.  The five-term
// relation holds for the Rogers function only modulo pi^2/6, so this is the
// defect used by the heuristic verdicts.
double rogers_lattice_defect(const PolylogChain& c, const WeightMap& weights);

} // namespace mww

#endif
