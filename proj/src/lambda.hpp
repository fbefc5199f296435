#ifndef MWW_LAMBDA_HPP
#define MWW_LAMBDA_HPP

#include "chow.hpp"

namespace mww {

// Degrees m-1 and m of Lambda(Q, m) with the curve fixed to P^1.  The curve
// part [P^1, w] is merged into a single wedge: [Y,a]+[Y,b]=[Y,a+b] holds by
// definition.
struct LambdaElement {
    int weight = 2;
    WedgeElement point_part; // over Q, arity m
    WedgeElement curve_part; // over Qt, arity m+1

    static LambdaElement zero(int m);
    bool is_zero() const { return point_part.is_zero() && curve_part.is_zero(); }
    bool operator==(const LambdaElement& o) const {
        return weight == o.weight && point_part == o.point_part && curve_part == o.curve_part;
    }
};

LambdaElement operator+(const LambdaElement& a, const LambdaElement& b);
LambdaElement operator*(const LambdaElement& a, const Rational& k);
std::string to_string(const LambdaElement& e);

// d[P^1, w] = [point, Tot(w)]; the point part of the input does not move
// (the complex stops in degree m).
LambdaElement lambda_d(const LambdaElement& e);

LambdaElement w_map(const CycleChain& c);
LambdaElement t_prime(const PolylogChain& c);

// Chosen representative normalization for [P^1, .]: tuples with at most two
// non-constant atoms vanish in Lambda (two-function classes with constant
// tails are zero, all-constant wedges are degenerate).
WedgeElement bs_reduce(const WedgeElement& w);

struct Covector {
    Rational x = 0, y = 0;
};

// omega(l1,l2,l3,l4) = (l1/l4) ^ (l2/l4) ^ (l3/l4) after dehomogenizing the
// linear forms; checks the alternating five-term sum vanishes in
// Lambda^3(Q(t)^x) tensor Q.
WedgeElement five_term_lambda_sum(const std::array<Covector, 5>& l);
bool five_term_lambda_check(const std::array<Covector, 5>& l);

// ---- disjointification ----------------------------------------------------

struct FuncTuple {
    std::vector<FactoredRatFunc> entries;
    Rational coeff = 1;
};

struct DisjointTuple {
    std::vector<FactoredRatFunc> entries; // pairwise disjoint divisors
    Rational coeff = 1;
};

struct RewriteStep {
    int phase = 1;            // 1: J-overlap pass, 2: order-product pass
    long potential_before = 0;
    long potential_after = 0; // summed over the whole worklist
};

struct DisjointifyResult {
    std::vector<DisjointTuple> tuples;
    std::vector<RewriteStep> trace;
};

long j_overlap_potential(const FuncTuple& t);
long order_product_potential(const FuncTuple& t);

DisjointifyResult disjointify_lambda(const WedgeElement& w, FreshStream* fresh = nullptr);

struct CycleRewriteRecord {
    int phase = 1;
    FactoredRatFunc h;
    P1Point at;
};

struct DisjointifyCycleResult {
    CycleChain chain;
    std::vector<CycleRewriteRecord> relations;
};

// Cycle-level disjointification: the same two passes through the relations of
// the quotient complex, every intermediate cycle admissible, moving functions
// in UnitOnD mode.
DisjointifyCycleResult disjointify_cycle(const CurveCycle& c, FreshStream* fresh = nullptr);

// ---- V(P^1) ---------------------------------------------------------------

struct VGenerator {
    std::vector<FactoredRatFunc> entries; // pairwise disjoint divisors
};

struct VCombination {
    std::vector<std::pair<VGenerator, Rational>> terms;

    void add(VGenerator g, const Rational& k); // sorts entries, merges
};

WedgeElement v_theta(const VCombination& v);
VCombination v_alpha(const WedgeElement& w, FreshStream* fresh = nullptr);
VCombination v_alpha_tuple(const std::vector<FactoredRatFunc>& fs, const Rational& coeff,
                           FreshStream* fresh = nullptr);
std::string to_string(const VCombination& v);

} // namespace mww

#endif
