#ifndef MWW_QFIELD_HPP
#define MWW_QFIELD_HPP

#include "poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mww {

// A point of P^1(Q), finite or infinity.
struct P1Point {
    bool inf = false;
    Rational v = 0;

    static P1Point infinity() { P1Point p; p.inf = true; return p; }
    static P1Point finite(const Rational& r) { P1Point p; p.v = r; return p; }
    bool operator==(const P1Point& o) const { return inf == o.inf && (inf || v == o.v); }
    bool operator<(const P1Point& o) const {
        if (inf != o.inf) return !inf; // finite points first
        return !inf && v < o.v;
    }
};

std::string to_string(const P1Point& x);

// Nonzero element of Q(t) in factored canonical form: lead * prod p_i^e_i with
// p_i monic and pairwise distinct.
struct FactoredRatFunc {
    Rational lead = 1;
    std::map<Poly, int, PolyLess> factors;

    static FactoredRatFunc one() { return FactoredRatFunc(); }
    static FactoredRatFunc constant(const Rational& a);
    static FactoredRatFunc from_poly(const Poly& p);
    static FactoredRatFunc linear(const Rational& root); // t - root
    static FactoredRatFunc var();                        // t

    bool is_constant() const { return factors.empty(); }
    bool is_one() const { return factors.empty() && lead == 1; }
    int degree_num() const;   // total degree of the numerator part
    int degree_den() const;   // total degree of the denominator part

    bool operator==(const FactoredRatFunc& o) const {
        return lead == o.lead && factors == o.factors;
    }
    bool operator!=(const FactoredRatFunc& o) const { return !(*this == o); }
};

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b);
FactoredRatFunc operator/(const FactoredRatFunc& a, const FactoredRatFunc& b);
FactoredRatFunc frf_pow(const FactoredRatFunc& a, int e);
FactoredRatFunc frf_inverse(const FactoredRatFunc& a);

// numerator/denominator as expanded polynomials (coprime)
std::pair<Poly, Poly> expand(const FactoredRatFunc& f);
FactoredRatFunc from_num_den(const Poly& num, const Poly& den);
// f + g, f - c etc. go through expansion; result refactored
FactoredRatFunc frf_add(const FactoredRatFunc& a, const FactoredRatFunc& b);
FactoredRatFunc frf_sub(const FactoredRatFunc& a, const FactoredRatFunc& b);
FactoredRatFunc one_minus(const FactoredRatFunc& f); // 1 - f, must be nonzero

int total_order_cmp(const FactoredRatFunc& a, const FactoredRatFunc& b);

std::string to_string(const FactoredRatFunc& f);

// A place of P^1 over Q: a monic irreducible polynomial or infinity.
struct Place {
    bool at_infinity = false;
    Poly p; // monic irreducible when finite

    static Place infinity() { Place v; v.at_infinity = true; return v; }
    static Place finite(const Poly& q) { Place v; v.p = q; return v; }
    static Place rational(const Rational& r) { return finite(Poly::linear_root(r)); }
    static Place of_point(const P1Point& x) { return x.inf ? infinity() : rational(x.v); }

    int degree() const { return at_infinity ? 1 : p.degree(); }
    bool is_rational() const { return at_infinity || p.degree() == 1; }
    std::optional<P1Point> point() const; // for rational places
    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && (at_infinity || p == o.p);
    }
    bool operator<(const Place& o) const {
        if (at_infinity != o.at_infinity) return !at_infinity;
        return !at_infinity && poly_less(p, o.p);
    }
};

std::string to_string(const Place& v);

struct DivisorP1 {
    std::map<Place, int> orders;

    void add(const Place& v, int n);
    int total_degree() const; // sum ord * deg(place)
    std::set<P1Point> rational_support() const;
    bool operator==(const DivisorP1& o) const { return orders == o.orders; }
};

DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b);

int ord_at(const FactoredRatFunc& f, const Place& v);
DivisorP1 divisor_of(const FactoredRatFunc& f);
bool is_split(const FactoredRatFunc& f);
bool disjoint_supports(const FactoredRatFunc& f, const FactoredRatFunc& g);

// Value of f at a point of P^1, as a point of P^1 (0 and infinity allowed).
P1Point value_at(const FactoredRatFunc& f, const P1Point& x);
// Value when f is a unit at x (throws NotAUnit otherwise).
Rational unit_value_at(const FactoredRatFunc& f, const P1Point& x);

// t -> (a t + b) / (c t + d), ad - bc != 0
struct Mobius {
    Rational a = 1, b = 0, c = 0, d = 1;

    Mobius() = default;
    Mobius(Rational a_, Rational b_, Rational c_, Rational d_);
    static Mobius identity() { return Mobius(); }
    static Mobius inversion() { return Mobius(0, 1, 1, 0); } // 1/t
    Rational det() const { return a * d - b * c; }
    P1Point apply(const P1Point& x) const;
    Mobius inverse() const;
};

Mobius compose(const Mobius& f, const Mobius& g); // t -> f(g(t))
FactoredRatFunc mobius_pullback(const Mobius& phi, const FactoredRatFunc& f);

// Deterministic supply of fresh rational constants (3, 5, 7, ...), skipping a
// given avoid-set.
struct FreshStream {
    std::set<Rational> avoid;
    Rational next_candidate = 3;

    void block(const Rational& r) { avoid.insert(r); }
    void block_points(const std::set<P1Point>& pts);
    Rational take();
};

enum class MovingMode { Simple, UnitOnD };

// Moving lemma for P^1, strong form: ord_x(f) = 1 and either the rest of the
// divisor of f avoids D (Simple) or f is exactly 1 on D (UnitOnD).
FactoredRatFunc moving_function(const P1Point& x, const std::set<P1Point>& D, MovingMode mode,
                                FreshStream* fresh = nullptr);

} // namespace mww

#endif
