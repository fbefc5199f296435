#ifndef MWW_POLY_HPP
#define MWW_POLY_HPP

#include "rational.hpp"

#include <utility>
#include <vector>

namespace mww {

// Dense univariate polynomial over Q. Zero polynomial is the empty
// coefficient vector; otherwise the top coefficient is nonzero.
struct Poly {
    std::vector<Rational> c; // c[i] is the coefficient of t^i

    Poly() = default;
    explicit Poly(std::vector<Rational> cc) : c(std::move(cc)) { trim(); }
    static Poly constant(const Rational& a);
    static Poly variable();                      // t
    static Poly linear_root(const Rational& r);  // t - r

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    const Rational& lead() const;
    Rational eval(const Rational& x) const;
    bool is_monic() const { return !is_zero() && lead() == 1; }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Rational& k);
Poly operator-(const Poly& a);

// quotient/remainder, b != 0
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly monic(const Poly& a);
Poly poly_gcd(const Poly& a, const Poly& b); // monic (or zero)
Poly poly_pow(const Poly& a, int e);

// Total order used for the wedge-basis: degree first, then coefficients
// compared so that monic linear factors sort by root (t-a < t-b iff a < b).
int poly_cmp(const Poly& a, const Poly& b);
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

std::string to_string(const Poly& p); // human form in t

struct PolyFactor {
    Poly p; // monic
    int mult;
};

// p = lead * prod(factors). Rational roots are split off exactly; degree <= 3
// rootless parts are irreducible over Q; higher-degree rootless parts are kept
// as opaque monic factors (no atom of that shape ever reaches a residue path,
// those require split input).
struct Factorization {
    Rational lead;
    std::vector<PolyFactor> factors;
};

Factorization factor_poly(const Poly& p);

} // namespace mww

#endif
