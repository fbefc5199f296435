#ifndef MWW_RATIONAL_HPP
#define MWW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace mww {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
    ZeroPolynomial,
    ZeroEntry,
    ZeroDenominator,
    NonSplitInput,
    NotAUnit,
    NotAdmissible,
    DegreeOutOfRange,
    RepeatedPoints,
    DependentCovectors,
    DegenerateParameters,
    UnsupportedSymbolLevel,
    InvalidInput,
    MovingFunctionFailure,
    WrongArity,
    ExpansionOverflow,
    SyntaxError,
    Internal,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* error_code_name(ErrorCode c);

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

std::string to_string(const Int& n);
// "p/q" with q omitted when 1; used everywhere a rational is serialized
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& s);

// prime -> multiplicity, sign ignored; n must be nonzero
std::map<Int, int> factor_integer(const Int& n);

bool is_prime(const Int& n);

} // namespace mww

#endif
