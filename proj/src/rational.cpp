#include "rational.hpp"

namespace mww {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::NonSplitInput: return "NonSplitInput";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::RepeatedPoints: return "RepeatedPoints";
        case ErrorCode::DependentCovectors: return "DependentCovectors";
        case ErrorCode::DegenerateParameters: return "DegenerateParameters";
        case ErrorCode::UnsupportedSymbolLevel: return "UnsupportedSymbolLevel";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::MovingFunctionFailure: return "MovingFunctionFailure";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::ExpansionOverflow: return "ExpansionOverflow";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::SyntaxError, "bad rational '" + s + "'");
    }
}

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

Int powmod(Int base, Int exp, const Int& m) {
    Int r = 1;
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin(const Int& n, const Int& a) {
    if (n % a == 0) return n == a;
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// deterministic Pollard rho; polynomial x^2 + c, c = 1, 2, ...
Int pollard_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out[n] += 1; return; }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic for n < 3.3e24
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::map<Int, int> factor_integer(const Int& n) {
    if (n == 0) throw Error(ErrorCode::ZeroEntry, "factor_integer(0)");
    std::map<Int, int> out;
    Int m = abs(n);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        while (m % p == 0) { out[p] += 1; m /= p; }
    }
    // small trial division, then rho for what's left
    for (Int p = 17; p * p <= m && p < 100000; p += 2) {
        while (m % p == 0) { out[p] += 1; m /= p; }
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

} // namespace mww
