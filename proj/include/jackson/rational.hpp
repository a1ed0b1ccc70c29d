#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "jackson/errors.hpp"

namespace jackson {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// r mod ell for a rational whose denominator is prime to ell.
inline std::int64_t rational_mod(const Rational& r, std::int64_t ell) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer e = ell;
    Integer dm = den % e;
    if (dm < 0) dm += e;
    if (dm == 0)
        throw NotReducible("denominator of " + r.str() + " is divisible by " + std::to_string(ell));
    Integer nm = num % e;
    if (nm < 0) nm += e;
    // modular inverse of dm by Fermat is unsafe for composite ell; use extended gcd
    Integer a = dm, b = e, x0 = 1, x1 = 0;
    while (b != 0) {
        Integer q = a / b;
        Integer t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    Integer inv = x0 % e;
    if (inv < 0) inv += e;
    Integer res = (nm * inv) % e;
    return static_cast<std::int64_t>(res);
}

// p-adic valuation of a nonzero integer.
inline int valuation(Integer x, std::int64_t p) {
    if (x == 0) return -1;
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

}  // namespace jackson
