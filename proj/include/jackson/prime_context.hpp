#pragma once

// Residue maps Z[zeta_n] -> F_{ell^m}.

#include <numeric>
#include <string>

#include "jackson/cyclotomic.hpp"
#include "jackson/finite_field.hpp"

namespace jackson {

struct PrimeContext {
    long ell = 2;  // residue characteristic
    int m = 1;     // residue degree
    int e = 1;     // ramification index
};

// n with every factor ell removed
inline long prime_to_part(long n, long ell) {
    while (n % ell == 0) n /= ell;
    return n;
}

// order of ell in (Z/n)^*, for gcd(ell, n) = 1
inline long order_mod(long ell, long n) {
    if (n == 1) return 1;
    long x = ell % n, k = 1;
    while (x != 1) {
        x = (x * ell) % n;
        ++k;
    }
    return k;
}

// Smallest residue field F_{ell^M}, M a multiple of ctx.m, holding the image of zeta_n.
inline FiniteField residue_field(const PrimeContext& ctx, long n) {
    long np = prime_to_part(n, ctx.ell);
    long d = order_mod(ctx.ell, np);
    long M = std::lcm(static_cast<long>(ctx.m), d);
    return FiniteField(ctx.ell, static_cast<int>(M));
}

// The fixed image of zeta_n in F: the smallest element (by encoding) of exact
// order n', where n' is the part of n prime to the characteristic.
inline GFElement zeta_image(const FiniteField& F, long n) {
    long np = prime_to_part(n, F.characteristic());
    if (np == 1) return F.one();
    if ((F.size() - 1) % np != 0)
        throw NotReducible("no element of order " + std::to_string(np) + " in " + F.describe());
    for (std::uint32_t v = 1; v < F.size(); ++v)
        if (F.impl().order(v) == np) return F.element(v);
    throw NotReducible("no element of order " + std::to_string(np) + " in " + F.describe());
}

inline GFElement reduce_zeta(const PrimeContext& ctx, long n, long exponent) {
    FiniteField F = residue_field(ctx, n);
    return zeta_image(F, n).pow(exponent);
}

// Image of a cyclotomic element in a residue field F containing the image of zeta_n.
inline GFElement reduce(const Cyclotomic& a, const FiniteField& F) {
    GFElement z = zeta_image(F, a.order());
    GFElement acc = F.zero(), power = F.one();
    for (const Rational& c : a.coeffs()) {
        if (c != 0) acc += F.from_int(rational_mod(c, F.characteristic())) * power;
        power *= z;
    }
    return acc;
}

inline GFElement reduce(const Cyclotomic& a, const PrimeContext& ctx) {
    return reduce(a, residue_field(ctx, a.order()));
}

template <class S>
bool is_primitive_root(const S& x, long n) {
    if (x.is_zero()) throw DivisionByZero("is_primitive_root of zero");
    if (n < 1) return false;
    if (!x.pow(n).is_one()) return false;
    for (long d = 1; d < n; ++d)
        if (n % d == 0 && x.pow(d).is_one()) return false;
    return true;
}

// multiplicative order of a root of unity, 0 if x is not one
template <class S>
long root_order(const S& x, long bound) {
    S acc = x;
    for (long k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc *= x;
    }
    return 0;
}

}  // namespace jackson
