#pragma once

// Dense univariate polynomials over Q, lowest degree first.

#include <map>
#include <mutex>
#include <vector>

#include "jackson/rational.hpp"

namespace jackson::qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a = q*b + r, b nonzero
inline void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.clear();
    int db = degree(b);
    if (db < 0) throw DivisionByZero("polynomial division by zero");
    if (degree(r) < db) return;
    q.assign(r.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        Rational c = r.back() / lead;
        q[shift] = c;
        for (int k = 0; k <= db; ++k) r[shift + k] -= c * b[k];
        trim(r);
    }
    trim(q);
}

inline Poly mod(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

// s with a*s = 1 mod m, assuming gcd(a, m) = 1
inline Poly inverse_mod(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = mod(a, m);
    Poly s0, s1{Rational(1)};
    if (r1.empty()) throw DivisionByZero("inverse of zero");
    while (degree(r1) > 0) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        if (r1.empty()) throw DivisionByZero("non-invertible residue");
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return mod(s1, m);
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// n-th cyclotomic polynomial, cached
inline const Poly& cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    // divisors in ascending order, so every proper divisor is ready first
    for (long d = 1; d <= n; ++d) {
        if (n % d || cache.count(d)) continue;
        Poly t(d + 1, Rational(0));
        t[0] = -1;
        t[d] = 1;
        for (long e = 1; e < d; ++e) {
            if (d % e) continue;
            Poly q, r;
            divmod(t, cache.at(e), q, r);
            t = q;
        }
        cache[d] = t;
    }
    return cache.at(n);
}

}  // namespace jackson::qpoly
