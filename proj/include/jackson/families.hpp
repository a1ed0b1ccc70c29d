#pragma once

// Constructors for the named algebra families.

#include <string>

#include "jackson/galois_field.hpp"
#include "jackson/prime_context.hpp"
#include "jackson/presentation.hpp"

namespace jackson {

enum class IndexMode { Truncating, Wrapping };
enum class IIForm { Raw, Shifted };

inline const char* to_string(IndexMode m) { return m == IndexMode::Truncating ? "truncating" : "wrapping"; }
inline const char* to_string(IIForm f) { return f == IIForm::Raw ? "raw" : "shifted"; }

template <class S>
QPresentation<S> build_polynomial(const typename S::field_type& F, int g) {
    QPresentation<S> P(F, g, "polynomial");
    for (int j = 1; j < g; ++j)
        for (int i = 0; i < j; ++i) P.set_rule(j, i, F.one());
    return P;
}

// e_j e_i = q_{ji} e_i e_j; q indexed [j][i] for j > i
template <class S>
QPresentation<S> build_quantum_affine(const typename S::field_type& F, int g,
                                      const std::vector<std::vector<S>>& q) {
    QPresentation<S> P(F, g, "quantum_affine");
    for (int j = 1; j < g; ++j)
        for (int i = 0; i < j; ++i) P.set_rule(j, i, q.at(j).at(i));
    return P;
}

// e_i e_j - zeta^{r(j-i)} e_j e_i - (1 - zeta^{r(j-i)}) x^[i+j>=n] e_{(i+j) mod n},  i < j
template <class S>
QPresentation<S> build_kummer_witt(int n, long r, const S& x, const S& zeta, bool require_primitive = false) {
    if (n < 2) throw IndexOutOfRange("Kummer-Witt algebra needs n >= 2");
    if (require_primitive && !is_primitive_root(zeta.pow(r), n))
        throw NotPrimitive("zeta^r is not a primitive " + std::to_string(n) + "-th root of unity");
    auto F = zeta.field();
    QPresentation<S> P(F, n, "kummer_witt");
    const S one = F.one();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            // oriented: e_j e_i = Q^{-1} e_i e_j + (1 - Q^{-1}) X e_k with Q = zeta^{r(j-i)}
            S qinv = zeta.pow(-r * (j - i));
            S coef = one - qinv;
            if (i + j >= n) coef = coef * x;
            std::map<int, S> lin;
            if (!coef.is_zero()) lin.emplace((i + j) % n, coef);
            P.set_rule(j, i, qinv, lin, F.zero());
        }
    return P;
}

// e_0e_1 = zeta^r e_1e_0, e_2e_0 = zeta^r e_0e_2, e_2e_1 = zeta^{2r} e_1e_2 + x e_0 + x omega
template <class S>
QPresentation<S> build_jackson(long r, const S& x, const S& zeta) {
    auto F = zeta.field();
    const S one = F.one();
    S zr = zeta.pow(r);
    S omega = one - zr * zr;
    QPresentation<S> P(F, 3, "jackson");
    P.set_rule(1, 0, zr.inv());
    P.set_rule(2, 0, zr);
    std::map<int, S> lin;
    if (!x.is_zero()) lin.emplace(0, x);
    P.set_rule(2, 1, zr * zr, lin, x * omega);
    return P;
}

// e_i e_j - q^{j-i} e_j e_i - (1 - q^{j-i}) e_{i+j},  i < j
template <class S>
QPresentation<S> build_infinitesimal(int n, const S& q, IndexMode mode = IndexMode::Wrapping) {
    if (n < 1) throw IndexOutOfRange("infinitesimal algebra needs n >= 1");
    if (q.is_zero()) throw DivisionByZero("q must be invertible");
    auto F = q.field();
    const S one = F.one();
    QPresentation<S> P(F, n, std::string("infinitesimal_") + to_string(mode));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            S qij = q.pow(i - j);
            std::map<int, S> lin;
            S coef = one - qij;
            bool keep = mode == IndexMode::Wrapping || i + j < n;
            if (keep && !coef.is_zero()) lin.emplace((i + j) % n, coef);
            P.set_rule(j, i, qij, lin, F.zero());
        }
    return P;
}

// II_lambda on e_0, e_1, e_2 := e_{p-1}
template <class S>
QPresentation<S> build_II(long p, const S& lambda, IIForm form) {
    if (p < 3 || !is_prime(p)) throw BadPrime("II needs an odd prime, got " + std::to_string(p));
    auto F = lambda.field();
    const S one = F.one();
    QPresentation<S> P(F, 3, std::string("II_") + to_string(form));
    S q10 = lambda.inv();
    S q20 = lambda.pow(1 - p);
    S q21 = lambda.pow(2 - p);
    if (form == IIForm::Shifted) {
        P.set_rule(1, 0, q10);
        P.set_rule(2, 0, q20);
        P.set_rule(2, 1, q21);
        return P;
    }
    // e_0e_1 - lambda e_1e_0 - (1-lambda) e_1  =>  e_1e_0 = lambda^{-1} e_0e_1 + (1 - lambda^{-1}) e_1
    std::map<int, S> t1, t2;
    if (!(one - q10).is_zero()) t1.emplace(1, one - q10);
    if (!(one - q20).is_zero()) t2.emplace(2, one - q20);
    P.set_rule(1, 0, q10, t1, F.zero());
    P.set_rule(2, 0, q20, t2, F.zero());
    P.set_rule(2, 1, q21);
    return P;
}

}  // namespace jackson
