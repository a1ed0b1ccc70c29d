#pragma once

// The bracket <e_i, e_j> = a (q^i - q^j) e_{i+j} on the infinitesimal basis.

#include <optional>
#include <vector>

#include "jackson/families.hpp"
#include "jackson/presentation.hpp"

namespace jackson {

template <class S>
struct BracketMode {
    IndexMode mode = IndexMode::Truncating;
    S x;  // wrapping factor, ignored when truncating
};

// coefficient vector of <e_i, e_j> in the basis e_0..e_{n-1}
template <class S>
std::vector<S> bracket_vector(int i, int j, int n, const S& q, const S& a, const BracketMode<S>& m) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw IndexOutOfRange("bracket index out of range");
    auto F = q.field();
    std::vector<S> v(n, F.zero());
    S c = a * (q.pow(i) - q.pow(j));
    if (c.is_zero()) return v;
    int s = i + j;
    if (m.mode == IndexMode::Truncating) {
        if (s < n) v[s] = c;
    } else {
        v[s % n] = c * m.x.pow(s / n);
    }
    return v;
}

template <class S>
NCPoly<S> hom_lie_bracket(int i, int j, int n, const S& q, const S& a, const BracketMode<S>& m) {
    auto v = bracket_vector(i, j, n, q, a, m);
    NCPoly<S> p;
    for (int k = 0; k < n; ++k)
        if (!v[k].is_zero()) {
            Exponents e(n, 0);
            e[k] = 1;
            p.emplace(e, v[k]);
        }
    return p;
}

// <u, v> for arbitrary linear combinations
template <class S>
std::vector<S> bracket_linear(const std::vector<S>& u, const std::vector<S>& v, const S& q, const S& a,
                              const BracketMode<S>& m) {
    int n = static_cast<int>(u.size());
    auto F = q.field();
    std::vector<S> out(n, F.zero());
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            auto b = bracket_vector(i, j, n, q, a, m);
            S s = u[i] * v[j];
            for (int k = 0; k < n; ++k) out[k] += s * b[k];
        }
    }
    return out;
}

template <class S>
struct HomJacobiResult {
    bool antisymmetric = true;
    bool holds = false;
    std::optional<S> constant;  // the scalar in (hL2); empty if any scalar works
};

// Checks antisymmetry and searches a single scalar c with
//   cyclic sum { <sigma(a), <b, c>> + c <a, <b, c>> } = 0
// for every basis triple, sigma(e_i) = q^i e_i.
template <class S>
HomJacobiResult<S> check_hom_jacobi(int n, const S& q, const S& a, const BracketMode<S>& m) {
    auto F = q.field();
    HomJacobiResult<S> res;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto x = bracket_vector(i, j, n, q, a, m);
            auto y = bracket_vector(j, i, n, q, a, m);
            for (int k = 0; k < n; ++k)
                if (!(x[k] + y[k]).is_zero()) res.antisymmetric = false;
        }
    auto basis = [&](int k, const S& scale) {
        std::vector<S> v(n, F.zero());
        v[k] = scale;
        return v;
    };
    std::vector<std::pair<std::vector<S>, std::vector<S>>> eqs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<S> U(n, F.zero()), V(n, F.zero());
                int t[3] = {i, j, k};
                for (int r = 0; r < 3; ++r) {
                    int A = t[r], B = t[(r + 1) % 3], C = t[(r + 2) % 3];
                    auto bc = bracket_linear(basis(B, F.one()), basis(C, F.one()), q, a, m);
                    auto s = bracket_linear(basis(A, q.pow(A)), bc, q, a, m);
                    auto p = bracket_linear(basis(A, F.one()), bc, q, a, m);
                    for (int l = 0; l < n; ++l) {
                        U[l] += s[l];
                        V[l] += p[l];
                    }
                }
                eqs.emplace_back(std::move(U), std::move(V));
            }
    // U + c V = 0 componentwise for all triples
    std::optional<S> c;
    for (auto& [U, V] : eqs)
        for (int l = 0; l < n; ++l)
            if (!V[l].is_zero()) {
                S cand = -(U[l] / V[l]);
                if (!c) c = cand;
                else if (*c != cand) return res;
            }
    for (auto& [U, V] : eqs)
        for (int l = 0; l < n; ++l) {
            S val = c ? U[l] + *c * V[l] : U[l];
            if (!val.is_zero()) return res;
        }
    res.holds = res.antisymmetric;
    res.constant = c;
    return res;
}

}  // namespace jackson
