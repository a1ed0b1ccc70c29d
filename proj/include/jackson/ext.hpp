#pragma once

// Ext^1 between one-dimensional modules via 2x2 extension matrices
//   rho(e) = [[N(e), delta(e)], [0, M(e)]].

#include <set>
#include <string>
#include <vector>

#include "jackson/linalg.hpp"
#include "jackson/locus.hpp"

namespace jackson {

template <class S>
struct ExtResult {
    int dimension = 0;
    std::vector<std::vector<S>> cocycle_basis;  // representatives of a quotient basis
    int coboundary_dim = 0;
    int cocycle_dim = 0;
};

// Linear conditions on delta: the (1,2) entry of every relation under rho.
template <class S>
linalg::Matrix<S> cocycle_equations(const QPresentation<S>& P, const Character<S>& M, const Character<S>& N) {
    int g = P.gens();
    const S zero = P.field().zero();
    linalg::Matrix<S> rows;
    for (const Rule<S>* r : P.ordered_rules()) {
        // N_j d_i + d_j M_i - q (N_i d_j + d_i M_j) - sum c_k d_k
        std::vector<S> row(g, zero);
        row[r->i] += N[r->j] - r->q * M[r->j];
        row[r->j] += M[r->i] - r->q * N[r->i];
        for (auto& [k, c] : r->lin) row[k] -= c;
        rows.push_back(std::move(row));
    }
    return rows;
}

// fixed: generators whose action on the extension is pinned to the common
// scalar of M and N (Ext over the quotient by e_k - M(e_k)).
template <class S>
ExtResult<S> ext1(const QPresentation<S>& P, const Character<S>& M, const Character<S>& N,
                  const std::set<int>& fixed = {}) {
    if (!validate_module(P, M)) throw InvalidModule("first character is not a module");
    if (!validate_module(P, N)) throw InvalidModule("second character is not a module");
    int g = P.gens();
    const S zero = P.field().zero(), one = P.field().one();
    auto rows = cocycle_equations(P, M, N);
    for (int k : fixed) {
        if (k < 0 || k >= g) throw IndexOutOfRange("fixed generator index");
        if (M[k] != N[k]) throw InvalidModule("modules disagree on a fixed generator");
        std::vector<S> row(g, zero);
        row[k] = one;
        rows.push_back(std::move(row));
    }
    auto Z = linalg::nullspace(rows, g, zero, one);
    std::vector<S> cob(g, zero);
    bool cob_nonzero = false;
    for (int k = 0; k < g; ++k) {
        cob[k] = M[k] - N[k];
        if (!cob[k].is_zero()) cob_nonzero = true;
    }
    ExtResult<S> res;
    res.cocycle_dim = static_cast<int>(Z.size());
    res.coboundary_dim = cob_nonzero ? 1 : 0;
    res.dimension = res.cocycle_dim - res.coboundary_dim;
    // extend the coboundary line to a basis of the cocycles
    linalg::Matrix<S> span;
    if (cob_nonzero) span.push_back(cob);
    for (auto& z : Z) {
        auto trial = span;
        trial.push_back(z);
        if (linalg::rank(trial, g) > static_cast<int>(span.size())) {
            span.push_back(z);
            res.cocycle_basis.push_back(z);
        }
    }
    return res;
}

template <class S>
std::vector<std::vector<int>> tangent_matrix(const QPresentation<S>& P, const std::vector<Character<S>>& family) {
    size_t s = family.size();
    std::vector<std::vector<int>> T(s, std::vector<int>(s, 0));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) T[i][j] = ext1(P, family[i], family[j]).dimension;
    return T;
}

struct DeformationShape {
    int size = 0;
    std::vector<int> diagonal;                 // formal variables at each point
    std::vector<std::vector<int>> off_diagonal;  // generator counts t_ij, zero on the diagonal
    bool modulo_obstructions = true;
    std::vector<std::vector<std::string>> rendering;
};

inline DeformationShape deformation_shape(const std::vector<std::vector<int>>& T, const std::string& base = "k'") {
    DeformationShape d;
    d.size = static_cast<int>(T.size());
    d.off_diagonal.assign(d.size, std::vector<int>(d.size, 0));
    d.rendering.assign(d.size, std::vector<std::string>(d.size));
    for (int i = 0; i < d.size; ++i) {
        if (static_cast<int>(T[i].size()) != d.size) throw LengthMismatch("tangent matrix is not square");
        d.diagonal.push_back(T[i][i]);
    }
    auto vars = [&](int i, int j, int count) {
        std::string idx = d.size == 1 ? "" : std::to_string(i + 1) + std::to_string(j + 1);
        std::vector<std::string> out;
        if (count == 1) return std::vector<std::string>{"t_" + (idx.empty() ? std::string("1") : idx)};
        for (int c = 1; c <= count; ++c)
            out.push_back("t_" + (idx.empty() ? std::to_string(c) : idx + "," + std::to_string(c)));
        return out;
    };
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (auto& x : v) s += (s.empty() ? "" : ",") + x;
        return s;
    };
    for (int i = 0; i < d.size; ++i)
        for (int j = 0; j < d.size; ++j) {
            int c = T[i][j];
            if (i == j) {
                if (c == 0) d.rendering[i][j] = base;
                else if (c == 1) d.rendering[i][j] = base + "[[" + vars(i, j, 1)[0] + "]]";
                else d.rendering[i][j] = base + "<<" + join(vars(i, j, c)) + ">>";
            } else {
                d.off_diagonal[i][j] = c;
                d.rendering[i][j] = c == 0 ? "0" : "<" + join(vars(i, j, c)) + ">";
            }
        }
    return d;
}

// scales the e_2 slot by zeta^{2-p}
template <class S>
Character<S> mirror(const Character<S>& chi, const S& zeta, long p) {
    if (chi.size() != 3) throw LengthMismatch("mirror needs a three-generator character");
    Character<S> out = chi;
    out[2] = out[2] * zeta.pow(2 - p);
    return out;
}

// the inverse scaling, zeta^{p-2}
template <class S>
Character<S> mirror_dual(const Character<S>& chi, const S& zeta, long p) {
    if (chi.size() != 3) throw LengthMismatch("mirror needs a three-generator character");
    Character<S> out = chi;
    out[2] = out[2] * zeta.pow(p - 2);
    return out;
}

}  // namespace jackson
