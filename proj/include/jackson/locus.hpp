#pragma once

// One-dimensional modules (characters) and their locus.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jackson/finite_field.hpp"
#include "jackson/rewriting.hpp"

namespace jackson {

template <class S>
using Character = std::vector<S>;

template <class S>
S relation_value(const Rule<S>& r, const Character<S>& chi) {
    S one = chi[0].field().one();
    S v = (one - r.q) * chi[r.i] * chi[r.j] - r.c;
    for (auto& [k, c] : r.lin) v -= c * chi[k];
    return v;
}

template <class S>
bool validate_module(const QPresentation<S>& P, const Character<S>& chi) {
    if (static_cast<int>(chi.size()) != P.gens()) throw LengthMismatch("character length differs from generator count");
    for (const Rule<S>* r : P.ordered_rules())
        if (!relation_value(*r, chi).is_zero()) return false;
    return true;
}

// A component is the set {chi : chi_k = fixed[k]} optionally cut by chi_i chi_j = c.
template <class S>
struct LocusComponent {
    std::map<int, S> fixed;
    bool conic = false;
    int ci = 1, cj = 2;
    S cval;

    std::string kind(int g) const {
        if (conic) return "conic";
        int free = g - static_cast<int>(fixed.size());
        if (free == 0) return "point";
        if (free == g) return "space";
        if (free == 1) return "line";
        if (free == 2) return "plane";
        return "subspace";
    }

    bool contains(const Character<S>& pt) const {
        for (auto& [k, v] : fixed)
            if (pt[k] != v) return false;
        if (conic && pt[ci] * pt[cj] != cval) return false;
        return true;
    }
};

template <class S>
bool component_subset(const LocusComponent<S>& a, const LocusComponent<S>& b, int g) {
    if (b.conic) {
        if (a.conic) return a.fixed == b.fixed && a.ci == b.ci && a.cj == b.cj && a.cval == b.cval;
        if (static_cast<int>(a.fixed.size()) != g) return false;
        Character<S> pt;
        for (auto& [k, v] : a.fixed) pt.push_back(v);
        return b.contains(pt);
    }
    for (auto& [k, v] : b.fixed) {
        auto it = a.fixed.find(k);
        if (it == a.fixed.end() || it->second != v) return false;
    }
    return true;
}

template <class S>
struct LocusDescription {
    std::vector<LocusComponent<S>> components;
    std::string shape;  // which solver produced it
    int gens = 3;

    bool contains(const Character<S>& pt) const {
        for (auto& c : components)
            if (c.contains(pt)) return true;
        return false;
    }
};

namespace detail {

template <class S>
void simplify(LocusDescription<S>& L) {
    std::vector<LocusComponent<S>> keep;
    auto& cs = L.components;
    for (size_t a = 0; a < cs.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < cs.size() && !redundant; ++b) {
            if (a == b) continue;
            bool ab = component_subset(cs[a], cs[b], L.gens);
            bool ba = component_subset(cs[b], cs[a], L.gens);
            if (ab && (!ba || b < a)) redundant = true;
        }
        if (!redundant) keep.push_back(cs[a]);
    }
    // deterministic order: larger components first, then by constraint keys
    std::stable_sort(keep.begin(), keep.end(), [&](const LocusComponent<S>& x, const LocusComponent<S>& y) {
        auto rank = [&](const LocusComponent<S>& c) { return static_cast<int>(c.fixed.size()) * 2 + (c.conic ? 1 : 0); };
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        std::vector<int> kx, ky;
        for (auto& [k, v] : x.fixed) kx.push_back(k);
        for (auto& [k, v] : y.fixed) ky.push_back(k);
        return kx < ky;
    });
    cs = std::move(keep);
}

// pure q-commutation: chi_i chi_j = 0 for each pair with q != 1;
// components are the minimal vertex covers of that graph
template <class S>
LocusDescription<S> tails_zero_locus(const QPresentation<S>& P) {
    int g = P.gens();
    if (g > 16) throw UnrecognizedFamily("too many generators for the locus solver");
    std::vector<std::pair<int, int>> edges;
    for (const Rule<S>* r : P.ordered_rules())
        if (!r->q.is_one()) edges.emplace_back(r->j, r->i);
    std::vector<std::uint32_t> covers;
    for (std::uint32_t m = 0; m < (1u << g); ++m) {
        bool ok = true;
        for (auto [a, b] : edges)
            if (!((m >> a) & 1) && !((m >> b) & 1)) { ok = false; break; }
        if (ok) covers.push_back(m);
    }
    LocusDescription<S> L;
    L.gens = g;
    L.shape = "quantum_affine";
    const S zero = P.field().zero();
    for (std::uint32_t m : covers) {
        bool minimal = true;
        for (std::uint32_t o : covers)
            if (o != m && (o & m) == o) { minimal = false; break; }
        if (!minimal) continue;
        LocusComponent<S> c;
        for (int k = 0; k < g; ++k)
            if ((m >> k) & 1) c.fixed.emplace(k, zero);
        L.components.push_back(c);
    }
    simplify(L);
    return L;
}

// shift s with shift_generators(P, s) tail-free, if one exists
template <class S>
std::optional<std::vector<S>> untwisting_shift(const QPresentation<S>& P) {
    const S zero = P.field().zero(), one = P.field().one();
    std::vector<std::optional<S>> s(P.gens());
    auto assign = [&](int k, const S& v) {
        if (s[k] && *s[k] != v) return false;
        s[k] = v;
        return true;
    };
    for (const Rule<S>* r : P.ordered_rules()) {
        if (r->tail_zero()) continue;
        S omq = one - r->q;
        if (omq.is_zero()) return std::nullopt;
        for (auto& [k, c] : r->lin) {
            if (k == r->j) {
                if (!assign(r->i, c / omq)) return std::nullopt;
            } else if (k == r->i) {
                if (!assign(r->j, c / omq)) return std::nullopt;
            } else {
                return std::nullopt;
            }
        }
    }
    std::vector<S> out;
    bool nonzero = false;
    for (auto& v : s) {
        out.push_back(v ? *v : zero);
        if (v && !v->is_zero()) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    if (!shift_generators(P, out).all_tails_zero()) return std::nullopt;
    return out;
}

// Jackson shape: rules (1,0), (2,0) tail-free; (2,1) with tail alpha e_0 + beta.
//   A chi0 chi1 = 0,  B chi0 chi2 = 0,  C chi1 chi2 = alpha chi0 + beta
template <class S>
LocusDescription<S> jackson_shape_locus(const QPresentation<S>& P) {
    const auto& r10 = P.rule(1, 0);
    const auto& r20 = P.rule(2, 0);
    const auto& r21 = P.rule(2, 1);
    if (!r10.tail_zero() || !r20.tail_zero()) throw UnrecognizedFamily("tails outside the Jackson shape");
    for (auto& [k, c] : r21.lin)
        if (k != 0) throw UnrecognizedFamily("tails outside the Jackson shape");
    const S zero = P.field().zero(), one = P.field().one();
    S A = one - r10.q, B = one - r20.q, C = one - r21.q;
    S alpha = r21.lin.count(0) ? r21.lin.at(0) : zero;
    S beta = r21.c;

    LocusDescription<S> L;
    L.gens = 3;
    L.shape = "jackson";
    auto comp = [&](std::map<int, S> fixed) {
        LocusComponent<S> c;
        c.fixed = std::move(fixed);
        return c;
    };
    // stratum chi0 = 0
    if (!C.is_zero()) {
        if (!beta.is_zero()) {
            LocusComponent<S> c = comp({{0, zero}});
            c.conic = true;
            c.ci = 1;
            c.cj = 2;
            c.cval = beta / C;
            L.components.push_back(c);
        } else {
            L.components.push_back(comp({{0, zero}, {2, zero}}));
            L.components.push_back(comp({{0, zero}, {1, zero}}));
        }
    } else if (beta.is_zero()) {
        L.components.push_back(comp({{0, zero}}));
    }
    // stratum chi0 != 0
    bool a0 = A.is_zero(), b0 = B.is_zero();
    if (!a0 && !b0) {
        if (!alpha.is_zero()) {
            S x0 = -(beta / alpha);
            if (!x0.is_zero()) L.components.push_back(comp({{0, x0}, {1, zero}, {2, zero}}));
        } else if (beta.is_zero()) {
            L.components.push_back(comp({{1, zero}, {2, zero}}));
        }
    } else if (a0 != b0) {
        int killed = a0 ? 2 : 1;  // the coordinate forced to vanish
        if (!alpha.is_zero()) {
            S x0 = -(beta / alpha);
            if (!x0.is_zero()) L.components.push_back(comp({{0, x0}, {killed, zero}}));
        } else if (beta.is_zero()) {
            L.components.push_back(comp({{killed, zero}}));
        }
    } else {
        if (!C.is_zero() && !alpha.is_zero())
            throw UnrecognizedFamily("quadric-surface locus is outside the classified shapes");
        if (!C.is_zero()) {
            // alpha = 0: C chi1 chi2 = beta on chi0 != 0
            if (!beta.is_zero()) {
                throw UnrecognizedFamily("cylinder over a conic is outside the classified shapes");
            }
            L.components.push_back(comp({{1, zero}}));
            L.components.push_back(comp({{2, zero}}));
        } else if (!alpha.is_zero()) {
            S x0 = -(beta / alpha);
            if (!x0.is_zero()) L.components.push_back(comp({{0, x0}}));
        } else if (beta.is_zero()) {
            L.components.push_back(comp({}));
        }
    }
    simplify(L);
    return L;
}

}  // namespace detail

template <class S>
LocusDescription<S> one_dim_locus(const QPresentation<S>& P) {
    P.validate();
    if (P.all_tails_zero()) return detail::tails_zero_locus(P);
    if (auto s = detail::untwisting_shift(P)) {
        auto L = detail::tails_zero_locus(shift_generators(P, *s));
        // characters of P are those of the shifted algebra plus s; free
        // coordinates stay free
        for (auto& c : L.components) {
            std::map<int, S> moved;
            for (auto& [k, v] : c.fixed) moved.emplace(k, v + (*s)[k]);
            c.fixed = std::move(moved);
        }
        L.shape = "shifted_quantum_affine";
        return L;
    }
    if (P.gens() == 3) return detail::jackson_shape_locus(P);
    throw UnrecognizedFamily("presentation is outside the classified shapes");
}

inline constexpr std::uint64_t kEnumerateBound = 1u << 24;
inline constexpr std::uint64_t kEnumerateFieldBound = 1024;

inline std::uint64_t checked_tuple_count(std::uint64_t q, int g, std::uint64_t bound) {
    if (q > kEnumerateFieldBound) throw FieldTooLarge("field of size " + std::to_string(q) + " is above the enumeration bound");
    std::uint64_t total = 1;
    for (int k = 0; k < g; ++k) {
        total *= q;
        if (total > bound) throw FieldTooLarge("q^g exceeds the enumeration bound");
    }
    return total;
}

// Brute force over all q^g tuples.
inline std::vector<Character<GFElement>> enumerate_points(const QPresentation<GFElement>& P,
                                                          std::uint64_t bound = kEnumerateBound) {
    const FiniteField& F = P.field();
    std::uint64_t q = F.size();
    int g = P.gens();
    std::uint64_t total = checked_tuple_count(q, g, bound);
    std::vector<Character<GFElement>> out;
    Character<GFElement> chi(g, F.zero());
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t x = t;
        for (int k = g - 1; k >= 0; --k) {
            chi[k] = F.element(static_cast<std::uint32_t>(x % q));
            x /= q;
        }
        if (validate_module(P, chi)) out.push_back(chi);
    }
    return out;
}

// All F-points of a component.
inline std::vector<Character<GFElement>> component_points(const LocusComponent<GFElement>& c, const FiniteField& F,
                                                          int g, std::uint64_t bound = kEnumerateBound) {
    std::vector<int> free;
    for (int k = 0; k < g; ++k)
        if (!c.fixed.count(k) && !(c.conic && (k == c.ci || k == c.cj))) free.push_back(k);
    std::uint64_t q = F.size();
    std::uint64_t total = checked_tuple_count(q, static_cast<int>(free.size()) + (c.conic ? 1 : 0), bound);
    std::vector<Character<GFElement>> out;
    Character<GFElement> chi(g, F.zero());
    for (auto& [k, v] : c.fixed) chi[k] = v;
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t x = t;
        for (int k : free) {
            chi[k] = F.element(static_cast<std::uint32_t>(x % q));
            x /= q;
        }
        if (c.conic) {
            GFElement a = F.element(static_cast<std::uint32_t>(x % q));
            if (a.is_zero()) {
                if (!c.cval.is_zero()) continue;
                // chi_i = 0 forces nothing on chi_j when c = 0: emit the whole axis
                for (std::uint32_t b = 0; b < q; ++b) {
                    chi[c.ci] = a;
                    chi[c.cj] = F.element(b);
                    out.push_back(chi);
                }
                continue;
            }
            chi[c.ci] = a;
            chi[c.cj] = c.cval / a;
        }
        out.push_back(chi);
    }
    return out;
}

}  // namespace jackson
