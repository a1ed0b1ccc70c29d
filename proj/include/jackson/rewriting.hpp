#pragma once

// Normal forms by word rewriting, overlap checks, centrality.

#include <cstddef>
#include <map>
#include <vector>

#include "jackson/presentation.hpp"

namespace jackson {

enum class Strategy { Leftmost, Rightmost };

inline constexpr std::size_t kDefaultFuel = 1'000'000;

// longest words first, so that merging happens before further rewriting
struct LongestFirst {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

template <class S>
using Pending = std::map<Word, S, LongestFirst>;

// Rewrites the descent at (pos, pos+1) of w, adding coef * result into out.
template <class S, class Map>
void rewrite_at(const QPresentation<S>& P, const Word& w, std::size_t pos, const S& coef, Map& out) {
    const Rule<S>& r = P.rule(w[pos], w[pos + 1]);
    Word head(w.begin(), w.begin() + pos);
    Word tail(w.begin() + pos + 2, w.end());
    Word swapped = head;
    swapped.push_back(r.i);
    swapped.push_back(r.j);
    swapped.insert(swapped.end(), tail.begin(), tail.end());
    accumulate(out, swapped, coef * r.q);
    for (auto& [k, c] : r.lin) {
        Word v = head;
        v.push_back(k);
        v.insert(v.end(), tail.begin(), tail.end());
        accumulate(out, v, coef * c);
    }
    if (!r.c.is_zero()) {
        Word v = head;
        v.insert(v.end(), tail.begin(), tail.end());
        accumulate(out, v, coef * r.c);
    }
}

inline long find_descent(const Word& w, Strategy st) {
    long n = static_cast<long>(w.size());
    if (st == Strategy::Leftmost) {
        for (long k = 0; k + 1 < n; ++k)
            if (w[k] > w[k + 1]) return k;
    } else {
        for (long k = n - 2; k >= 0; --k)
            if (w[k] > w[k + 1]) return k;
    }
    return -1;
}

template <class S>
NCPoly<S> normal_form(const QPresentation<S>& P, const WordPoly<S>& input,
                      Strategy st = Strategy::Leftmost, std::size_t fuel = kDefaultFuel) {
    Pending<S> pending;
    for (auto& [w, c] : input) {
        for (int k : w)
            if (k < 0 || k >= P.gens()) throw IndexOutOfRange("word index " + std::to_string(k));
        accumulate(pending, w, c);
    }
    NCPoly<S> result;
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        S c = it->second;
        pending.erase(it);
        long pos = find_descent(w, st);
        if (pos < 0) {
            Exponents e(P.gens(), 0);
            for (int k : w) ++e[k];
            accumulate(result, e, c);
            continue;
        }
        if (++steps > fuel) throw NonTerminating("rewrite fuel exhausted; presentation is malformed");
        rewrite_at(P, w, static_cast<std::size_t>(pos), c, pending);
    }
    return result;
}

template <class S>
NCPoly<S> normal_form_word(const QPresentation<S>& P, const Word& w) {
    WordPoly<S> in;
    in.emplace(w, P.field().one());
    return normal_form(P, in);
}

template <class S>
WordPoly<S> to_words(const NCPoly<S>& p) {
    WordPoly<S> out;
    for (auto& [e, c] : p) accumulate(out, word_of(e), c);
    return out;
}

template <class S>
NCPoly<S> add(NCPoly<S> a, const NCPoly<S>& b, const S& scale) {
    for (auto& [e, c] : b) accumulate(a, e, c * scale);
    return a;
}

// product of two normal-form polynomials, normalized
template <class S>
NCPoly<S> multiply(const QPresentation<S>& P, const NCPoly<S>& a, const NCPoly<S>& b) {
    WordPoly<S> prod;
    for (auto& [ea, ca] : a) {
        Word wa = word_of(ea);
        for (auto& [eb, cb] : b) {
            Word w = wa;
            Word wb = word_of(eb);
            w.insert(w.end(), wb.begin(), wb.end());
            accumulate(prod, w, ca * cb);
        }
    }
    return normal_form(P, prod);
}

template <class S>
struct OverlapWitness {
    int k, j, i;
    NCPoly<S> difference;  // left-first minus right-first, in normal form
};

template <class S>
std::vector<OverlapWitness<S>> check_confluence(const QPresentation<S>& P) {
    P.validate();
    std::vector<OverlapWitness<S>> out;
    const S one = P.field().one();
    for (int k = 0; k < P.gens(); ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                Word w{k, j, i};
                Pending<S> left, right;
                rewrite_at(P, w, 0, one, left);
                rewrite_at(P, w, 1, one, right);
                WordPoly<S> lw(left.begin(), left.end()), rw(right.begin(), right.end());
                NCPoly<S> a = normal_form(P, lw);
                NCPoly<S> b = normal_form(P, rw);
                NCPoly<S> diff = add(a, b, -one);
                if (!diff.empty()) out.push_back({k, j, i, std::move(diff)});
            }
    return out;
}

template <class S>
bool is_central(const QPresentation<S>& P, const NCPoly<S>& poly) {
    const S one = P.field().one();
    for (int g = 0; g < P.gens(); ++g) {
        NCPoly<S> e = generator_power(P.gens(), g, 1, one);
        NCPoly<S> d = add(multiply(P, poly, e), multiply(P, e, poly), -one);
        if (!d.empty()) return false;
    }
    return true;
}

// Presentation of the same algebra in the generators f_g = e_g - s_g.
// Substituting e_g = f_g + s_g in e_j e_i - q e_i e_j - sum c_k e_k - c gives
//   f_j f_i = q f_i f_j + sum c_k f_k - (1-q)(s_i f_j + s_j f_i)
//             + c + sum c_k s_k - (1-q) s_i s_j.
template <class S>
QPresentation<S> shift_generators(const QPresentation<S>& P, const std::vector<S>& s) {
    if (static_cast<int>(s.size()) != P.gens()) throw LengthMismatch("shift vector length");
    QPresentation<S> out(P.field(), P.gens(), P.name() + "/shifted");
    out.set_labels(P.labels());
    const S one = P.field().one();
    for (const Rule<S>* r : P.ordered_rules()) {
        S omq = one - r->q;
        std::map<int, S> lin = r->lin;
        auto bump = [&](int k, const S& v) {
            auto it = lin.find(k);
            if (it == lin.end()) lin.emplace(k, v);
            else it->second += v;
        };
        bump(r->j, -(omq * s[r->i]));
        bump(r->i, -(omq * s[r->j]));
        S c = r->c - omq * s[r->i] * s[r->j];
        for (auto& [k, v] : r->lin) c += v * s[k];
        std::map<int, S> clean;
        for (auto& [k, v] : lin)
            if (!v.is_zero()) clean.emplace(k, v);
        out.set_rule(r->j, r->i, r->q, clean, c);
    }
    return out;
}

}  // namespace jackson
