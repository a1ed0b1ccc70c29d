#pragma once

// Presentations with one q-commutation rule per generator pair:
//   e_j e_i = q * e_i e_j + sum_k c_k e_k + c      (j > i)

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jackson/errors.hpp"

namespace jackson {

template <class S>
struct Rule {
    int j = 1, i = 0;
    S q;
    std::map<int, S> lin;  // nonzero tail coefficients on generators
    S c;                   // constant tail
    bool tail_zero() const { return lin.empty() && c.is_zero(); }
};

template <class S>
class QPresentation {
public:
    using scalar_type = S;
    using field_type = typename S::field_type;

    QPresentation() = default;
    QPresentation(field_type field, int g, std::string name = "custom")
        : field_(std::move(field)), g_(g), name_(std::move(name)) {
        if (g < 1) throw MalformedPresentation("need at least one generator");
        for (int k = 0; k < g; ++k) labels_.push_back("e" + std::to_string(k));
    }

    // Adds the rule e_j e_i = q e_i e_j + tail; relations given with j < i are
    // reoriented, so callers may pass either orientation.
    void set_rule(int j, int i, const S& q, std::map<int, S> lin, const S& c) {
        check_index(j);
        check_index(i);
        if (i == j) throw MalformedPresentation("rule on a single generator");
        if (q.is_zero()) throw MalformedPresentation("q-coefficient must be invertible");
        Rule<S> r;
        if (j > i) {
            r.j = j; r.i = i; r.q = q; r.c = c;
            for (auto& [k, v] : lin) {
                check_index(k);
                if (!v.is_zero()) r.lin.emplace(k, v);
            }
        } else {
            // e_j e_i = q e_i e_j + t  <=>  e_i e_j = q^{-1} e_j e_i - q^{-1} t
            S qi = q.inv();
            r.j = i; r.i = j; r.q = qi; r.c = -(qi * c);
            for (auto& [k, v] : lin) {
                check_index(k);
                S w = -(qi * v);
                if (!w.is_zero()) r.lin.emplace(k, w);
            }
        }
        rules_[{r.j, r.i}] = std::move(r);
    }

    void set_rule(int j, int i, const S& q) { set_rule(j, i, q, {}, field_.zero()); }

    const Rule<S>& rule(int j, int i) const {
        auto it = rules_.find({j, i});
        if (it == rules_.end())
            throw MalformedPresentation("no rule for pair (" + std::to_string(j) + "," + std::to_string(i) + ")");
        return it->second;
    }
    bool has_rule(int j, int i) const { return rules_.count({j, i}) > 0; }

    // every unordered pair must carry exactly one rule
    void validate() const {
        for (int j = 0; j < g_; ++j)
            for (int i = 0; i < j; ++i)
                if (!has_rule(j, i))
                    throw MalformedPresentation("missing rule for pair (" + std::to_string(j) + "," + std::to_string(i) + ")");
    }

    // rules in canonical order: j descending, then i ascending
    std::vector<const Rule<S>*> ordered_rules() const {
        std::vector<const Rule<S>*> out;
        for (int j = g_ - 1; j >= 0; --j)
            for (int i = 0; i < j; ++i) {
                auto it = rules_.find({j, i});
                if (it != rules_.end()) out.push_back(&it->second);
            }
        return out;
    }

    const field_type& field() const { return field_; }
    int gens() const { return g_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

    bool all_tails_zero() const {
        for (auto& [k, r] : rules_)
            if (!r.tail_zero()) return false;
        return true;
    }

private:
    void check_index(int k) const {
        if (k < 0 || k >= g_) throw IndexOutOfRange("generator index " + std::to_string(k));
    }

    field_type field_;
    int g_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, Rule<S>> rules_;
};

// Words are sequences of generator indices; PBW monomials are exponent vectors.
using Word = std::vector<int>;
using Exponents = std::vector<int>;

template <class S>
using WordPoly = std::map<Word, S>;

template <class S>
using NCPoly = std::map<Exponents, S>;

inline Word word_of(const Exponents& e) {
    Word w;
    for (int k = 0; k < static_cast<int>(e.size()); ++k)
        for (int t = 0; t < e[k]; ++t) w.push_back(k);
    return w;
}

template <class Map, class Key, class S>
void accumulate(Map& into, const Key& w, const S& c) {
    if (c.is_zero()) return;
    auto it = into.find(w);
    if (it == into.end()) {
        into.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

template <class S>
NCPoly<S> monomial(int g, const Exponents& e, const S& c) {
    NCPoly<S> p;
    if (static_cast<int>(e.size()) != g) throw IndexOutOfRange("exponent vector length");
    if (!c.is_zero()) p.emplace(e, c);
    return p;
}

template <class S>
NCPoly<S> generator_power(int g, int k, int power, const S& one) {
    Exponents e(g, 0);
    e.at(k) = power;
    return monomial(g, e, one);
}

template <class S>
std::string format_poly(const NCPoly<S>& p, const std::vector<std::string>& labels) {
    if (p.empty()) return "0";
    std::string out;
    // highest total degree first, then reverse lexicographic
    std::vector<std::pair<Exponents, S>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        int da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (auto& [e, c] : terms) {
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += labels[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coef = c.str();
        bool unit = coef == "1";
        std::string term = mono.empty() ? "(" + coef + ")" : (unit ? mono : "(" + coef + ")*" + mono);
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

}  // namespace jackson
