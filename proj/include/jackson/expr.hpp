#pragma once

// Parser for scalar and word expressions such as "z^2+1", "3*g-1",
// "(1-z)*e1*e0^2 + a*e2" over a given coefficient field.

#include <cctype>
#include <map>
#include <string>

#include "jackson/cyclotomic.hpp"
#include "jackson/finite_field.hpp"
#include "jackson/presentation.hpp"

namespace jackson {

// Splits "expr @ order n" into ("expr", n); n = 0 when no suffix is present.
inline std::pair<std::string, long> split_order_suffix(const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) return {s, 0};
    std::string tail = s.substr(at + 1);
    std::string expr = s.substr(0, at);
    size_t k = tail.find("order");
    if (k == std::string::npos) throw ParseError("expected 'order n' after '@' in '" + s + "'");
    std::string num = tail.substr(k + 5);
    size_t used = 0;
    long n = 0;
    try {
        n = std::stol(num, &used);
    } catch (const std::exception&) {
        throw ParseError("bad order in '" + s + "'");
    }
    if (num.find_first_not_of(" \t", used) != std::string::npos || n < 1) throw ParseError("bad order in '" + s + "'");
    return {expr, n};
}

template <class S>
class ExprParser {
public:
    using Field = typename S::field_type;

    ExprParser(Field F, int gens = 0, std::map<std::string, S> lets = {})
        : F_(std::move(F)), g_(gens), lets_(std::move(lets)) {}

    WordPoly<S> parse(const std::string& text) {
        src_ = text;
        pos_ = 0;
        WordPoly<S> r = sum();
        skip();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return r;
    }

    S parse_scalar(const std::string& text) {
        auto p = parse(text);
        if (p.empty()) return F_.zero();
        if (p.size() != 1 || !p.begin()->first.empty()) throw ParseError("'" + text + "' is not a scalar");
        return p.begin()->second;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
    }
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    WordPoly<S> constant(const S& c) const {
        WordPoly<S> p;
        accumulate(p, Word{}, c);
        return p;
    }
    static WordPoly<S> plus(WordPoly<S> a, const WordPoly<S>& b, bool negate) {
        for (auto& [w, c] : b) accumulate(a, w, negate ? -c : c);
        return a;
    }
    static WordPoly<S> times(const WordPoly<S>& a, const WordPoly<S>& b) {
        WordPoly<S> out;
        for (auto& [wa, ca] : a)
            for (auto& [wb, cb] : b) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                accumulate(out, w, ca * cb);
            }
        return out;
    }
    S as_scalar(const WordPoly<S>& p, const char* what) const {
        if (p.empty()) return F_.zero();
        if (p.size() != 1 || !p.begin()->first.empty()) fail(std::string(what) + " must be a scalar");
        return p.begin()->second;
    }

    WordPoly<S> sum() {
        bool neg = false;
        skip();
        if (eat('-')) neg = true;
        else eat('+');
        WordPoly<S> acc = product();
        if (neg) acc = plus({}, acc, true);
        for (;;) {
            if (eat('+')) acc = plus(acc, product(), false);
            else if (eat('-')) acc = plus(acc, product(), true);
            else return acc;
        }
    }

    WordPoly<S> product() {
        WordPoly<S> acc = power();
        for (;;) {
            if (eat('*')) {
                acc = times(acc, power());
            } else if (eat('/')) {
                S d = as_scalar(power(), "divisor");
                if (d.is_zero()) throw DivisionByZero("division by zero in '" + src_ + "'");
                S inv = d.inv();
                WordPoly<S> out;
                for (auto& [w, c] : acc) accumulate(out, w, c * inv);
                acc = std::move(out);
            } else {
                return acc;
            }
        }
    }

    WordPoly<S> power() {
        WordPoly<S> base = atom();
        if (!eat('^')) return base;
        skip();
        bool paren = eat('(');
        bool neg = eat('-');
        long e = integer_literal();
        if (neg) e = -e;
        if (paren && !eat(')')) fail("expected ')'");
        if (e < 0) {
            S b = as_scalar(base, "base of a negative power");
            return constant(b.pow(e));
        }
        WordPoly<S> acc = constant(F_.one());
        for (long k = 0; k < e; ++k) acc = times(acc, base);
        return acc;
    }

    long integer_literal() {
        skip();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(src_.substr(start, pos_ - start));
    }

    WordPoly<S> atom() {
        skip();
        if (eat('(')) {
            WordPoly<S> r = sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos_ >= src_.size()) fail("unexpected end");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            Integer v(src_.substr(start, pos_ - start));
            return constant(from_integer(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            std::string id = src_.substr(start, pos_ - start);
            if (auto it = lets_.find(id); it != lets_.end()) return constant(it->second);
            if (id == "z") return constant(zeta());
            if (id == "g") return constant(gen());
            if (id.size() > 1 && id[0] == 'e' && id.find_first_not_of("0123456789", 1) == std::string::npos) {
                int k = std::stoi(id.substr(1));
                if (k >= g_) throw IndexOutOfRange("generator " + id + " out of range");
                WordPoly<S> p;
                p.emplace(Word{k}, F_.one());
                return p;
            }
            fail("unknown symbol '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    S from_integer(const Integer& v) const {
        if constexpr (std::is_same_v<S, Cyclotomic>) {
            return F_.from_rational(Rational(v));
        } else {
            Integer p = F_.characteristic();
            Integer r = v % p;
            return F_.from_int(static_cast<long>(r));
        }
    }
    S zeta() const {
        if constexpr (std::is_same_v<S, Cyclotomic>) return F_.zeta();
        else fail("'z' needs a cyclotomic field");
    }
    S gen() const {
        if constexpr (std::is_same_v<S, GFElement>) return F_.generator();
        else fail("'g' needs a finite field");
    }

    Field F_;
    int g_;
    std::map<std::string, S> lets_;
    std::string src_;
    size_t pos_ = 0;
};

template <class S>
S parse_scalar(const std::string& text, const typename S::field_type& F, const std::map<std::string, S>& lets = {}) {
    return ExprParser<S>(F, 0, lets).parse_scalar(text);
}

}  // namespace jackson
