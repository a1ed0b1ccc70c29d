#pragma once

// Exact elements of Q(zeta_n) in the power basis modulo Phi_n.

#include <string>
#include <vector>

#include "jackson/qpoly.hpp"

namespace jackson {

class Cyclotomic;

class CyclotomicField {
public:
    explicit CyclotomicField(long n = 1) : n_(n) {
        if (n < 1) throw MismatchedOrder("root-of-unity order must be positive");
    }
    long order() const { return n_; }
    long degree() const { return qpoly::euler_phi(n_); }
    long characteristic() const { return 0; }
    std::string describe() const { return "Q(zeta_" + std::to_string(n_) + ")"; }
    bool operator==(const CyclotomicField& o) const { return n_ == o.n_; }
    bool operator!=(const CyclotomicField& o) const { return n_ != o.n_; }

    Cyclotomic zero() const;
    Cyclotomic one() const;
    Cyclotomic from_int(long v) const;
    Cyclotomic from_rational(const Rational& v) const;
    Cyclotomic zeta(long k = 1) const;

private:
    long n_;
};

class Cyclotomic {
public:
    using field_type = CyclotomicField;

    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(long n) : n_(n), c_(qpoly::euler_phi(n), Rational(0)) {}

    // coefficients of an arbitrary polynomial in zeta, reduced mod Phi_n
    static Cyclotomic from_poly(long n, const qpoly::Poly& p) {
        Cyclotomic r(n);
        qpoly::Poly red = qpoly::mod(p, qpoly::cyclotomic_polynomial(n));
        for (size_t i = 0; i < red.size(); ++i) r.c_[i] = red[i];
        return r;
    }

    long order() const { return n_; }
    CyclotomicField field() const { return CyclotomicField(n_); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    // rational value if the element lies in Q
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        Cyclotomic r(a.n_);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        Cyclotomic r(a.n_);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic r(a.n_);
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        return from_poly(a.n_, qpoly::mul(a.poly(), b.poly()));
    }
    Cyclotomic inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
        return from_poly(n_, qpoly::inverse_mod(poly(), qpoly::cyclotomic_polynomial(n_)));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    Cyclotomic pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyclotomic base = *this, acc = field().one();
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // canonical order, used only for sorting output
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        return a.c_ < b.c_;
    }

    std::string str() const {
        std::string out;
        for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            std::string coef = (c < 0 ? Rational(-c) : c).str();
            std::string term;
            if (i == 0) {
                term = coef;
            } else {
                term = (c == 1 || c == -1) ? "" : coef + "*";
                term += i == 1 ? "z" : "z^" + std::to_string(i);
            }
            if (out.empty())
                out = (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? "-" : "+") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    qpoly::Poly poly() const {
        qpoly::Poly p = c_;
        qpoly::trim(p);
        return p;
    }
    static void check(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ != b.n_)
            throw MismatchedOrder("cyclotomic orders " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
    }

    long n_;
    std::vector<Rational> c_;
};

inline Cyclotomic CyclotomicField::zero() const { return Cyclotomic(n_); }
inline Cyclotomic CyclotomicField::one() const { return from_int(1); }
inline Cyclotomic CyclotomicField::from_int(long v) const { return from_rational(Rational(v)); }
inline Cyclotomic CyclotomicField::from_rational(const Rational& v) const {
    return Cyclotomic::from_poly(n_, qpoly::Poly{v});
}
inline Cyclotomic CyclotomicField::zeta(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    qpoly::Poly p(k + 1, Rational(0));
    p[k] = 1;
    return Cyclotomic::from_poly(n_, p);
}

}  // namespace jackson
