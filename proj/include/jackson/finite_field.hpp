#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jackson/galois_field.hpp"

namespace jackson {

class GFElement;

// Value-type handle on a cached GaloisField.
class FiniteField {
public:
    FiniteField() = default;
    FiniteField(long p, int m) : f_(GaloisField::get(p, m)) {}
    explicit FiniteField(std::shared_ptr<const GaloisField> f) : f_(std::move(f)) {}

    const GaloisField& impl() const { return *f_; }
    const std::shared_ptr<const GaloisField>& ptr() const { return f_; }
    long characteristic() const { return f_->p(); }
    int degree() const { return f_->m(); }
    std::uint64_t size() const { return f_->size(); }
    std::string describe() const { return f_->describe(); }
    bool operator==(const FiniteField& o) const { return f_ == o.f_; }
    bool operator!=(const FiniteField& o) const { return f_ != o.f_; }

    GFElement zero() const;
    GFElement one() const;
    GFElement from_int(long v) const;
    GFElement generator() const;
    // element with encoding idx, 0 <= idx < size()
    GFElement element(std::uint32_t idx) const;
    std::vector<GFElement> elements() const;

private:
    std::shared_ptr<const GaloisField> f_;
};

class GFElement {
public:
    using field_type = FiniteField;

    GFElement() = default;
    GFElement(FiniteField f, std::uint32_t v) : f_(std::move(f)), v_(v) {}

    FiniteField field() const { return f_; }
    std::uint32_t code() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend GFElement operator+(const GFElement& a, const GFElement& b) {
        check(a, b);
        return {a.f_, a.f_.impl().add(a.v_, b.v_)};
    }
    friend GFElement operator-(const GFElement& a) { return {a.f_, a.f_.impl().neg(a.v_)}; }
    friend GFElement operator-(const GFElement& a, const GFElement& b) { return a + (-b); }
    friend GFElement operator*(const GFElement& a, const GFElement& b) {
        check(a, b);
        return {a.f_, a.f_.impl().mul(a.v_, b.v_)};
    }
    GFElement inv() const { return {f_, f_.impl().inv(v_)}; }
    friend GFElement operator/(const GFElement& a, const GFElement& b) { return a * b.inv(); }
    GFElement& operator+=(const GFElement& b) { return *this = *this + b; }
    GFElement& operator-=(const GFElement& b) { return *this = *this - b; }
    GFElement& operator*=(const GFElement& b) { return *this = *this * b; }
    GFElement pow(long e) const { return {f_, f_.impl().pow(v_, e)}; }
    long order() const { return f_.impl().order(v_); }

    friend bool operator==(const GFElement& a, const GFElement& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GFElement& a, const GFElement& b) { return !(a == b); }
    // the fixed total order on field elements: by encoding
    friend bool operator<(const GFElement& a, const GFElement& b) {
        check(a, b);
        return a.v_ < b.v_;
    }

    std::string str() const { return f_.impl().format(v_); }

private:
    static void check(const GFElement& a, const GFElement& b) {
        if (a.f_ != b.f_) {
            std::string fa = a.f_.ptr() ? a.f_.describe() : "<none>";
            std::string fb = b.f_.ptr() ? b.f_.describe() : "<none>";
            throw MismatchedOrder("finite field mismatch: " + fa + " vs " + fb);
        }
    }

    FiniteField f_;
    std::uint32_t v_ = 0;
};

inline GFElement FiniteField::zero() const { return {*this, 0}; }
inline GFElement FiniteField::one() const { return {*this, 1}; }
inline GFElement FiniteField::from_int(long v) const { return {*this, f_->from_int(v)}; }
inline GFElement FiniteField::generator() const { return {*this, f_->generator()}; }
inline GFElement FiniteField::element(std::uint32_t idx) const { return {*this, idx}; }
inline std::vector<GFElement> FiniteField::elements() const {
    std::vector<GFElement> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.emplace_back(*this, i);
    return out;
}

}  // namespace jackson
