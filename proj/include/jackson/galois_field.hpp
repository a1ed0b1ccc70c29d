#pragma once

// Finite fields F_{p^m}. Elements are encoded as integers sum c_i p^i in the
// power basis of a fixed primitive modulus; multiplication uses log tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "jackson/errors.hpp"

namespace jackson {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class GaloisField {
public:
    static constexpr std::uint64_t kMaxSize = 1u << 24;

    // Shared, cached instance so that elements of the same field compare equal.
    static std::shared_ptr<const GaloisField> get(long p, int m) {
        static std::mutex mu;
        static std::map<std::pair<long, int>, std::shared_ptr<const GaloisField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto f = std::shared_ptr<const GaloisField>(new GaloisField(p, m));
        cache[key] = f;
        return f;
    }

    long p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t size() const { return q_; }
    // monic modulus, lowest coefficient first, length m+1
    const std::vector<long>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>((a + b) % p_);
        std::uint32_t r = 0, scale = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t d = static_cast<std::uint32_t>((a % p_ + b % p_) % p_);
            r += d * scale;
            scale *= static_cast<std::uint32_t>(p_);
            a /= p_;
            b /= p_;
        }
        return r;
    }
    std::uint32_t neg(std::uint32_t a) const {
        std::uint32_t r = 0, scale = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t d = static_cast<std::uint32_t>((p_ - a % p_) % p_);
            r += d * scale;
            scale *= static_cast<std::uint32_t>(p_);
            a /= p_;
        }
        return r;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        return exp_[s % (q_ - 1)];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    std::uint32_t pow(std::uint32_t a, long e) const {
        if (a == 0) {
            if (e < 0) throw DivisionByZero("negative power of zero");
            return e == 0 ? 1 : 0;
        }
        long n = static_cast<long>(q_ - 1);
        long k = (static_cast<long>(log_[a]) * (e % n)) % n;
        if (k < 0) k += n;
        return exp_[k];
    }
    std::uint32_t from_int(long v) const {
        long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    // the class of t, a generator of the multiplicative group
    std::uint32_t generator() const { return exp_[q_ > 2 ? 1 : 0]; }
    long log(std::uint32_t a) const { return a == 0 ? -1 : log_[a]; }
    // multiplicative order of a nonzero element
    long order(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("order of zero");
        long n = static_cast<long>(q_ - 1);
        long g = gcd(log_[a], n);
        return n / g;
    }

    std::string describe() const {
        return "F_" + std::to_string(p_) + (m_ > 1 ? "^" + std::to_string(m_) : "");
    }

    // "c" for prime fields, polynomial in the generator g otherwise
    std::string format(std::uint32_t a) const {
        if (m_ == 1) return std::to_string(a);
        std::string out;
        std::vector<long> d(m_);
        for (int i = 0; i < m_; ++i) { d[i] = a % p_; a /= p_; }
        for (int i = m_ - 1; i >= 0; --i) {
            if (d[i] == 0) continue;
            std::string term;
            if (i == 0)
                term = std::to_string(d[i]);
            else
                term = (d[i] == 1 ? "" : std::to_string(d[i]) + "*") + (i == 1 ? "g" : "g^" + std::to_string(i));
            out += (out.empty() ? "" : "+") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    static long gcd(long a, long b) {
        while (b) { long t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    GaloisField(long p, int m) : p_(p), m_(m) {
        if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
        if (m < 1) throw FieldTooLarge("extension degree must be positive");
        std::uint64_t q = 1;
        for (int i = 0; i < m; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > kMaxSize) throw FieldTooLarge("F_" + std::to_string(p) + "^" + std::to_string(m) + " exceeds the table bound");
        }
        q_ = q;
        find_modulus();
    }

    // Tries monic moduli t^m + c_{m-1}t^{m-1} + ... + c_0 in increasing order of
    // the encoding of (c_0..c_{m-1}); keeps the first one for which t is primitive.
    void find_modulus() {
        std::vector<long> c(m_);
        for (std::uint64_t code = 1; code < q_; ++code) {
            std::uint64_t t = code;
            for (int i = 0; i < m_; ++i) { c[i] = static_cast<long>(t % p_); t /= p_; }
            if (c[0] == 0) continue;
            if (try_modulus(c)) {
                modulus_.assign(c.begin(), c.end());
                modulus_.push_back(1);
                return;
            }
        }
        if (q_ == 2) {  // F_2: modulus t + 1, generator 1
            modulus_ = {1, 1};
            exp_ = {1};
            log_ = {0, 0};
            return;
        }
        throw BadPrime("no primitive modulus found for " + describe());
    }

    bool try_modulus(const std::vector<long>& c) {
        std::uint64_t n = q_ - 1;
        std::vector<std::uint32_t> ex(n);
        std::vector<long> lg(q_, -1);
        std::vector<long> cur(m_, 0);
        cur[0] = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            std::uint32_t code = 0, scale = 1;
            for (int i = 0; i < m_; ++i) {
                code += static_cast<std::uint32_t>(cur[i]) * scale;
                scale *= static_cast<std::uint32_t>(p_);
            }
            if (lg[code] != -1) return false;
            lg[code] = static_cast<long>(k);
            ex[k] = code;
            // multiply by t modulo the candidate
            long top = cur[m_ - 1];
            for (int i = m_ - 1; i > 0; --i) cur[i] = ((cur[i - 1] - top * c[i]) % p_ + p_) % p_;
            cur[0] = ((-top * c[0]) % p_ + p_) % p_;
        }
        // n distinct powers of t force irreducibility and primitivity
        exp_ = std::move(ex);
        log_ = std::move(lg);
        return true;
    }

    long p_;
    int m_;
    std::uint64_t q_ = 0;
    std::vector<long> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<long> log_;
};

}  // namespace jackson
