#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace gatree {

// Polynomials in one variable q with exact integer coefficients. Used for
// the stratumwise virtual invariants; the Euler characteristic is the value
// at q = 1. Coefficient arithmetic is checked against overflow.
class EPolynomial {
  public:
    EPolynomial() = default;  // zero

    static EPolynomial zero() { return EPolynomial(); }
    static EPolynomial one() { return monomial(1, 0); }
    static EPolynomial q() { return monomial(1, 1); }
    static EPolynomial monomial(long long c, long long k) {
        EPolynomial p;
        if (c != 0) p.c_[k] = c;
        return p;
    }
    // The linear factor q - j.
    static EPolynomial q_minus(long long j) {
        EPolynomial p = q();
        if (j != 0) p.c_[0] = -j;
        return p;
    }

    friend EPolynomial operator+(const EPolynomial& a, const EPolynomial& b) {
        EPolynomial r = a;
        for (const auto& [k, v] : b.c_) {
            long long s;
            if (__builtin_add_overflow(r.c_[k], v, &s))
                throw std::overflow_error("EPolynomial coefficient overflow");
            if (s == 0)
                r.c_.erase(k);
            else
                r.c_[k] = s;
        }
        return r;
    }

    friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
        EPolynomial r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                long long p, s;
                if (__builtin_mul_overflow(va, vb, &p))
                    throw std::overflow_error("EPolynomial coefficient overflow");
                if (__builtin_add_overflow(r.c_[ka + kb], p, &s))
                    throw std::overflow_error("EPolynomial coefficient overflow");
                if (s == 0)
                    r.c_.erase(ka + kb);
                else
                    r.c_[ka + kb] = s;
            }
        return r;
    }

    EPolynomial& operator+=(const EPolynomial& b) { return *this = *this + b; }
    EPolynomial& operator*=(const EPolynomial& b) { return *this = *this * b; }
    bool operator==(const EPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const EPolynomial& o) const { return !(*this == o); }

    long long value_at(long long q0) const {
        // Horner over the sparse map, descending exponents.
        long long acc = 0;
        long long prev_exp = 0;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev_exp = it->first;
                first = false;
                continue;
            }
            for (long long e = prev_exp; e > it->first; --e)
                if (__builtin_mul_overflow(acc, q0, &acc))
                    throw std::overflow_error("EPolynomial evaluation overflow");
            if (__builtin_add_overflow(acc, it->second, &acc))
                throw std::overflow_error("EPolynomial evaluation overflow");
            prev_exp = it->first;
        }
        if (first) return 0;
        for (long long e = prev_exp; e > 0; --e)
            if (__builtin_mul_overflow(acc, q0, &acc))
                throw std::overflow_error("EPolynomial evaluation overflow");
        return acc;
    }

    // Degree of the zero polynomial is -1 by convention.
    long long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    // Descending-exponent text like "q^2 + 4*q + 1"; "0" for zero.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            long long k = it->first, c = it->second;
            unsigned long long mag = c < 0 ? -(unsigned long long)c : (unsigned long long)c;
            if (s.empty())
                s += (c < 0 ? "-" : "");
            else
                s += (c < 0 ? " - " : " + ");
            std::string qp = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
            if (k == 0)
                s += std::to_string(mag);
            else if (mag == 1)
                s += qp;
            else
                s += std::to_string(mag) + "*" + qp;
        }
        return s;
    }

    const std::map<long long, long long>& coefficients() const { return c_; }

  private:
    std::map<long long, long long> c_;
};

}  // namespace gatree
