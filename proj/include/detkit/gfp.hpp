#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "detkit/errors.hpp"
#include "detkit/rational.hpp"

namespace detkit {

// Deterministic trial division; moduli are CLI-scale (< 2^31), so this is fast.
inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

// Element of GF(p). Every value carries its modulus; operations on values with
// different moduli raise FieldMismatch. The residue is canonical in [0, p).
class Gfp {
  public:
    Gfp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

    static Gfp from_int(std::int64_t value, std::uint32_t p) {
        std::int64_t m = value % static_cast<std::int64_t>(p);
        if (m < 0)
            m += p;
        return Gfp(static_cast<std::uint64_t>(m), p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    Gfp zero() const { return Gfp(0, p_); }
    Gfp one() const { return Gfp(1, p_); }

    Gfp operator-() const { return Gfp(p_ - v_, p_); }

    Gfp operator+(const Gfp& o) const {
        check(o);
        return Gfp(static_cast<std::uint64_t>(v_) + o.v_, p_);
    }

    Gfp operator-(const Gfp& o) const {
        check(o);
        return Gfp(static_cast<std::uint64_t>(v_) + (p_ - o.v_), p_);
    }

    Gfp operator*(const Gfp& o) const {
        check(o);
        return Gfp(static_cast<std::uint64_t>(v_) * o.v_, p_);
    }

    Gfp operator/(const Gfp& o) const {
        check(o);
        return *this * o.inverse();
    }

    Gfp& operator+=(const Gfp& o) { return *this = *this + o; }
    Gfp& operator-=(const Gfp& o) { return *this = *this - o; }
    Gfp& operator*=(const Gfp& o) { return *this = *this * o; }

    bool operator==(const Gfp& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const Gfp& o) const { return !(*this == o); }

    // Extended Euclid; p prime, so every nonzero residue is invertible.
    Gfp inverse() const {
        if (v_ == 0)
            throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p_) + ")");
        std::int64_t r0 = p_, r1 = v_, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        return from_int(t0, p_);
    }

    std::string str() const { return std::to_string(v_); }

    // Same textual grammar as Rational; "/" means field division, so the
    // denominator must be nonzero mod p.
    static Gfp parse(std::string_view text, std::uint32_t p) {
        auto [num, den] = Rational::split_fraction(text);
        Gfp n = reduce_decimal(num, p);
        Gfp d = reduce_decimal(den, p);
        if (d.is_zero())
            throw DivisionByZeroError("denominator '" + den + "' is zero in GF(" + std::to_string(p) + ")");
        return n / d;
    }

  private:
    void check(const Gfp& o) const {
        if (p_ != o.p_)
            throw FieldMismatchError("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    // Horner reduction of a (possibly signed) decimal literal of any length.
    static Gfp reduce_decimal(std::string_view digits, std::uint32_t p) {
        bool neg = !digits.empty() && digits[0] == '-';
        std::uint64_t acc = 0;
        for (char c : digits.substr(neg ? 1 : 0))
            acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        Gfp r(acc, p);
        return neg ? -r : r;
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline bool same_field(const Gfp& a, const Gfp& b) { return a.modulus() == b.modulus(); }

} // namespace detkit
