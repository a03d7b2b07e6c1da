#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "detkit/errors.hpp"

namespace detkit {

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator (gmp's canonical form). Values are immutable once constructed.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)

    Rational(long num, long den) {
        if (den == 0)
            throw DivisionByZeroError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }

    // Same-field constants, mirroring the prime-field API so generic code can
    // mint 0/1 from any element in hand.
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw DivisionByZeroError("division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return cmp(q_, o.q_) == 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    // Canonical rendering: lowest terms, sign on the numerator, "/1" suppressed.
    std::string str() const { return q_.get_str(); }

    // Accepts `[-]?[0-9]+(/[0-9]+)?`. A denominator that is zero raises
    // DivisionByZero (not ParseError): "x/0" is well-formed text naming an
    // impossible field element.
    static Rational parse(std::string_view text) {
        auto [num, den] = split_fraction(text);
        mpz_class d(den);
        if (sgn(d) == 0)
            throw DivisionByZeroError("zero denominator in '" + std::string(text) + "'");
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    // Shared grammar validation for all scalar parsers: returns the numerator
    // (with sign) and denominator ("1" when absent) as decimal strings.
    static std::pair<std::string, std::string> split_fraction(std::string_view text) {
        std::size_t i = 0;
        if (i < text.size() && text[i] == '-')
            ++i;
        std::size_t num_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == num_begin)
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        std::string num(text.substr(0, i));
        if (i == text.size())
            return {num, "1"};
        if (text[i] != '/')
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == den_begin || i != text.size())
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        return {num, std::string(text.substr(den_begin))};
    }

  private:
    mpq_class q_;
};

inline bool same_field(const Rational&, const Rational&) { return true; }

} // namespace detkit
