#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "detkit/errors.hpp"
#include "detkit/gfp.hpp"
#include "detkit/rational.hpp"
#include "detkit/rng.hpp"

namespace detkit {

enum class FieldKind { Rational, PrimeField };

// Runtime description of the active field; what the CLI parses and what gets
// echoed in reports. Prime moduli are validated on construction and capped at
// 2^31.
struct FieldDescriptor {
    FieldKind kind;
    std::uint32_t modulus; // 0 for Rational

    static FieldDescriptor rational() { return {FieldKind::Rational, 0}; }

    static FieldDescriptor gf(std::uint64_t p) {
        if (p < 2 || p > (1ULL << 31))
            throw InvalidModulusError("modulus " + std::to_string(p) + " out of range [2, 2^31]");
        if (!is_prime(p))
            throw InvalidModulusError("modulus " + std::to_string(p) + " is not prime");
        return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
    }

    // "rational" or "gf:<p>".
    static FieldDescriptor parse(std::string_view text) {
        if (text == "rational")
            return rational();
        if (text.substr(0, 3) == "gf:") {
            std::string_view digits = text.substr(3);
            if (digits.empty() || digits.size() > 10)
                throw ParseError("malformed field '" + std::string(text) + "'");
            std::uint64_t p = 0;
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw ParseError("malformed field '" + std::string(text) + "'");
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return gf(p);
        }
        throw ParseError("unknown field '" + std::string(text) + "' (expected 'rational' or 'gf:<p>')");
    }

    std::string str() const {
        return kind == FieldKind::Rational ? "rational" : "gf:" + std::to_string(modulus);
    }

    bool operator==(const FieldDescriptor&) const = default;
};

// The rationals. Random entries are drawn as numerator in [-9, 9] followed by
// denominator in [1, 9]; the draw order is part of the reproducibility
// contract.
struct RationalField {
    using Element = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_long(std::int64_t n) const { return Rational(static_cast<long>(n)); }
    Rational parse(std::string_view text) const { return Rational::parse(text); }

    Rational random_entry(SplitMix64& rng) const {
        long num = static_cast<long>(rng.next_in(-9, 9));
        long den = static_cast<long>(rng.next_in(1, 9));
        return Rational(num, den);
    }

    FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }
};

// GF(p) for prime p. Random entries are uniform residues.
struct PrimeField {
    using Element = Gfp;

    explicit PrimeField(std::uint32_t p) : p_(FieldDescriptor::gf(p).modulus) {}
    explicit PrimeField(const FieldDescriptor& d) : p_(d.modulus) {
        if (d.kind != FieldKind::PrimeField)
            throw FieldMismatchError("descriptor is not a prime field");
    }

    std::uint32_t modulus() const { return p_; }

    Gfp zero() const { return Gfp(0, p_); }
    Gfp one() const { return Gfp(1, p_); }
    Gfp from_long(std::int64_t n) const { return Gfp::from_int(n, p_); }
    Gfp parse(std::string_view text) const { return Gfp::parse(text, p_); }
    Gfp random_entry(SplitMix64& rng) const { return Gfp(rng.next_below(p_), p_); }

    FieldDescriptor descriptor() const { return {FieldKind::PrimeField, p_}; }

  private:
    std::uint32_t p_;
};

template <class F>
concept ScalarField = requires(const F& f, SplitMix64& rng, std::string_view text) {
    typename F::Element;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_long(std::int64_t{}) } -> std::same_as<typename F::Element>;
    { f.parse(text) } -> std::same_as<typename F::Element>;
    { f.random_entry(rng) } -> std::same_as<typename F::Element>;
    { f.descriptor() } -> std::same_as<FieldDescriptor>;
};

static_assert(ScalarField<RationalField>);
static_assert(ScalarField<PrimeField>);

} // namespace detkit
