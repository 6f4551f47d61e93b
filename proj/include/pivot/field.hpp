#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "pivot/errors.hpp"

namespace pivot {

enum class FieldKind : std::uint8_t { GF2, GFp, Rational };

/// Identifies the field an element or matrix lives in.
///
/// GF(2) and GF(p) with p = 2 are the same field; descriptors canonicalize
/// modulus 2 to FieldKind::GF2 so the two spellings never compare unequal.
class FieldDescriptor {
public:
    static FieldDescriptor gf2() { return FieldDescriptor(FieldKind::GF2, 2); }

    /// Prime field GF(p). The modulus is checked by trial division and must
    /// satisfy 2 <= p < 2^16.
    static FieldDescriptor gfp(std::uint32_t p);

    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::Rational, 0); }

    FieldKind kind() const { return kind_; }

    /// Modulus of a prime field (2 for GF2). Must not be called on Q.
    std::uint32_t modulus() const { return modulus_; }

    bool is_prime_field() const { return kind_ != FieldKind::Rational; }

    /// Canonical spelling: "GF(2)", "GF(7)", "Q".
    std::string str() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    FieldDescriptor(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint32_t modulus_;
};

/// An exact field element in canonical form: residues live in [0, p) and
/// rationals are reduced with positive denominator, so equal elements are
/// representationally identical.
class FieldValue {
public:
    static FieldValue zero(const FieldDescriptor& d);
    static FieldValue one(const FieldDescriptor& d);

    /// Embeds an integer (reduced mod p for prime fields).
    static FieldValue from_integer(const FieldDescriptor& d, long v);

    /// Rational a/b. Throws DivisionByZero if b == 0; not valid for prime fields.
    static FieldValue fraction(long num, long den);

    static FieldValue from_mpq(mpq_class q);

    /// Residue class of v in GF(p).
    static FieldValue residue(const FieldDescriptor& d, std::uint64_t v);

    const FieldDescriptor& field() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p); prime fields only.
    std::uint32_t residue_value() const { return std::get<std::uint64_t>(rep_); }

    /// Reduced fraction; rational field only.
    const mpq_class& rational_value() const { return std::get<mpq_class>(rep_); }

    FieldValue operator+(const FieldValue& rhs) const;
    FieldValue operator-(const FieldValue& rhs) const;
    FieldValue operator*(const FieldValue& rhs) const;
    FieldValue operator-() const;

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    FieldValue inverse() const;

    bool operator==(const FieldValue& rhs) const;

    /// Canonical literal: decimal residue, or "a" / "a/b" for rationals.
    std::string str() const;

private:
    FieldValue(FieldDescriptor d, std::uint64_t v) : desc_(d), rep_(v) {}
    FieldValue(FieldDescriptor d, mpq_class q) : desc_(d), rep_(std::move(q)) {}

    void require_same_field(const FieldValue& rhs) const;

    FieldDescriptor desc_;
    std::variant<std::uint64_t, mpq_class> rep_;
};

/// Inverse of a residue mod p via the extended Euclidean algorithm.
/// Throws DivisionByZero when a == 0 mod p.
std::uint64_t invert_mod(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint32_t n);

} // namespace pivot
