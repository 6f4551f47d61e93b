#include "pivot/field.hpp"

#include <utility>

namespace pivot {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::gfp(std::uint32_t p) {
    if (p >= (1u << 16)) {
        throw InvalidDescriptor("modulus " + std::to_string(p) + " exceeds the 2^16 bound");
    }
    if (!is_prime(p)) {
        throw InvalidDescriptor("modulus " + std::to_string(p) + " is not prime");
    }
    if (p == 2) return gf2();
    return FieldDescriptor(FieldKind::GFp, p);
}

std::string FieldDescriptor::str() const {
    switch (kind_) {
    case FieldKind::Rational: return "Q";
    default: return "GF(" + std::to_string(modulus_) + ")";
    }
}

std::uint64_t invert_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

FieldValue FieldValue::zero(const FieldDescriptor& d) {
    if (d.kind() == FieldKind::Rational) return FieldValue(d, mpq_class(0));
    return FieldValue(d, std::uint64_t{0});
}

FieldValue FieldValue::one(const FieldDescriptor& d) {
    if (d.kind() == FieldKind::Rational) return FieldValue(d, mpq_class(1));
    return FieldValue(d, std::uint64_t{1});
}

FieldValue FieldValue::from_integer(const FieldDescriptor& d, long v) {
    if (d.kind() == FieldKind::Rational) return FieldValue(d, mpq_class(v));
    long p = static_cast<long>(d.modulus());
    long r = v % p;
    if (r < 0) r += p;
    return FieldValue(d, static_cast<std::uint64_t>(r));
}

FieldValue FieldValue::fraction(long num, long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldValue(FieldDescriptor::rational(), std::move(q));
}

FieldValue FieldValue::from_mpq(mpq_class q) {
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return FieldValue(FieldDescriptor::rational(), std::move(q));
}

FieldValue FieldValue::residue(const FieldDescriptor& d, std::uint64_t v) {
    if (d.kind() == FieldKind::Rational) throw DescriptorMismatch("residue() on Q");
    return FieldValue(d, v % d.modulus());
}

bool FieldValue::is_zero() const {
    if (desc_.kind() == FieldKind::Rational) return sgn(std::get<mpq_class>(rep_)) == 0;
    return std::get<std::uint64_t>(rep_) == 0;
}

bool FieldValue::is_one() const {
    if (desc_.kind() == FieldKind::Rational) return std::get<mpq_class>(rep_) == 1;
    return std::get<std::uint64_t>(rep_) == 1 % desc_.modulus();
}

void FieldValue::require_same_field(const FieldValue& rhs) const {
    if (!(desc_ == rhs.desc_)) {
        throw DescriptorMismatch("operands from " + desc_.str() + " and " + rhs.desc_.str());
    }
}

FieldValue FieldValue::operator+(const FieldValue& rhs) const {
    require_same_field(rhs);
    if (desc_.kind() == FieldKind::Rational) {
        return FieldValue(desc_, mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(rhs.rep_)));
    }
    std::uint64_t s = std::get<std::uint64_t>(rep_) + std::get<std::uint64_t>(rhs.rep_);
    std::uint64_t p = desc_.modulus();
    return FieldValue(desc_, s >= p ? s - p : s);
}

FieldValue FieldValue::operator-(const FieldValue& rhs) const { return *this + (-rhs); }

FieldValue FieldValue::operator*(const FieldValue& rhs) const {
    require_same_field(rhs);
    if (desc_.kind() == FieldKind::Rational) {
        return FieldValue(desc_, mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(rhs.rep_)));
    }
    return FieldValue(desc_,
                      std::get<std::uint64_t>(rep_) * std::get<std::uint64_t>(rhs.rep_) % desc_.modulus());
}

FieldValue FieldValue::operator-() const {
    if (desc_.kind() == FieldKind::Rational) {
        return FieldValue(desc_, mpq_class(-std::get<mpq_class>(rep_)));
    }
    std::uint64_t a = std::get<std::uint64_t>(rep_);
    return FieldValue(desc_, a == 0 ? 0 : desc_.modulus() - a);
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in " + desc_.str());
    if (desc_.kind() == FieldKind::Rational) {
        mpq_class inv = 1 / std::get<mpq_class>(rep_);
        return FieldValue(desc_, std::move(inv));
    }
    return FieldValue(desc_, invert_mod(std::get<std::uint64_t>(rep_), desc_.modulus()));
}

bool FieldValue::operator==(const FieldValue& rhs) const {
    if (!(desc_ == rhs.desc_)) return false;
    if (desc_.kind() == FieldKind::Rational) {
        return std::get<mpq_class>(rep_) == std::get<mpq_class>(rhs.rep_);
    }
    return std::get<std::uint64_t>(rep_) == std::get<std::uint64_t>(rhs.rep_);
}

std::string FieldValue::str() const {
    if (desc_.kind() == FieldKind::Rational) return std::get<mpq_class>(rep_).get_str();
    return std::to_string(std::get<std::uint64_t>(rep_));
}

} // namespace pivot
