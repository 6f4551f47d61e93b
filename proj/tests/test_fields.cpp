#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pivot/errors.hpp"
#include "pivot/field.hpp"

using namespace pivot;

TEST_CASE("descriptor construction and canonical names") {
    CHECK(FieldDescriptor::gf2().str() == "GF(2)");
    CHECK(FieldDescriptor::gfp(7).str() == "GF(7)");
    CHECK(FieldDescriptor::rational().str() == "Q");
    CHECK(FieldDescriptor::gfp(2) == FieldDescriptor::gf2());
    CHECK(FieldDescriptor::gfp(2).kind() == FieldKind::GF2);
    CHECK(FieldDescriptor::gfp(65521).modulus() == 65521);
}

TEST_CASE("descriptor rejects invalid moduli") {
    CHECK_THROWS_AS(FieldDescriptor::gfp(0), InvalidDescriptor);
    CHECK_THROWS_AS(FieldDescriptor::gfp(1), InvalidDescriptor);
    CHECK_THROWS_AS(FieldDescriptor::gfp(4), InvalidDescriptor);
    CHECK_THROWS_AS(FieldDescriptor::gfp(9), InvalidDescriptor);
    CHECK_THROWS_AS(FieldDescriptor::gfp(65537), InvalidDescriptor);
}

TEST_CASE("gf2 arithmetic") {
    auto d = FieldDescriptor::gf2();
    auto zero = FieldValue::zero(d);
    auto one = FieldValue::one(d);
    CHECK(one + one == zero);
    CHECK(one * one == one);
    CHECK(-one == one);
    CHECK(one.inverse() == one);
    CHECK(one.str() == "1");
}

TEST_CASE("gf5 arithmetic") {
    auto d = FieldDescriptor::gfp(5);
    auto v = [&](long x) { return FieldValue::from_integer(d, x); };
    CHECK(v(3) + v(4) == v(2));
    CHECK(v(2) * v(3) == v(1));
    CHECK(v(2).inverse() == v(3));
    CHECK(v(1) - v(3) == v(3));
    CHECK(-v(2) == v(3));
    CHECK(v(-1) == v(4));
    CHECK(v(7) == v(2));
    CHECK(v(3).str() == "3");
}

TEST_CASE("rational arithmetic stays reduced") {
    auto half = FieldValue::fraction(1, 2);
    auto third = FieldValue::fraction(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK(FieldValue::fraction(2, 3) * FieldValue::fraction(3, 4) == half);
    CHECK(FieldValue::fraction(2, 3).inverse() == FieldValue::fraction(3, 2));
    CHECK(FieldValue::fraction(2, -4).str() == "-1/2");
    CHECK(FieldValue::fraction(4, 2).str() == "2");
    CHECK(FieldValue::fraction(0, 5) == FieldValue::zero(FieldDescriptor::rational()));
    CHECK((half - half).is_zero());
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(FieldValue::fraction(1, 0), DivisionByZero);
    CHECK_THROWS_AS(FieldValue::zero(FieldDescriptor::gf2()).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldValue::zero(FieldDescriptor::rational()).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldValue::zero(FieldDescriptor::gfp(7)).inverse(), DivisionByZero);
}

TEST_CASE("values from different fields do not mix") {
    auto a = FieldValue::one(FieldDescriptor::gf2());
    auto b = FieldValue::one(FieldDescriptor::gfp(3));
    CHECK_THROWS_AS(a + b, DescriptorMismatch);
    CHECK_THROWS_AS(a * b, DescriptorMismatch);
    CHECK_FALSE(a == b);
}

TEST_CASE("modular inverse helper") {
    CHECK(invert_mod(3, 7) == 5);
    CHECK(invert_mod(1, 2) == 1);
    CHECK(invert_mod(65520, 65521) == 65520);
    for (std::uint64_t a = 1; a < 13; ++a) CHECK(invert_mod(a, 13) * a % 13 == 1);
    CHECK_THROWS_AS(invert_mod(0, 5), DivisionByZero);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(65517));
}
