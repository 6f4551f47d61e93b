#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pivot/errors.hpp"
#include "pivot/labeled_matrix.hpp"

using namespace pivot;

namespace {

const FieldDescriptor kGf2 = FieldDescriptor::gf2();
const FieldDescriptor kQ = FieldDescriptor::rational();

LabeledMatrix from_rows(const FieldDescriptor& d, const LabelSet& rows, const LabelSet& cols,
                        std::initializer_list<std::initializer_list<long>> data) {
    LabeledMatrix m(d, rows, cols);
    std::size_t i = 0;
    for (const auto& row : data) {
        std::size_t j = 0;
        for (long v : row) m.set_entry(i, j++, FieldValue::from_integer(d, v));
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("entries default to zero and are label addressed") {
    auto rows = LabelSet::of({"b", "a"});
    auto cols = LabelSet::of({"x"});
    LabeledMatrix m(kGf2, rows, cols);
    CHECK(m.at(Label("a"), Label("x")).is_zero());
    m.set(Label("b"), Label("x"), FieldValue::one(kGf2));
    CHECK(m.at(Label("b"), Label("x")).is_one());
    CHECK_THROWS_AS(m.at(Label("z"), Label("x")), LabelNotFound);
    CHECK_THROWS_AS(m.set(Label("a"), Label("x"), FieldValue::one(kQ)), DescriptorMismatch);
}

TEST_CASE("equality ignores construction order") {
    auto V = LabelSet::of({"a", "b"});
    auto m1 = from_rows(kQ, V, V, {{1, 2}, {3, 4}});
    LabeledMatrix m2(kQ, V, V);
    m2.set(Label("b"), Label("b"), FieldValue::from_integer(kQ, 4));
    m2.set(Label("a"), Label("b"), FieldValue::from_integer(kQ, 2));
    m2.set(Label("b"), Label("a"), FieldValue::from_integer(kQ, 3));
    m2.set(Label("a"), Label("a"), FieldValue::from_integer(kQ, 1));
    CHECK(m1 == m2);
}

TEST_CASE("rank and nullity over each field") {
    auto V = LabelSet::of({"a", "b"});
    auto ones = from_rows(kGf2, V, V, {{1, 1}, {1, 1}});
    CHECK(ones.rank() == 1);
    CHECK(ones.nullity() == 1);

    auto g5 = FieldDescriptor::gfp(5);
    CHECK(from_rows(g5, V, V, {{2, 4}, {1, 2}}).rank() == 1);
    CHECK(from_rows(g5, V, V, {{2, 4}, {1, 3}}).rank() == 2);

    CHECK(from_rows(kQ, V, V, {{1, 2}, {3, 4}}).rank() == 2);
    CHECK(from_rows(kQ, V, V, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("empty shapes follow the nullity conventions") {
    auto V = LabelSet::of({"a", "b", "c"});
    auto A = from_rows(kQ, V, V, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    LabelSet empty;
    CHECK(A.submatrix(empty, V).rank() == 0);
    CHECK(A.submatrix(empty, V).nullity() == 3);
    CHECK(A.submatrix(V, empty).nullity() == 0);
    CHECK(A.submatrix(empty, empty).rank() == 0);
    auto id0 = LabeledMatrix::identity(empty, kQ);
    CHECK(id0.inverse() == id0);
}

TEST_CASE("kernel basis is canonical and annihilated") {
    auto V = LabelSet::of({"a", "b"});
    auto ones = from_rows(kGf2, V, V, {{1, 1}, {1, 1}});
    auto basis = ones.kernel_basis();
    REQUIRE(basis.dimension() == 1);
    CHECK(basis.vectors[0].at(Label("a")).is_one());
    CHECK(basis.vectors[0].at(Label("b")).is_one());
    CHECK(ones.apply(basis.vectors[0]).is_zero());

    auto q = from_rows(kQ, V, V, {{1, 2}, {2, 4}});
    auto qb = q.kernel_basis();
    REQUIRE(qb.dimension() == 1);
    CHECK(qb.vectors[0].at(Label("a")) == FieldValue::from_integer(kQ, -2));
    CHECK(qb.vectors[0].at(Label("b")).is_one());
    CHECK(q.apply(qb.vectors[0]).is_zero());

    auto full = from_rows(kQ, V, V, {{1, 2}, {3, 4}});
    CHECK(full.kernel_basis().dimension() == 0);
}

TEST_CASE("kernel vectors carry one at their own free label") {
    auto V = LabelSet::of({"a", "b", "c", "d"});
    auto A = from_rows(kQ, V, V, {{1, 1, 1, 1}, {0, 0, 1, 2}, {0, 0, 0, 0}, {1, 1, 2, 3}});
    auto basis = A.kernel_basis();
    REQUIRE(basis.dimension() == 2);
    CHECK(basis.vectors[0].at(Label("b")).is_one());
    CHECK(basis.vectors[1].at(Label("d")).is_one());
    for (const auto& v : basis.vectors) CHECK(A.apply(v).is_zero());
    CHECK(A.rank() == 2);
}

TEST_CASE("inverse golden values") {
    auto V = LabelSet::of({"a", "b"});
    auto A = from_rows(kQ, V, V, {{1, 1}, {0, 1}});
    auto expected = from_rows(kQ, V, V, {{1, -1}, {0, 1}});
    CHECK(A.inverse() == expected);
    CHECK(A.inverse() * A == LabeledMatrix::identity(V, kQ));

    auto B = from_rows(kGf2, V, V, {{1, 1}, {1, 0}});
    CHECK(B.inverse() * B == LabeledMatrix::identity(V, kGf2));

    CHECK_THROWS_AS(from_rows(kQ, V, V, {{1, 2}, {2, 4}}).inverse(), Singular);
    auto rect = from_rows(kQ, V, LabelSet::of({"x"}), {{1}, {2}});
    CHECK_THROWS_AS(rect.inverse(), NotSquare);
}

TEST_CASE("product sum and negation respect labels") {
    auto V = LabelSet::of({"a", "b"});
    auto A = from_rows(kQ, V, V, {{1, 2}, {3, 4}});
    auto B = from_rows(kQ, V, V, {{0, 1}, {1, 0}});
    auto AB = from_rows(kQ, V, V, {{2, 1}, {4, 3}});
    CHECK(A * B == AB);
    CHECK(A + (-A) == LabeledMatrix(kQ, V, V));
    CHECK(LabeledMatrix::identity(V, kQ) * A == A);

    auto W = LabelSet::of({"x", "y"});
    auto C = from_rows(kQ, W, W, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(A * C, ShapeMismatch);
    CHECK_THROWS_AS(A + C, ShapeMismatch);
}

TEST_CASE("identity on a subset") {
    auto V = LabelSet::of({"a", "b", "c"});
    auto X = LabelSet::of({"a", "c"});
    auto I = LabeledMatrix::identity_on(X, V, kGf2);
    CHECK(I.at(Label("a"), Label("a")).is_one());
    CHECK(I.at(Label("b"), Label("b")).is_zero());
    CHECK(I.at(Label("c"), Label("c")).is_one());
    CHECK(I.at(Label("a"), Label("c")).is_zero());
    CHECK_THROWS_AS(LabeledMatrix::identity_on(LabelSet::of({"z"}), V, kGf2), ShapeMismatch);
}

TEST_CASE("submatrix keeps labels") {
    auto V = LabelSet::of({"a", "b", "c"});
    auto A = from_rows(kQ, V, V, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    auto S = A.submatrix(LabelSet::of({"a", "c"}), LabelSet::of({"b"}));
    CHECK(S.row_labels() == LabelSet::of({"a", "c"}));
    CHECK(S.at(Label("a"), Label("b")) == FieldValue::from_integer(kQ, 2));
    CHECK(S.at(Label("c"), Label("b")) == FieldValue::from_integer(kQ, 8));
    CHECK_THROWS_AS(A.submatrix(LabelSet::of({"z"}), V), LabelNotFound);
}

TEST_CASE("pad and project round trip") {
    auto small = LabelSet::of({"b"});
    auto big = LabelSet::of({"a", "b"});
    LabeledVector w(kQ, small);
    w.set(Label("b"), FieldValue::from_integer(kQ, 7));
    auto padded = pad(w, big);
    CHECK(padded.at(Label("a")).is_zero());
    CHECK(padded.at(Label("b")) == FieldValue::from_integer(kQ, 7));
    CHECK(project(padded, small) == w);
    CHECK_THROWS_AS(pad(padded, small), LabelNotFound);
}

TEST_CASE("span comparison by exact rank") {
    auto V = LabelSet::of({"a", "b", "c"});
    auto vec = [&](long a, long b, long c) {
        LabeledVector v(kQ, V);
        v.set(Label("a"), FieldValue::from_integer(kQ, a));
        v.set(Label("b"), FieldValue::from_integer(kQ, b));
        v.set(Label("c"), FieldValue::from_integer(kQ, c));
        return v;
    };
    std::vector<LabeledVector> s1 = {vec(1, 0, 0), vec(0, 1, 0)};
    std::vector<LabeledVector> s2 = {vec(1, 1, 0), vec(1, -1, 0)};
    std::vector<LabeledVector> s3 = {vec(1, 0, 0), vec(0, 0, 1)};
    CHECK(span_rank(s1) == 2);
    CHECK(same_span(s1, s2));
    CHECK_FALSE(same_span(s1, s3));
    CHECK(same_span({}, {}));
    CHECK_FALSE(same_span(s1, {}));
}
