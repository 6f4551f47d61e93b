#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pivot/errors.hpp"
#include "pivot/text_format.hpp"

using namespace pivot;

TEST_CASE("field names") {
    CHECK(parse_field_name("GF(2)") == FieldDescriptor::gf2());
    CHECK(parse_field_name("GF(7)") == FieldDescriptor::gfp(7));
    CHECK(parse_field_name("GF(65521)") == FieldDescriptor::gfp(65521));
    CHECK(parse_field_name("Q") == FieldDescriptor::rational());
    CHECK_THROWS_AS(parse_field_name("gf(2)"), ParseError);
    CHECK_THROWS_AS(parse_field_name("GF()"), ParseError);
    CHECK_THROWS_AS(parse_field_name("GF(x)"), ParseError);
    CHECK_THROWS_AS(parse_field_name("R"), ParseError);
    CHECK_THROWS_AS(parse_field_name("GF(4)"), InvalidDescriptor);
    CHECK_THROWS_AS(parse_field_name("GF(65537)"), InvalidDescriptor);
}

TEST_CASE("scalar literals") {
    auto g5 = FieldDescriptor::gfp(5);
    CHECK(parse_scalar(g5, "7") == FieldValue::from_integer(g5, 2));
    CHECK(parse_scalar(g5, "-1") == FieldValue::from_integer(g5, 4));
    CHECK(parse_scalar(g5, "0") == FieldValue::zero(g5));
    CHECK_THROWS_AS(parse_scalar(g5, "1/2"), ParseError);
    CHECK_THROWS_AS(parse_scalar(g5, "x"), ParseError);

    auto q = FieldDescriptor::rational();
    CHECK(parse_scalar(q, "-3/6") == FieldValue::fraction(-1, 2));
    CHECK(parse_scalar(q, "4/2") == FieldValue::fraction(2, 1));
    CHECK(parse_scalar(q, "5") == FieldValue::from_integer(q, 5));
    CHECK(parse_scalar(q, "2/-4") == FieldValue::fraction(-1, 2));
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar(q, "1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_scalar(q, "1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar(q, ""), ParseError);
}

TEST_CASE("matrix parsing") {
    auto m = parse_matrix("field GF(2)\n"
                          "cols a b\n"
                          "r2: 0 1\n"
                          "r1: 1 1\n");
    CHECK(m.field() == FieldDescriptor::gf2());
    CHECK(m.row_labels() == LabelSet::of({"r1", "r2"}));
    CHECK(m.col_labels() == LabelSet::of({"a", "b"}));
    CHECK(m.at(Label("r1"), Label("a")).is_one());
    CHECK(m.at(Label("r2"), Label("a")).is_zero());
}

TEST_CASE("header order fixes entry order, not the set") {
    auto m1 = parse_matrix("field Q\nlabels a b\na: 1 2\nb: 3 4\n");
    auto m2 = parse_matrix("field Q\nlabels b a\nb: 4 3\na: 2 1\n");
    CHECK(m1 == m2);
    CHECK(m1.at(Label("a"), Label("b")) == FieldValue::from_integer(FieldDescriptor::rational(), 2));
}

TEST_CASE("comments and blank lines are ignored") {
    auto m = parse_matrix("# a matrix\n"
                          "field GF(3)   # inline comment\n"
                          "\n"
                          "cols x\n"
                          "r: 2 # the only entry\n");
    CHECK(m.at(Label("r"), Label("x")) == FieldValue::from_integer(FieldDescriptor::gfp(3), 2));
}

TEST_CASE("matrix round trips through print and parse") {
    const char* texts[] = {
        "field GF(2)\nlabels a b\na: 1 1\nb: 1 0\n",
        "field Q\nlabels u v\nu: 1/2 -2/3\nv: 0 17\n",
        "field GF(7)\ncols c d e\nr: 1 6 3\n",
        "field Q\nlabels\n",
        "field GF(2)\ncols a b\n",
    };
    for (const char* t : texts) {
        auto m = parse_matrix(t);
        CHECK(parse_matrix(print_matrix(m)) == m);
    }
    auto square = parse_matrix(texts[0]);
    CHECK(print_matrix(square).find("labels a b") != std::string::npos);
    auto rect = parse_matrix(texts[2]);
    CHECK(print_matrix(rect).find("cols c d e") != std::string::npos);
}

TEST_CASE("zero column matrices survive the round trip") {
    auto m = parse_matrix("field GF(2)\ncols\nr1:\nr2:\n");
    CHECK(m.row_labels().size() == 2);
    CHECK(m.col_labels().empty());
    CHECK(parse_matrix(print_matrix(m)) == m);
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("cols a\nfield Q\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\nrows a\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a a\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a\nr: 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a\nr: \n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a\nr 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a\nr: 1\nr: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\nlabels a\nb: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field Q\ncols a\nr: 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("field GF(6)\ncols a\nr: 1\n"), InvalidDescriptor);
}

TEST_CASE("graph parsing and printing") {
    auto g = parse_graph("vertices b a c  # three\n"
                         "edge c a\n"
                         "\n"
                         "edge a b\n"
                         "edge b a  # duplicate collapses\n");
    CHECK(g.vertices() == LabelSet::of({"a", "b", "c"}));
    CHECK(g.edges().size() == 2);
    CHECK(g.has_edge(Label("a"), Label("c")));
    CHECK(parse_graph(print_graph(g)) == g);
    CHECK(print_graph(g) == "vertices a b c\nedge a b\nedge a c\n");

    SimpleGraph lonely(LabelSet::of({"v"}));
    CHECK(parse_graph(print_graph(lonely)) == lonely);
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("edges a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices a b\nedge a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices a b\nedge a b c\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices a b\nedge a z\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices a b\nedge a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices a a\n"), ParseError);
}
