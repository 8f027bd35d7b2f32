#include <doctest.h>

#include "novikov/constructions.hpp"
#include "novikov/deffile.hpp"

using namespace novikov;

TEST_CASE("definition files round-trip byte-identically") {
    for (const Algebra& a :
         {example1(Field::rationals()), truncated_witt(5, Field::rationals()),
          mishchenko(4, Field::rationals()), binomial_mishchenko(3, Field::prime(7))}) {
        std::string text = emit_definition(a);
        Algebra back = parse_definition(text);
        CHECK(back.dim() == a.dim());
        CHECK(back.labels() == a.labels());
        CHECK(back.table() == a.table());
        CHECK(back.field() == a.field());
        CHECK(emit_definition(back) == text);
    }
}

TEST_CASE("parse accepts exact coefficient strings") {
    std::string text = R"({
      "field": {"kind": "rationals"},
      "dim": 2,
      "basis": ["a", "b"],
      "table": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "-3/2"}]}]
    })";
    Algebra a = parse_definition(text);
    CHECK(multiply(a, a.basis_element(0), a.basis_element(1)) ==
          a.basis_element(1).scaled(a.field().parse("-3/2")));
}

TEST_CASE("parse diagnostics") {
    CHECK_THROWS_AS(parse_definition("not json"), ParseError);
    CHECK_THROWS_AS(parse_definition("{}"), ParseError);
    CHECK_THROWS_AS(parse_definition(R"({"field":{"kind":"reals"},"dim":1,"basis":["a"],"table":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_definition(R"({"field":{"kind":"prime-field","p":6},"dim":1,"basis":["a"],"table":[]})"),
                    ParseError);
    // index out of range
    CHECK_THROWS_AS(
        parse_definition(
            R"({"field":{"kind":"rationals"},"dim":2,"basis":["a","b"],"table":[{"i":0,"j":1,"terms":[{"k":5,"c":"1"}]}]})"),
        ParseError);
    // basis/dim mismatch
    CHECK_THROWS_AS(
        parse_definition(R"({"field":{"kind":"rationals"},"dim":3,"basis":["a","b"],"table":[]})"),
        ParseError);
    CHECK_THROWS_AS(load_definition_file("/nonexistent/path.json"), ParseError);
}
