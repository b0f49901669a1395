#include "doctest.h"
#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"

using namespace spinhecke;

TEST_CASE("laurent text round trip") {
  CHECK(parse_laurent("3/2*q^-1 + i*q^2").to_string() == "3/2*q^-1 + i*q^2");
  CHECK(parse_laurent("e").to_string() == "-q^-1 + q");
  CHECK(parse_laurent("e^2 + 2") == Laurent::q(2) + Laurent::q(-2));
  CHECK(parse_laurent("-(q - q^-1)") == -Laurent::epsilon());
  CHECK(parse_laurent("(1 + 2*i)*q").to_string() == "(1 + 2*i)*q");
}

TEST_CASE("parse errors carry offsets") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, false);
  try {
    parse_element(H, "R1 * R7");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.code() == "index_out_of_range");
    CHECK(e.offset() == 5);
  }
  try {
    parse_element(H, "R1 + T1");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.code() == "unknown_generator");
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_element(H, "R1 +"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "(R1"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "R1^-1"), ParseError);
  CHECK_THROWS_AS(parse_laurent("q + R1"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "1/0"), ParseError);
}

TEST_CASE("canonical printing parses back") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, true);
  auto x = parse_element(H, "(R1 + q*p1)*(q2 - e*R2*R1) + 3/2");
  CHECK(parse_element(H, x.to_string()) == x);
  auto C = HCAlgebra::make(2, true);
  auto y = parse_element(C, "(T1 + e*c1*c2)*X1^-2*T1 + X2");
  CHECK(parse_element(C, y.to_string()) == y);
  auto Z = SpinAlgebra::make(3, ZMode::Cover, false);
  auto w = parse_element(Z, "Tt1*Tt2*Tt1*Tt2");
  CHECK(parse_element(Z, w.to_string()) == w);
}

TEST_CASE("staircase printing") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, false);
  CHECK(parse_element(H, "R2*R1*R2").to_string() == "(q^-2 - 2 + q^2)*R1 + (-q^-2 + 2 - q^2)*R2 + R1*R2*R1");
  CHECK(parse_element(H, "R1*R1").to_string() == "-q^-2 - q^2");
}
