#include <doctest.h>

#include "spinhecke/expr.hpp"
#include "spinhecke/localization.hpp"

using namespace spinhecke;

namespace {

void require_all(const Report& r) {
  for (const auto& c : r) {
    INFO(c.relation);
    CHECK(c.pass());
  }
}

}  // namespace

TEST_CASE("delta") {
  auto a2 = SpinAlgebra::make(2, ZMode::Minus, true);
  CHECK(delta(a2) == parse_element(a2, "p1^2 - 2*p1*p2 + p2^2"));
  auto a3 = SpinAlgebra::make(3, ZMode::Minus, true);
  auto d3 = delta(a3);
  for (const auto& [w, c] : d3.terms()) CHECK(w.p_degree() == 6);
}

TEST_CASE("exact division") {
  auto a = SpinAlgebra::make(2, ZMode::Minus, true);
  auto d = delta(a);
  auto x = parse_element(a, "R1*q1 + e*p2");
  SpinElement out;
  REQUIRE(divide_by_p_polynomial(d * x, d, out));
  CHECK(out == x);
  CHECK_FALSE(divide_by_p_polynomial(parse_element(a, "p1"), d, out));
}

TEST_CASE("inverse of p1 - p2") {
  auto a = SpinAlgebra::make(2, ZMode::Minus, true);
  auto inv = invert_p_diff(a, 1);
  CHECK(inv.num() == parse_element(a, "p1 - p2"));
  CHECK(inv.dpow() == 1);
}

TEST_CASE("gimel relations n=2") {
  auto a = SpinAlgebra::make(2, ZMode::Minus, true);
  require_all(localization_suite(a));
  require_all(intertwiner_suite(a));
}

TEST_CASE("gimel relations n=3") {
  auto a = SpinAlgebra::make(3, ZMode::Minus, true);
  require_all(localization_suite(a));
  IntertwinerOptions opt;
  opt.braid = false;
  require_all(intertwiner_suite(a, opt));
}

TEST_CASE("delta regularity n=2") {
  CHECK(delta_regularity_check(SpinAlgebra::make(2, ZMode::Minus, true), 4).pass());
}
