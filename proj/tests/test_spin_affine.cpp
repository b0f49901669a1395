#include "doctest.h"
#include "spinhecke/expr.hpp"
#include "spinhecke/spin_affine.hpp"

using namespace spinhecke;

TEST_CASE("recursions reproduce the next generators") {
  for (ZMode m : {ZMode::Minus, ZMode::Plus, ZMode::Cover}) {
    auto H = SpinAlgebra::make(3, m, true);
    for (int i = 1; i <= 2; ++i) {
      auto [p, q] = recursion_images(H, i);
      CHECK(p == generator(H, H->p(i + 1)));
      CHECK(q == generator(H, H->q(i + 1)));
    }
  }
}

TEST_CASE("center") {
  for (int n = 1; n <= 3; ++n) {
    auto r = center_suite(SpinAlgebra::make(n, ZMode::Minus, true));
    for (const auto& c : r) {
      CAPTURE(c.relation);
      CHECK(c.pass());
    }
  }
  auto odd3 = odd_center_check(SpinAlgebra::make(3, ZMode::Minus, true));
  CHECK(odd3.holds);
  CHECK(odd3.pass());
  auto even2 = odd_center_check(SpinAlgebra::make(2, ZMode::Minus, true));
  CHECK_FALSE(even2.holds);
  CHECK(even2.pass());
  CHECK(odd_center_check(SpinAlgebra::make(1, ZMode::Minus, true)).holds);
}

TEST_CASE("affine involutions") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, true);
  CHECK(apply_involution("sigma-", parse_element(H, "p1*R1")) == parse_element(H, "-p3*R2"));
  CHECK(apply_involution("bar_q", parse_element(H, "q*q1")) == parse_element(H, "-q^-1*q1"));
  CHECK(apply_involution("tau", parse_element(H, "q1*R1")) == parse_element(H, "R1*q1"));
  for (int n = 2; n <= 3; ++n) {
    auto r = involution_suite(SpinAlgebra::make(n, ZMode::Minus, true), 11, 10);
    for (const auto& c : r) {
      CAPTURE(c.relation);
      CHECK(c.pass());
    }
  }
}

TEST_CASE("affine covering quotients") {
  auto C = SpinAlgebra::make(2, ZMode::Cover, true);
  auto S = SpinAlgebra::make(2, ZMode::Minus, true);
  auto P = SpinAlgebra::make(2, ZMode::Plus, true);
  CHECK(cover_quotient(parse_element(C, "Tt1*Qt1"), -1) == parse_element(S, "R1*q1"));
  CHECK(cover_quotient(parse_element(C, "Tt1*Pt1"), 1) == parse_element(P, "Tc1*P1"));
  for (int n = 2; n <= 3; ++n) {
    auto r = cover_quotient_suite(n, true, 5, 10);
    for (const auto& c : r) {
      CAPTURE(c.relation);
      CHECK(c.pass());
    }
  }
}
