#include <doctest.h>

#include "spinhecke/expr.hpp"
#include "spinhecke/isomorphisms.hpp"

using namespace spinhecke;

namespace {

void require_all(const Report& r) {
  for (const auto& c : r) {
    INFO(c.relation);
    CHECK(c.pass());
  }
}

}  // namespace

TEST_CASE("phi on generators") {
  auto hc = HCAlgebra::make(3, false);
  auto ten = TensorAlgebra::make(3, false);
  auto f = phi_map(3, false);
  CHECK(f(parse_element(hc, "c1")) == parse_element(ten, "c1"));
  CHECK(f(parse_element(hc, "T1")) == parse_element(ten, "-1/2*R1*(c1 - c2) + 1/2*e*(1 - c1*c2)"));
  auto t = f(parse_element(hc, "T1"));
  CHECK((t * t - Laurent::epsilon() * t - TensorElement::scalar(ten, 1)).is_zero());
}

TEST_CASE("psi on generators") {
  auto hc = HCAlgebra::make(3, false);
  auto ten = TensorAlgebra::make(3, false);
  auto g = psi_map(3, false);
  auto r = g(parse_element(ten, "R1"));
  CHECK(r == parse_element(hc, "(c1 - c2)*T1 + e*c2"));
  CHECK(r * r == parse_element(hc, "-e^2 - 2"));
  CHECK(phi(psi(parse_element(ten, "R1"))) == parse_element(ten, "R1"));
  CHECK(psi(phi(parse_element(hc, "T1"))) == parse_element(hc, "T1"));
}

TEST_CASE("affine maps") {
  auto hc = HCAlgebra::make(2, true);
  auto ten = TensorAlgebra::make(2, true);
  auto f = phi_map(2, true);
  auto g = psi_map(2, true);
  CHECK(f(parse_element(hc, "X1*X1^-1")) == TensorElement::scalar(ten, 1));
  CHECK(f(parse_element(hc, "X1")) * f(parse_element(hc, "X1^-1")) == TensorElement::scalar(ten, 1));
  auto p = g(parse_element(ten, "p1")), q = g(parse_element(ten, "q1"));
  CHECK((p * q - q * p).is_zero());
  CHECK(p * p + q * q == HCElement::scalar(hc, 1));
  CHECK(g(f(parse_element(hc, "X1"))) == parse_element(hc, "X1"));
}

TEST_CASE("finite suite") {
  for (int n = 1; n <= 3; ++n) {
    IsoOptions opt;
    opt.round_trips = 30;
    opt.pairs = 30;
    require_all(iso_suite(n, false, opt));
  }
}

TEST_CASE("affine suite") {
  IsoOptions opt;
  opt.round_trips = 20;
  opt.pairs = 20;
  require_all(iso_suite(1, true, opt));
  require_all(iso_suite(2, true, opt));
}

TEST_CASE("phi keeps the basis independent") {
  CHECK(phi_basis_rank(2) == 8);
  CHECK(phi_rank_check(3).pass());
}
