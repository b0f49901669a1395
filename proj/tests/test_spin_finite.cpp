#include <algorithm>
#include <set>

#include "doctest.h"
#include "spinhecke/expr.hpp"
#include "spinhecke/spin_finite.hpp"

using namespace spinhecke;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("basis sizes") {
  for (int n = 2; n <= 5; ++n) {
    auto spin = SpinAlgebra::make(n, ZMode::Minus, false);
    auto cov = SpinAlgebra::make(n, ZMode::Cover, false);
    CHECK(enumerate_basis(*spin).size() == static_cast<std::size_t>(factorial(n)));
    CHECK(even_basis(*spin).size() == static_cast<std::size_t>(factorial(n) / 2));
    CHECK(enumerate_basis(*cov).size() == static_cast<std::size_t>(2 * factorial(n)));
    CHECK(even_basis(*cov).size() == static_cast<std::size_t>(factorial(n)));
  }
}

TEST_CASE("spin(3) standard words") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, false);
  std::vector<std::string> got;
  for (const auto& w : enumerate_basis(*H)) got.push_back(H->word_text(w));
  CHECK(got == std::vector<std::string>{"", "R1", "R2", "R1*R2", "R2*R1", "R1*R2*R1"});
}

TEST_CASE("closure of the product") {
  for (int n = 2; n <= 4; ++n) CHECK(closure_check(SpinAlgebra::make(n, ZMode::Minus, false)).pass());
  for (int n = 2; n <= 3; ++n) CHECK(closure_check(SpinAlgebra::make(n, ZMode::Cover, false)).pass());
}

TEST_CASE("finite involutions") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, false);
  CHECK(apply_involution("sigma", parse_element(H, "R1")) == parse_element(H, "R2"));
  CHECK(apply_involution("s", parse_element(H, "R1*R2 + R1")) == parse_element(H, "R1*R2 - R1"));
  CHECK(apply_involution("bar", parse_element(H, "q*R1")) == parse_element(H, "q^-1*R1"));
  CHECK(apply_involution("tau", parse_element(H, "R1*R2")) == parse_element(H, "R2*R1"));
  CHECK_THROWS_AS(apply_involution("s_p", parse_element(H, "R1")), DomainError);
  for (int n = 2; n <= 4; ++n) {
    auto r = involution_suite(SpinAlgebra::make(n, ZMode::Minus, false), 7, 20);
    for (const auto& c : r) {
      CAPTURE(c.relation);
      CHECK(c.pass());
    }
  }
}

TEST_CASE("covering quotients") {
  auto C = SpinAlgebra::make(3, ZMode::Cover, false);
  auto x = parse_element(C, "z*Tt1*Tt2");
  CHECK(cover_quotient(x, -1).to_string() == "-R1*R2");
  CHECK(cover_quotient(x, 1).to_string() == "Tc1*Tc2");
  CHECK(cover_quotient(parse_element(C, "Tt1*Tt1"), -1) == parse_element(SpinAlgebra::make(3, ZMode::Minus, false), "R1*R1"));
  for (int n = 2; n <= 3; ++n) {
    auto r = cover_quotient_suite(n, false, 3, 20);
    for (const auto& c : r) {
      CAPTURE(c.relation);
      CHECK(c.pass());
    }
  }
}
