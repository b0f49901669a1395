#include <doctest.h>

#include "spinhecke/expr.hpp"
#include "spinhecke/representations.hpp"

using namespace spinhecke;

TEST_CASE("clifford matrices") {
  for (int n = 1; n <= 6; ++n) {
    auto rep = clifford_matrices(n);
    CHECK(rep.dim == (std::size_t{1} << ((n + 1) / 2)));
    CHECK(clifford_relations_hold(rep));
  }
}

TEST_CASE("gamma identities") {
  auto g = pi_q(3);
  auto id = LMatrix::identity(4);
  Laurent e = Laurent::epsilon();
  CHECK(g[0] * g[0] == (Laurent(-2) - e * e) * id);
  CHECK(g[0] * g[1] * g[0] == Laurent(2) * g[0] + (Laurent::q(2) + Laurent::q(-2)) * g[1]);
  CHECK(gamma_span_rank(4) == 3);
}

TEST_CASE("act") {
  auto alg = SpinAlgebra::make(3, ZMode::Minus, false);
  CHECK(act(SpinElement::scalar(alg, 1)) == LMatrix::identity(4));
  CHECK(act(parse_element(alg, "R1*R1")) == (Laurent(-2) - Laurent::epsilon() * Laurent::epsilon()) * LMatrix::identity(4));
  CHECK(act(parse_element(alg, "R2*R1*R2 - e^2*R1")) == act_expression(3, "R2*R1*R2 - e^2*R1"));
}

TEST_CASE("module suite") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : spin_module_suite(n, 7, 10, true)) {
      INFO(c.relation);
      CHECK(c.pass());
    }
}
