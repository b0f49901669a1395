#include "doctest.h"
#include "spinhecke/relations.hpp"

using namespace spinhecke;

namespace {

void check_family(AlgebraKind k, int n) {
  auto alg = make_algebra(k, n);
  auto rels = defining_relations(k, n);
  Report r = std::visit([&](const auto& a) { return check_relations_in(a, rels); }, alg);
  CAPTURE(algebra_kind_name(k));
  CAPTURE(n);
  for (const auto& c : r) {
    CAPTURE(c.relation);
    CHECK(c.pass());
  }
  CHECK(!r.empty());
}

}  // namespace

TEST_CASE("every family satisfies its defining relations") {
  for (const auto& name : algebra_kind_names()) {
    AlgebraKind k = parse_algebra_kind(name);
    for (int n = 1; n <= (is_affine(k) ? 3 : 4); ++n) {
      if (n == 1 && !is_affine(k)) continue;
      check_family(k, n);
    }
  }
}
