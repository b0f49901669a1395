#include <doctest.h>

#include "spinhecke/expr.hpp"
#include "spinhecke/jm_cyclotomic.hpp"

using namespace spinhecke;

namespace {

void require_all(const Report& r) {
  for (const auto& c : r) {
    INFO(c.relation);
    CHECK(c.pass());
  }
}

QPoly P(const std::string& s) { return parse_a1(s).even; }

}  // namespace

TEST_CASE("jucys-murphy images") {
  auto jm = jm_images(3);
  CHECK(jm.p[0] == SpinElement::scalar(jm.alg, 1));
  CHECK(jm.q[0].is_zero());
  CHECK(jm.p[1].to_string() == "q^-2 - 1 + q^2");
  CHECK(jm.q[1].to_string() == "(-q^-1 + q)*R1");
  require_all(jm_formula_checks(jm));
}

TEST_CASE("jucys-murphy relations") {
  require_all(jm_relation_suite(2));
  require_all(jm_relation_suite(3));
}

TEST_CASE("hecke-clifford route") {
  require_all(jm_hc_crosscheck(2));
  require_all(jm_hc_crosscheck(3));
}

TEST_CASE("ideal arithmetic") {
  auto x = parse_a1("p1^2 + q1^2");
  CHECK(x.even == QPoly(GaussRat(1)));
  CHECK(x.odd.is_zero());
  auto y = parse_a1("(p1 - 1)*q1");
  CHECK(y.even.is_zero());
  CHECK(y.odd == P("p1 - 1"));
}

TEST_CASE("classify ideals") {
  auto a = classify_ideal({parse_a1("p1 - 1"), parse_a1("q1")});
  CHECK(a.form == IdealCase::MinusOne);
  CHECK(a.f == P("p1 - 1"));
  CHECK(a.g == P("1"));
  for (int n = 1; n <= 4; ++n) {
    unsigned long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long long>(i);
    CHECK(cyclotomic_dim(a, n) == fact);
  }
  auto b = classify_ideal({parse_a1("p1^2 - 3")});
  CHECK(b.form == IdealCase::F);
  CHECK(b.f == b.g);
  CHECK(cyclotomic_dim(b, 2) == 32);
  auto c = classify_ideal({parse_a1("q1")});
  CHECK(c.form == IdealCase::GQ);
  CHECK(c.g == P("1"));
  CHECK(c.f == P("p1^2 - 1"));
  CHECK(cyclotomic_dim(c, 1) == 2);
  auto d = classify_ideal({parse_a1("(p1 + 1)*(p1 - 2)"), parse_a1("(p1 - 2)*q1")});
  CHECK(d.form == IdealCase::PlusOne);
  CHECK(d.g == P("p1 - 2"));
}

TEST_CASE("ideal errors") {
  CHECK_THROWS_AS(classify_ideal({}), DomainError);
  CHECK_THROWS_AS(classify_ideal({parse_a1("p1 + q1")}), DomainError);
  // deg f = deg g + 1 with g not dividing f
  CHECK_THROWS_AS(ideal_from_fg(P("p1^2 - 1"), P("p1 - 3")), DomainError);
}

TEST_CASE("theorem 6.3 shapes") {
  auto r1 = theorem63_map("X1 - 1");
  CHECK(r1.case_number == 4);
  CHECK(r1.shape == IdealCase::MinusOne);
  CHECK(r1.poly == LPoly(Laurent(1)));
  auto r2 = theorem63_map("X1^2 + 3*X1 + 1");
  CHECK(r2.case_number == 1);
  CHECK(r2.poly.to_string("p1") == "p1 + 3/2");
  auto r3 = theorem63_map("X1^2 - 1");
  CHECK(r3.case_number == 2);
  CHECK(r3.shape == IdealCase::GQ);
  CHECK(r3.odd == LPoly(Laurent(-2)));
  auto r4 = theorem63_map("X1 + 1");
  CHECK(r4.case_number == 3);
  CHECK(r4.shape == IdealCase::PlusOne);
  for (const char* F : {"X1^3 + 2*X1^2 + 2*X1 + 1", "X1^3 + 2*X1^2 - 2*X1 - 1", "X1^4 + q*X1^3 + X1^2 + q*X1 + 1",
                        "X1^4 - 5*X1^3 + 5*X1 - 1"}) {
    INFO(F);
    auto r = theorem63_map(F, 2);
    CHECK(r.degrees_ok);
  }
  CHECK_THROWS_AS(theorem63_map("X1^2 + 2*X1 + 3"), DomainError);
  CHECK_THROWS_AS(theorem63_map("2*X1 - 2"), DomainError);
}
