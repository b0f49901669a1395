#include "doctest.h"
#include "spinhecke/coeff.hpp"
#include "spinhecke/poly.hpp"

using namespace spinhecke;

TEST_CASE("gaussian rationals") {
  GaussRat a(1, 2), b(3, -1);
  CHECK((a / b) == GaussRat(mpq_class(1, 10), mpq_class(7, 10)));
  CHECK((a * a.inverse()).is_one());
  CHECK(GaussRat::i().to_string() == "i");
  CHECK((-GaussRat::i()).to_string() == "-i");
  CHECK(GaussRat(mpq_class(1, 2), 3).to_string() == "1/2 + 3*i");
  CHECK(GaussRat(-1, -2).to_string() == "-1 - 2*i");
  CHECK_THROWS_AS(GaussRat(0).inverse(), DomainError);
}

TEST_CASE("laurent arithmetic and printing") {
  Laurent e = Laurent::epsilon();
  CHECK(e.to_string() == "-q^-1 + q");
  CHECK((e * e).to_string() == "q^-2 - 2 + q^2");
  Laurent x = Laurent(GaussRat::rational(3, 2), -1) + Laurent(GaussRat::i(), 2);
  CHECK(x.to_string() == "3/2*q^-1 + i*q^2");
  CHECK(Laurent(GaussRat(1, 2), 1).to_string() == "(1 + 2*i)*q");
  CHECK((e - e).is_zero());
  CHECK(Laurent().to_string() == "0");
  CHECK((Laurent::q(2) + Laurent(3) * Laurent::q(-1)).bar() == Laurent::q(-2) + Laurent(3) * Laurent::q(1));
  CHECK(e.pow(3) == e * e * e);
  CHECK(Laurent::q(3).pow(-2) == Laurent::q(-6));
}

TEST_CASE("laurent evaluation") {
  CHECK(Laurent::epsilon().eval(GaussRat(2)) == GaussRat::rational(3, 2));
  CHECK(Laurent::epsilon().eval(GaussRat::i()) == GaussRat(0, 2));
  CHECK_THROWS_AS(Laurent::epsilon().eval(GaussRat(0)), DomainError);
}

TEST_CASE("laurent units and division") {
  CHECK(Laurent(GaussRat(2), 3).inverse() == Laurent(GaussRat::rational(1, 2), -3));
  CHECK_THROWS_AS(Laurent::epsilon().inverse(), DomainError);
  Laurent quo;
  CHECK((Laurent::q(2) - Laurent(1)).exact_divide(Laurent::q(1) - Laurent(1), quo));
  CHECK(quo == Laurent::q(1) + Laurent(1));
  CHECK_FALSE((Laurent::q(2) + Laurent(1)).exact_divide(Laurent::q(1) - Laurent(1), quo));
  CHECK(laurent_gcd(Laurent::q(2) - Laurent(1), (Laurent::q(1) - Laurent(1)) * Laurent::q(3)) ==
        Laurent::q(1) - Laurent(1));
}

TEST_CASE("univariate polynomials") {
  QPoly p = QPoly::x();
  QPoly f = p * p - QPoly(GaussRat(1));
  QPoly g = p - QPoly(GaussRat(1));
  CHECK(poly_gcd(f, g) == g);
  auto [qq, r] = f.divmod(g);
  CHECK(qq == p + QPoly(GaussRat(1)));
  CHECK(r.is_zero());
  CHECK(f.to_string("p") == "p^2 - 1");
  CHECK((p.scaled(GaussRat(2)) + QPoly(GaussRat::rational(1, 2))).monic().to_string("p") == "p + 1/4");
  CHECK(poly_gcd(f, p - QPoly(GaussRat(3))).degree() == 0);
}
