#include "doctest.h"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/spin.hpp"
#include "spinhecke/tensor.hpp"

using namespace spinhecke;

namespace {

Laurent eps() { return Laurent::epsilon(); }

template <class A>
Element<A> w(const std::shared_ptr<const A>& alg, std::vector<Gen> letters) {
  return word_product(alg, letters);
}

template <class A>
Element<A> one(const std::shared_ptr<const A>& alg) {
  return Element<A>::scalar(alg, Laurent(1));
}

}  // namespace

TEST_CASE("staircase relations in spin(4)") {
  auto H = SpinAlgebra::make(4, ZMode::Minus, false);
  auto R = [&](int i) { return generator(H, H->R(i)); };
  Laurent e2 = eps() * eps();
  for (int i = 1; i <= 3; ++i) CHECK(R(i) * R(i) == (-(e2 + Laurent(2))) * one(H));
  CHECK(R(1) * R(3) == -(R(3) * R(1)));
  for (int i = 1; i <= 2; ++i)
    CHECK(R(i) * R(i + 1) * R(i) - R(i + 1) * R(i) * R(i + 1) == e2 * (R(i + 1) - R(i)));
  CHECK(H->basis().size() == 24);
}

TEST_CASE("z modes share the braid relation") {
  for (ZMode m : {ZMode::Plus, ZMode::Cover}) {
    auto H = SpinAlgebra::make(4, m, false);
    auto T = [&](int i) { return generator(H, H->R(i)); };
    Laurent e2 = eps() * eps();
    for (int i = 1; i <= 2; ++i)
      CHECK(T(i) * T(i + 1) * T(i) - T(i + 1) * T(i) * T(i + 1) == e2 * (T(i + 1) - T(i)));
  }
  auto C = SpinAlgebra::make(3, ZMode::Cover, false);
  CHECK(C->basis().size() == 12);
  auto z = generator(C, C->z());
  auto T1 = generator(C, C->R(1));
  CHECK(z * z == one(C));
  CHECK(T1 * T1 == (Laurent::q(2) + Laurent(1) + Laurent::q(-2)) * z + one(C));
}

TEST_CASE("hecke-clifford relations") {
  auto H = HCAlgebra::make(3, false);
  auto T = [&](int i) { return generator(H, HCAlgebra::T(i)); };
  auto c = [&](int i) { return generator(H, HCAlgebra::c(i)); };
  CHECK(T(1) * T(1) == one(H) + eps() * T(1));
  CHECK(T(1) * T(2) * T(1) == T(2) * T(1) * T(2));
  CHECK(T(1) * c(1) == c(2) * T(1));
  CHECK(T(1) * c(2) == c(1) * T(1) - eps() * (c(1) - c(2)));
  CHECK(T(1) * c(3) == c(3) * T(1));
  CHECK(c(2) * c(1) == -(c(1) * c(2)));
  CHECK(c(2) * c(2) == one(H));
  CHECK(H->basis().size() == 48);
}

TEST_CASE("affine hecke-clifford defining relation") {
  auto H = HCAlgebra::make(3, true);
  auto T = [&](int i) { return generator(H, HCAlgebra::T(i)); };
  auto c = [&](int i) { return generator(H, HCAlgebra::c(i)); };
  auto X = [&](int i) { return generator(H, HCAlgebra::X(i)); };
  auto Xi = [&](int i) { return generator(H, HCAlgebra::Xinv(i)); };
  for (int i = 1; i <= 2; ++i) {
    CHECK((T(i) + eps() * c(i) * c(i + 1)) * X(i) * T(i) == X(i + 1));
    CHECK(X(i) * Xi(i) == one(H));
    CHECK(Xi(i) * X(i) == one(H));
  }
  CHECK(X(1) * c(1) == c(1) * Xi(1));
  CHECK(X(1) * c(2) == c(2) * X(1));
  CHECK(T(1) * X(3) == X(3) * T(1));
}

TEST_CASE("affine hecke without clifford generators") {
  auto H = HCAlgebra::make(2, true, false);
  auto T = generator(H, HCAlgebra::T(1));
  auto X1 = generator(H, HCAlgebra::X(1));
  auto X2 = generator(H, HCAlgebra::X(2));
  CHECK(T * X1 * T == X2);
}

TEST_CASE("spin affine commutation") {
  auto H = SpinAlgebra::make(3, ZMode::Minus, true);
  auto g = [&](Gen x) { return generator(H, x); };
  auto R1 = g(H->R(1));
  auto p1 = g(H->p(1)), p2 = g(H->p(2)), p3 = g(H->p(3));
  auto q1 = g(H->q(1)), q2 = g(H->q(2)), q3 = g(H->q(3));
  CHECK(R1 * p1 == p2 * R1 + eps() * (q1 - q2));
  CHECK(R1 * q1 == -(q2 * R1) - eps() * (p1 + p2));
  CHECK(R1 * p2 == p1 * R1 - eps() * (q1 - q2));
  CHECK(R1 * q2 == -(q1 * R1) - eps() * (p1 + p2));
  CHECK(R1 * p3 == p3 * R1);
  CHECK(R1 * q3 == -(q3 * R1));
  CHECK(q2 * q1 == -(q1 * q2));
  CHECK(p1 * p1 + q1 * q1 == one(H));
}

TEST_CASE("tensor sign rule") {
  auto A = TensorAlgebra::make(2, false);
  auto c1 = generator(A, TensorAlgebra::c(1));
  auto R1 = generator(A, A->right().R(1));
  CHECK(R1 * c1 == -(c1 * R1));
  CHECK(c1 * c1 == one(A));
  CHECK(A->basis().size() == 8);
}

TEST_CASE("budget") {
  auto H = SpinAlgebra::make(2, ZMode::Minus, true);
  long old = set_rewrite_budget(3);
  auto big = generator(H, H->R(1));
  CHECK_THROWS_AS(word_product(H, {H->R(1), H->p(1), H->p(1), H->p(1), H->q(1), H->q(2), H->p(2)}), BudgetExceeded);
  set_rewrite_budget(old);
}
