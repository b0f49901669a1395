#include "spinhecke/spin_affine.hpp"

#include <bit>

#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/relations.hpp"

namespace spinhecke {

namespace {

void require_affine(const SpinAlgebra& a) {
  if (!a.affine()) throw DomainError("unsupported_algebra", a.name() + " is not affine");
}

std::vector<Gen> all_generators(const SpinAlgebra& a) {
  std::vector<Gen> out;
  for (int i = 1; i <= a.n() - 1; ++i) out.push_back(a.R(i));
  if (a.affine()) {
    for (int i = 1; i <= a.n(); ++i) {
      out.push_back(a.p(i));
      out.push_back(a.q(i));
    }
  }
  if (a.mode() == ZMode::Cover) out.push_back(a.z());
  return out;
}

}  // namespace

std::pair<SpinElement, SpinElement> recursion_images(const std::shared_ptr<const SpinAlgebra>& alg, int i) {
  require_affine(*alg);
  if (i < 1 || i > alg->n() - 1) throw DomainError("index_out_of_range", "recursion index out of range");
  AlgebraKind k = alg->mode() == ZMode::Minus  ? AlgebraKind::SpinAffine
                  : alg->mode() == ZMode::Plus ? AlgebraKind::HeckePQ
                                               : AlgebraKind::CoveringAffine;
  std::string pn = "p-recursion(" + std::to_string(i) + ")", qn = "q-recursion(" + std::to_string(i) + ")";
  SpinElement pr, qr;
  for (const auto& r : defining_relations(k, alg->n())) {
    if (r.name == pn) pr = parse_element(alg, r.rhs);
    if (r.name == qn) qr = parse_element(alg, r.rhs);
  }
  return {pr, qr};
}

SpinElement elementary_symmetric(const std::shared_ptr<const SpinAlgebra>& alg, int k) {
  require_affine(*alg);
  int n = alg->n();
  SpinElement out(alg);
  for (unsigned m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != k) continue;
    SpinWord w{};
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) w.pexp[static_cast<std::size_t>(i)] = 1;
    out += SpinElement::word(alg, w);
  }
  return out;
}

bool is_central(const SpinElement& x) {
  const auto& alg = x.algebra_ptr();
  for (Gen g : all_generators(*alg)) {
    auto e = generator(alg, g);
    if (!(x * e == e * x)) return false;
  }
  return true;
}

Report center_suite(const std::shared_ptr<const SpinAlgebra>& alg) {
  require_affine(*alg);
  Report out;
  for (int k = 1; k <= alg->n(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    out.push_back(make_check("e" + std::to_string(k) + " central", is_central(elementary_symmetric(alg, k)), true, t0));
  }
  if (alg->n() >= 2) {
    auto t0 = std::chrono::steady_clock::now();
    out.push_back(make_check("p1 central (control)", is_central(generator(alg, alg->p(1))), false, t0));
  }
  return out;
}

Check odd_center_check(const std::shared_ptr<const SpinAlgebra>& alg) {
  require_affine(*alg);
  auto t0 = std::chrono::steady_clock::now();
  SpinWord w{};
  w.qmask = static_cast<std::uint16_t>((1u << alg->n()) - 1);
  bool central = is_central(SpinElement::word(alg, w));
  std::string name = "q1";
  for (int i = 2; i <= alg->n(); ++i) name += "*q" + std::to_string(i);
  return make_check(name + " central", central, alg->n() % 2 == 1, t0);
}

}  // namespace spinhecke
