#include "spinhecke/spin_finite.hpp"

#include <algorithm>
#include <set>

#include "spinhecke/algebras.hpp"
#include "spinhecke/random.hpp"
#include "spinhecke/relations.hpp"

namespace spinhecke {

std::vector<SpinWord> enumerate_basis(const SpinAlgebra& alg) { return alg.basis(); }

std::vector<SpinWord> even_basis(const SpinAlgebra& alg) {
  std::vector<SpinWord> out;
  for (const auto& w : alg.basis())
    if (w.length() % 2 == 0) out.push_back(w);
  return out;
}

std::vector<std::string> involution_names(bool affine) {
  if (affine) return {"sigma+", "sigma-", "s_p", "s_q", "bar_p", "bar_q", "tau"};
  return {"sigma", "s", "bar", "tau"};
}

namespace {

AlgebraKind kind_of(const SpinAlgebra& a) {
  switch (a.mode()) {
    case ZMode::Minus:
      return a.affine() ? AlgebraKind::SpinAffine : AlgebraKind::Spin;
    case ZMode::Plus:
      return a.affine() ? AlgebraKind::HeckePQ : AlgebraKind::HeckeT;
    case ZMode::Cover:
      break;
  }
  return a.affine() ? AlgebraKind::CoveringAffine : AlgebraKind::Covering;
}

struct Signs {
  int stair = 1;
  int p = 1;
  int q = 1;
  bool flip = false;
  bool anti = false;
  bool bar = false;
};

Signs involution_signs(const std::string& name) {
  if (name == "sigma" || name == "sigma+") return {1, 1, 1, true, false, false};
  if (name == "sigma-") return {1, -1, -1, true, false, false};
  if (name == "s") return {-1, 1, 1, false, false, false};
  if (name == "s_p") return {-1, -1, 1, false, false, false};
  if (name == "s_q") return {-1, 1, -1, false, false, false};
  if (name == "bar") return {1, 1, 1, false, false, true};
  if (name == "bar_p") return {1, -1, 1, false, false, true};
  if (name == "bar_q") return {1, 1, -1, false, false, true};
  if (name == "tau") return {-1, 1, -1, false, true, false};
  throw DomainError("unknown_involution", "unknown involution '" + name + "'");
}

}  // namespace

SpinMap involution_map(const std::shared_ptr<const SpinAlgebra>& alg, const std::string& name) {
  if (alg->mode() != ZMode::Minus)
    throw DomainError("unsupported_algebra", "involutions are defined on the spin algebras");
  auto names = involution_names(alg->affine());
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw DomainError("unknown_involution", "'" + name + "' is not an involution of " + alg->name());
  Signs s = involution_signs(name);
  int n = alg->n();
  auto image = [alg, s, n](Gen g) {
    int sign = 1;
    Gen h = g;
    if (g.kind == alg->stair_kind()) {
      sign = s.stair;
      if (s.flip) h.index = n - g.index;
    } else if (g.kind == alg->even_kind()) {
      sign = s.p;
      if (s.flip) h.index = n + 1 - g.index;
    } else if (g.kind == alg->odd_kind()) {
      sign = s.q;
      if (s.flip) h.index = n + 1 - g.index;
    }
    return Laurent(sign) * generator(alg, h);
  };
  return SpinMap(alg, image, s.anti, s.bar);
}

SpinElement apply_involution(const std::string& name, const SpinElement& x) {
  return involution_map(x.algebra_ptr(), name)(x);
}

SpinMap cover_quotient_map(const std::shared_ptr<const SpinAlgebra>& covering, int sign) {
  if (covering->mode() != ZMode::Cover)
    throw DomainError("unsupported_algebra", "quotient maps start from a covering algebra");
  if (sign != 1 && sign != -1) throw DomainError("invalid_argument", "z must be sent to 1 or -1");
  auto target = SpinAlgebra::make(covering->n(), sign < 0 ? ZMode::Minus : ZMode::Plus, covering->affine());
  auto image = [covering, target, sign](Gen g) {
    if (g.kind == GenKind::z) return SpinElement::scalar(target, Laurent(sign));
    Gen h = g;
    if (g.kind == covering->stair_kind()) h.kind = target->stair_kind();
    else if (g.kind == covering->even_kind()) h.kind = target->even_kind();
    else h.kind = target->odd_kind();
    return generator(target, h);
  };
  return SpinMap(target, image);
}

SpinElement cover_quotient(const SpinElement& x, int sign) { return cover_quotient_map(x.algebra_ptr(), sign)(x); }

Check closure_check(const std::shared_ptr<const SpinAlgebra>& alg) {
  auto t0 = std::chrono::steady_clock::now();
  auto basis = alg->basis();
  std::set<SpinWord> inside(basis.begin(), basis.end());
  bool ok = true;
  for (const auto& a : basis) {
    auto ea = SpinElement::word(alg, a);
    for (const auto& b : basis) {
      auto prod = ea * SpinElement::word(alg, b);
      for (const auto& t : prod.terms()) ok = ok && inside.count(t.first);
    }
  }
  return make_check("closure:" + alg->name(), ok, true, t0,
                    std::to_string(basis.size() * basis.size()) + " products");
}

Report involution_suite(const std::shared_ptr<const SpinAlgebra>& alg, unsigned seed, int samples) {
  Report out;
  auto rels = defining_relations(kind_of(*alg), alg->n());
  std::mt19937_64 rng(seed);
  for (const auto& name : involution_names(alg->affine())) {
    auto f = involution_map(alg, name);
    append(out, check_relations_under(alg, f, rels, name + ":"));
    auto t0 = std::chrono::steady_clock::now();
    bool invol = true, mult = true;
    for (int k = 0; k < samples; ++k) {
      auto x = random_element(alg, rng);
      auto y = random_element(alg, rng);
      invol = invol && f(f(x)) == x;
      auto fxy = f(x * y);
      mult = mult && (f.anti() ? fxy == f(y) * f(x) : fxy == f(x) * f(y));
    }
    out.push_back(make_check(name + ":involutive", invol, true, t0));
    out.push_back(make_check(name + (f.anti() ? ":anti-multiplicative" : ":multiplicative"), mult, true, t0));
  }
  return out;
}

Report cover_quotient_suite(int n, bool affine, unsigned seed, int samples) {
  Report out;
  auto cov = SpinAlgebra::make(n, ZMode::Cover, affine);
  auto rels = defining_relations(affine ? AlgebraKind::CoveringAffine : AlgebraKind::Covering, n);
  std::mt19937_64 rng(seed);
  for (int sign : {-1, 1}) {
    auto f = cover_quotient_map(cov, sign);
    std::string tag = sign < 0 ? "z=-1:" : "z=1:";
    append(out, check_relations_under(cov, f, rels, tag));
    auto t0 = std::chrono::steady_clock::now();
    bool mult = true;
    for (int k = 0; k < samples; ++k) {
      auto x = random_element(cov, rng);
      auto y = random_element(cov, rng);
      mult = mult && f(x * y) == f(x) * f(y);
    }
    out.push_back(make_check(tag + "homomorphism", mult, true, t0));
  }
  return out;
}

}  // namespace spinhecke
