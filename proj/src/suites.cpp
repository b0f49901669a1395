#include "spinhecke/suites.hpp"

#include <set>

#include "spinhecke/expr.hpp"
#include "spinhecke/isomorphisms.hpp"
#include "spinhecke/jm_cyclotomic.hpp"
#include "spinhecke/localization.hpp"
#include "spinhecke/random.hpp"
#include "spinhecke/relations.hpp"
#include "spinhecke/representations.hpp"
#include "spinhecke/spin_affine.hpp"
#include "spinhecke/spin_finite.hpp"

namespace spinhecke {

namespace {

using Clock = std::chrono::steady_clock;

std::string tag(AlgebraKind k, int n) { return algebra_kind_name(k) + "(" + std::to_string(n) + ")"; }

template <class A>
Check closure_of(const std::shared_ptr<const A>& alg, const std::string& name) {
  auto t0 = Clock::now();
  auto basis = alg->basis();
  std::set<typename A::Word> inside(basis.begin(), basis.end());
  bool ok = true;
  for (const auto& a : basis) {
    auto ea = Element<A>::word(alg, a);
    for (const auto& b : basis) {
      auto prod = ea * Element<A>::word(alg, b);
      for (const auto& t : prod.terms()) ok = ok && inside.count(t.first);
    }
  }
  return make_check("closure:" + name, ok, true, t0, std::to_string(basis.size() * basis.size()) + " products");
}

template <class A>
Report associativity_of(const std::shared_ptr<const A>& alg, const std::string& name, unsigned seed, int triples) {
  Report out;
  std::mt19937_64 rng(seed);
  RandomOptions opt;
  auto t0 = Clock::now();
  bool assoc = true, idem = true;
  for (int k = 0; k < triples; ++k) {
    auto x = random_element(alg, rng, opt), y = random_element(alg, rng, opt), z = random_element(alg, rng, opt);
    auto lhs = (x * y) * z;
    auto rhs = x * (y * z);
    assoc = assoc && lhs == rhs;
    idem = idem && renormalize(lhs) == lhs;
  }
  out.push_back(make_check("associativity:" + name, assoc, true, t0, std::to_string(triples) + " triples"));
  out.push_back(make_check("normal form idempotent:" + name, idem, true, t0));
  return out;
}

template <class A>
bool fixed(const Element<A>& x) {
  return renormalize(x) == x;
}

}  // namespace

std::size_t algebra_dimension(AlgebraKind k, int n) {
  if (is_affine(k)) throw DomainError("infinite_dimensional", algebra_kind_name(k) + " is infinite dimensional");
  return std::visit([](const auto& alg) { return alg->basis().size(); }, make_algebra(k, n));
}

std::size_t even_dimension(AlgebraKind k, int n) {
  if (k != AlgebraKind::Spin && k != AlgebraKind::Covering && k != AlgebraKind::HeckeT)
    throw DomainError("unsupported_algebra", "even parts are counted for the spin family");
  auto alg = std::get<std::shared_ptr<const SpinAlgebra>>(make_algebra(k, n));
  return even_basis(*alg).size();
}

Report dimension_suite(int n) {
  Report out;
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  struct Row {
    std::string name;
    std::size_t got, want;
  };
  auto t0 = Clock::now();
  std::vector<Row> rows = {
      {"dim spin", algebra_dimension(AlgebraKind::Spin, n), fact},
      {"dim covering", algebra_dimension(AlgebraKind::Covering, n), 2 * fact},
      {"dim even spin", even_dimension(AlgebraKind::Spin, n), n >= 2 ? fact / 2 : 1},
      {"dim even covering", even_dimension(AlgebraKind::Covering, n), n >= 2 ? fact : 2},
      {"dim hecke-clifford", algebra_dimension(AlgebraKind::HeckeClifford, n), fact << n},
  };
  for (const auto& r : rows)
    out.push_back(make_check(r.name + ", n=" + std::to_string(n), r.got == r.want, true, t0,
                             std::to_string(r.got) + " (expected " + std::to_string(r.want) + ")"));
  return out;
}

Check closure_suite(AlgebraKind k, int n) {
  return std::visit([&](const auto& alg) { return closure_of(alg, tag(k, n)); }, make_algebra(k, n));
}

Report relations_suite(AlgebraKind k, int n) {
  auto rels = defining_relations(k, n);
  return std::visit([&](const auto& alg) { return check_relations_in(alg, rels); }, make_algebra(k, n));
}

Report associativity_suite(AlgebraKind k, int n, unsigned seed, int triples) {
  return std::visit([&](const auto& alg) { return associativity_of(alg, tag(k, n), seed, triples); },
                    make_algebra(k, n));
}

Report idempotence_suite(int n) {
  Report out;
  auto t0 = Clock::now();
  auto jm = jm_images(n);
  bool ok = true;
  for (const auto& x : jm.p) ok = ok && fixed(x);
  for (const auto& x : jm.q) ok = ok && fixed(x);
  out.push_back(make_check("normal form idempotent:jucys-murphy", ok, true, t0));

  t0 = Clock::now();
  ok = true;
  auto f = phi_map(n, false);
  auto g = psi_map(n, false);
  auto hc = HCAlgebra::make(n, false);
  for (const auto& w : hc->basis()) {
    auto img = f(HCElement::word(hc, w));
    ok = ok && fixed(img) && fixed(g(img));
  }
  out.push_back(make_check("normal form idempotent:phi and psi images", ok, true, t0));

  if (n >= 2) {
    t0 = Clock::now();
    auto alg = SpinAlgebra::make(n, ZMode::Minus, true);
    ok = fixed(delta(alg));
    for (int i = 1; i < n; ++i) {
      auto gi = gimel(alg, i);
      ok = ok && fixed(gi.num()) && fixed((gi * gi).num());
    }
    out.push_back(make_check("normal form idempotent:intertwiners", ok, true, t0));
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"dims",        "closure",      "relations",   "involutions", "cover-quotient", "finite-iso",
          "affine-iso",  "jm",           "spin-module", "center",      "intertwiners",   "localization",
          "cyclotomic",  "associativity", "engine"};
}

Report run_suite(const std::string& name, const SuiteArgs& a) {
  int n = a.n;
  if (n < 1 || n > kMaxRank) throw DomainError("invalid_argument", "n out of range");
  auto need_n2 = [&] {
    if (n < 2) throw DomainError("invalid_argument", name + " needs n >= 2");
  };
  if (name == "dims") return dimension_suite(n);
  if (name == "closure") {
    if (a.algebra) return {closure_suite(*a.algebra, n)};
    return {closure_suite(AlgebraKind::Spin, n), closure_suite(AlgebraKind::Covering, n),
            closure_suite(AlgebraKind::HeckeClifford, n)};
  }
  if (name == "relations") return relations_suite(a.algebra.value_or(AlgebraKind::Spin), n);
  if (name == "involutions") {
    bool affine = a.algebra && is_affine(*a.algebra);
    return involution_suite(SpinAlgebra::make(n, ZMode::Minus, affine), a.seed, 20);
  }
  if (name == "cover-quotient") return cover_quotient_suite(n, a.algebra && is_affine(*a.algebra), a.seed, 20);
  if (name == "finite-iso" || name == "affine-iso") {
    IsoOptions opt;
    opt.seed = a.seed;
    Report r = iso_suite(n, name == "affine-iso", opt);
    if (name == "finite-iso") r.push_back(phi_rank_check(n));
    return r;
  }
  if (name == "jm") {
    need_n2();
    Report r = jm_formula_checks(jm_images(n));
    append(r, jm_relation_suite(n));
    append(r, jm_hc_crosscheck(n));
    return r;
  }
  if (name == "spin-module") {
    need_n2();
    return spin_module_suite(n, a.seed, 50, n <= 4);
  }
  if (name == "center") {
    auto alg = SpinAlgebra::make(n, ZMode::Minus, true);
    Report r = center_suite(alg);
    r.push_back(odd_center_check(alg));
    return r;
  }
  if (name == "intertwiners") {
    need_n2();
    IntertwinerOptions opt;
    opt.braid = n <= 3;
    return intertwiner_suite(SpinAlgebra::make(n, ZMode::Minus, true), opt);
  }
  if (name == "localization") {
    need_n2();
    auto alg = SpinAlgebra::make(n, ZMode::Minus, true);
    Report r = localization_suite(alg);
    if (n <= 3) r.push_back(delta_regularity_check(alg, 4));
    return r;
  }
  if (name == "cyclotomic") {
    Report r;
    struct Sample {
      const char* F;
      int case_number;
    };
    for (Sample s : {Sample{"X1^2 + 3*X1 + 1", 1}, Sample{"X1^2 - 1", 2}, Sample{"X1^3 + 2*X1^2 + 2*X1 + 1", 3},
                     Sample{"X1^3 + 2*X1^2 - 2*X1 - 1", 4}, Sample{"X1 - 1", 4}, Sample{"X1 + 1", 3}}) {
      auto t0 = Clock::now();
      auto img = theorem63_map(s.F, n);
      r.push_back(make_check(std::string("theorem63:") + s.F, img.case_number == s.case_number && img.degrees_ok, true,
                             t0, ideal_case_text(img.shape) + " with " + img.poly.to_string("p1")));
    }
    auto t0 = Clock::now();
    auto ideal = classify_ideal({parse_a1("p1 - 1"), parse_a1("q1")});
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    r.push_back(make_check("dim for <p1 - 1, q1> = n!", cyclotomic_dim(ideal, n) == fact, true, t0,
                           std::to_string(cyclotomic_dim(ideal, n))));
    return r;
  }
  if (name == "associativity") {
    if (a.algebra) return associativity_suite(*a.algebra, n, a.seed, 200);
    Report r;
    for (const auto& k : algebra_kind_names()) append(r, associativity_suite(parse_algebra_kind(k), n, a.seed, 200));
    return r;
  }
  if (name == "engine") {
    Report r;
    for (const auto& k : algebra_kind_names()) append(r, associativity_suite(parse_algebra_kind(k), n, a.seed, 200));
    append(r, idempotence_suite(n));
    if (n >= 2 && n <= 3) r.push_back(delta_regularity_check(SpinAlgebra::make(n, ZMode::Minus, true), 4));
    return r;
  }
  throw DomainError("unknown_suite", "unknown suite '" + name + "'");
}

}  // namespace spinhecke
