#include "spinhecke/isomorphisms.hpp"

#include <map>
#include <string>

#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/random.hpp"
#include "spinhecke/relations.hpp"

namespace spinhecke {

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

PhiMap phi_map(int n, bool affine) {
  auto hc = HCAlgebra::make(n, affine);
  auto ten = TensorAlgebra::make(n, affine);
  auto image = [ten](Gen g) {
    std::string i = idx(g.index), j = idx(g.index + 1);
    switch (g.kind) {
      case GenKind::T:
        return parse_element(ten, "-1/2*R" + i + "*(c" + i + " - c" + j + ") + 1/2*e*(1 - c" + i + "*c" + j + ")");
      case GenKind::X:
        return parse_element(ten, "p" + i + " - c" + i + "*q" + i);
      case GenKind::Xinv:
        return parse_element(ten, "p" + i + " + c" + i + "*q" + i);
      default:
        return generator(ten, g);
    }
  };
  return PhiMap(ten, image);
}

PsiMap psi_map(int n, bool affine) {
  auto hc = HCAlgebra::make(n, affine);
  auto image = [hc](Gen g) {
    std::string i = idx(g.index), j = idx(g.index + 1);
    switch (g.kind) {
      case GenKind::R:
        return parse_element(hc, "(c" + i + " - c" + j + ")*T" + i + " + e*c" + j);
      case GenKind::p:
        return parse_element(hc, "1/2*(X" + i + " + X" + i + "^-1)");
      case GenKind::q:
        return parse_element(hc, "1/2*(X" + i + " - X" + i + "^-1)*c" + i);
      default:
        return generator(hc, g);
    }
  };
  return PsiMap(hc, image);
}

TensorElement phi(const HCElement& x) {
  const auto& a = x.algebra();
  return phi_map(a.n(), a.affine())(x);
}

HCElement psi(const TensorElement& x) {
  const auto& a = x.algebra();
  return psi_map(a.n(), a.affine())(x);
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Gen> hc_generators(const HCAlgebra& a) {
  std::vector<Gen> out;
  for (int i = 1; i < a.n(); ++i) out.push_back(HCAlgebra::T(i));
  for (int i = 1; i <= a.n(); ++i) out.push_back(HCAlgebra::c(i));
  if (a.affine())
    for (int i = 1; i <= a.n(); ++i) {
      out.push_back(HCAlgebra::X(i));
      out.push_back(HCAlgebra::Xinv(i));
    }
  return out;
}

std::vector<Gen> tensor_generators(const TensorAlgebra& a) {
  std::vector<Gen> out;
  for (int i = 1; i < a.n(); ++i) out.push_back(a.right().R(i));
  for (int i = 1; i <= a.n(); ++i) out.push_back(TensorAlgebra::c(i));
  if (a.affine())
    for (int i = 1; i <= a.n(); ++i) {
      out.push_back(a.right().p(i));
      out.push_back(a.right().q(i));
    }
  return out;
}

// x c_j = (-1)^{|x|} c_j x for every j
bool supercommutes_with_clifford(const HCElement& x) {
  const auto& alg = x.algebra_ptr();
  int par = x.parity();
  if (par < 0) return false;
  for (int j = 1; j <= alg->n(); ++j) {
    auto c = generator(alg, HCAlgebra::c(j));
    auto rhs = c * x;
    if (!(x * c == (par ? -rhs : rhs))) return false;
  }
  return true;
}

}  // namespace

Report iso_suite(int n, bool affine, const IsoOptions& opt) {
  Report out;
  auto hc = HCAlgebra::make(n, affine);
  auto ten = TensorAlgebra::make(n, affine);
  auto f = phi_map(n, affine);
  auto g = psi_map(n, affine);

  append(out, check_relations_under(hc, f, defining_relations(affine ? AlgebraKind::HeckeCliffordAffine
                                                                     : AlgebraKind::HeckeClifford, n), "phi:"));
  append(out, check_relations_under(ten, g, defining_relations(affine ? AlgebraKind::TensorAffine
                                                                      : AlgebraKind::Tensor, n), "psi:"));

  auto t0 = Clock::now();
  bool sc = true;
  for (Gen x : tensor_generators(*ten))
    if (x.kind != GenKind::c) sc = sc && supercommutes_with_clifford(g.image(x));
  out.push_back(make_check("psi:images super-commute with C_n", sc, true, t0));

  if (n >= 2) {
    t0 = Clock::now();
    bool alt = true;
    for (int i = 1; i < n; ++i) {
      std::string a = idx(i), b = idx(i + 1);
      auto tinv = "(T" + a + " - e)";
      auto f1 = parse_element(hc, "c" + a + "*T" + a + " - c" + b + "*" + tinv);
      auto f2 = parse_element(hc, "T" + a + "*c" + b + " - " + tinv + "*c" + a);
      alt = alt && f1 == f2 && f1 == g.image(Gen{GenKind::R, i});
    }
    out.push_back(make_check("psi:alternate forms of R_i", alt, true, t0));
  }

  t0 = Clock::now();
  bool gens_hc = true, gens_ten = true;
  for (Gen x : hc_generators(*hc)) gens_hc = gens_hc && g(f.image(x)) == generator(hc, x);
  for (Gen x : tensor_generators(*ten)) gens_ten = gens_ten && f(g.image(x)) == generator(ten, x);
  out.push_back(make_check("psi(phi(x)) = x on generators", gens_hc, true, t0));
  out.push_back(make_check("phi(psi(y)) = y on generators", gens_ten, true, t0));

  std::mt19937_64 rng(opt.seed);
  RandomOptions ro;
  ro.max_exponent = affine ? opt.max_exponent : 0;

  t0 = Clock::now();
  bool rt_hc = true;
  for (int k = 0; k < opt.round_trips; ++k) {
    auto x = random_element(hc, rng, ro);
    rt_hc = rt_hc && g(f(x)) == x;
  }
  out.push_back(make_check("psi(phi(x)) = x on random elements", rt_hc, true, t0,
                           std::to_string(opt.round_trips) + " samples"));
  t0 = Clock::now();
  bool rt_ten = true;
  for (int k = 0; k < opt.round_trips; ++k) {
    auto y = random_element(ten, rng, ro);
    rt_ten = rt_ten && f(g(y)) == y;
  }
  out.push_back(make_check("phi(psi(y)) = y on random elements", rt_ten, true, t0,
                           std::to_string(opt.round_trips) + " samples"));

  t0 = Clock::now();
  bool mult_f = true;
  for (int k = 0; k < opt.pairs; ++k) {
    auto x = random_element(hc, rng, ro), y = random_element(hc, rng, ro);
    mult_f = mult_f && f(x * y) == f(x) * f(y);
  }
  out.push_back(make_check("phi multiplicative", mult_f, true, t0, std::to_string(opt.pairs) + " pairs"));
  t0 = Clock::now();
  bool mult_g = true;
  for (int k = 0; k < opt.pairs; ++k) {
    auto x = random_element(ten, rng, ro), y = random_element(ten, rng, ro);
    mult_g = mult_g && g(x * y) == g(x) * g(y);
  }
  out.push_back(make_check("psi multiplicative", mult_g, true, t0, std::to_string(opt.pairs) + " pairs"));

  t0 = Clock::now();
  bool par = true;
  for (int k = 0; k < opt.round_trips; ++k) {
    auto w = hc->random_word(rng, ro.max_exponent);
    auto img = f(HCElement::word(hc, w));
    par = par && img.parity() == hc->word_parity(w);
    auto v = ten->random_word(rng, ro.max_exponent);
    auto img2 = g(TensorElement::word(ten, v));
    par = par && img2.parity() == ten->word_parity(v);
  }
  out.push_back(make_check("parity preserved", par, true, t0));
  return out;
}

std::size_t phi_basis_rank(int n) {
  auto hc = HCAlgebra::make(n, false);
  auto f = phi_map(n, false);
  std::vector<TensorElement> images;
  std::map<TensorWord, std::size_t> column;
  for (const auto& w : hc->basis()) {
    images.push_back(f(HCElement::word(hc, w)));
    for (const auto& t : images.back().terms()) column.try_emplace(t.first, 0);
  }
  std::size_t k = 0;
  for (auto& [w, c] : column) c = k++;
  LRows rows;
  for (const auto& img : images) {
    std::vector<Laurent> r(column.size());
    for (const auto& [w, c] : img.terms()) r[column[w]] = c;
    rows.push_back(std::move(r));
  }
  return rank_exact(rows);
}

Check phi_rank_check(int n) {
  auto t0 = Clock::now();
  auto hc = HCAlgebra::make(n, false);
  std::size_t dim = hc->basis().size();
  std::size_t r = phi_basis_rank(n);
  return make_check("phi(basis) independent, n=" + std::to_string(n), r == dim, true, t0,
                    "rank " + std::to_string(r) + " of " + std::to_string(dim));
}

}  // namespace spinhecke
