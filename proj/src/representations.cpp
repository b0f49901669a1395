#include "spinhecke/representations.hpp"

#include <bit>

#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/random.hpp"
#include "spinhecke/relations.hpp"

namespace spinhecke {

namespace {

using Clock = std::chrono::steady_clock;

LMatrix pauli(char which) {
  LMatrix m(2, 2);
  switch (which) {
    case 'x':
      m.at(0, 1) = Laurent(1);
      m.at(1, 0) = Laurent(1);
      break;
    case 'y':
      m.at(0, 1) = Laurent(-GaussRat::i());
      m.at(1, 0) = Laurent(GaussRat::i());
      break;
    case 'z':
      m.at(0, 0) = Laurent(1);
      m.at(1, 1) = Laurent(-1);
      break;
    default:
      m = LMatrix::identity(2);
  }
  return m;
}

LRows as_rows(const std::vector<LMatrix>& ms) {
  LRows rows;
  for (const auto& m : ms) rows.push_back(m.entries());
  return rows;
}

}  // namespace

MatRep clifford_matrices(int n) {
  if (n < 1) throw DomainError("invalid_argument", "n must be positive");
  int m = (n + 1) / 2;
  MatRep rep;
  rep.n = n;
  rep.dim = std::size_t{1} << m;
  for (int i = 1; i <= n; ++i) {
    int site = (i - 1) / 2;
    LMatrix acc = LMatrix::identity(1);
    for (int s = 0; s < m; ++s) {
      char f = s < site ? 'z' : s == site ? (i % 2 == 1 ? 'x' : 'y') : 'i';
      acc = acc.kron(pauli(f));
    }
    rep.mats.push_back(acc);
  }
  for (std::size_t v = 0; v < rep.dim; ++v) rep.parity.push_back(std::popcount(v) % 2);
  return rep;
}

bool clifford_relations_hold(const MatRep& rep) {
  auto id = LMatrix::identity(rep.dim);
  for (std::size_t i = 0; i < rep.mats.size(); ++i) {
    if (!(rep.mats[i] * rep.mats[i] == id)) return false;
    for (std::size_t j = i + 1; j < rep.mats.size(); ++j)
      if (!(rep.mats[i] * rep.mats[j] + rep.mats[j] * rep.mats[i]).is_zero()) return false;
    for (std::size_t r = 0; r < rep.dim; ++r)
      for (std::size_t c = 0; c < rep.dim; ++c)
        if (!rep.mats[i].at(r, c).is_zero() && rep.parity[r] == rep.parity[c]) return false;
  }
  return true;
}

std::vector<LMatrix> pi_q(int n) {
  if (n < 2) throw DomainError("invalid_argument", "n must be at least 2");
  auto rep = clifford_matrices(n);
  std::vector<LMatrix> out;
  Laurent iq(GaussRat::i(), 1), iqinv(-GaussRat::i(), -1);
  for (int i = 1; i < n; ++i)
    out.push_back(iq * rep.mats[static_cast<std::size_t>(i - 1)] + iqinv * rep.mats[static_cast<std::size_t>(i)]);
  return out;
}

LMatrix act(const SpinElement& x) {
  const auto& alg = x.algebra();
  if (alg.affine() || alg.mode() != ZMode::Minus)
    throw DomainError("unsupported_algebra", "the basic spin module is a module for the finite spin Hecke algebra");
  int n = alg.n();
  if (n < 2) return x.coeff(alg.identity_word()) * LMatrix::identity(clifford_matrices(std::max(n, 1)).dim);
  auto g = pi_q(n);
  std::size_t dim = g[0].rows();
  LMatrix out(dim, dim);
  for (const auto& [w, c] : x.terms()) {
    LMatrix m = LMatrix::scalar(dim, c);
    for (Gen h : alg.letters(w)) m = m * g[static_cast<std::size_t>(h.index - 1)];
    out += m;
  }
  return out;
}

namespace {

EvalContext<LMatrix> matrix_context(int n, const std::vector<LMatrix>& g) {
  std::size_t dim = g.empty() ? 2 : g[0].rows();
  EvalContext<LMatrix> ctx;
  ctx.scalar = [dim](const Laurent& c) { return LMatrix::scalar(dim, c); };
  ctx.gen = [n, &g](const GenRef& ref, bool inverse) {
    Gen h = ref.to_gen();
    if (inverse || h.kind != GenKind::R)
      throw ParseError("unknown_generator", ref.name + " does not act on the basic spin module", ref.offset);
    if (h.index < 1 || h.index >= n)
      throw ParseError("index_out_of_range", gen_name(h) + " is out of range", ref.offset);
    return g[static_cast<std::size_t>(h.index - 1)];
  };
  return ctx;
}

}  // namespace

LMatrix act_expression(int n, const std::string& text) {
  auto g = pi_q(n);
  return evaluate(*parse_ast(text), matrix_context(n, g));
}

std::size_t gamma_span_rank(int n) { return rank_exact(as_rows(pi_q(n))); }

std::size_t gamma_algebra_dimension(int n) {
  auto g = pi_q(n);
  std::size_t dim = g[0].rows();
  std::vector<LMatrix> words{LMatrix::identity(dim)};
  std::vector<LMatrix> layer = words;
  for (int len = 1; len <= n - 1; ++len) {
    std::vector<LMatrix> next;
    for (const auto& w : layer)
      for (const auto& x : g) next.push_back(w * x);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return rank_exact(as_rows(words));
}

Report spin_module_suite(int n, unsigned seed, int samples, bool algebra_dimension) {
  Report out;
  auto t0 = Clock::now();
  auto rep = clifford_matrices(n);
  out.push_back(make_check("clifford matrices, n=" + std::to_string(n), clifford_relations_hold(rep), true, t0,
                           "dimension " + std::to_string(rep.dim)));
  if (n < 2) return out;
  auto g = pi_q(n);
  auto ctx = matrix_context(n, g);
  for (const auto& r : defining_relations(AlgebraKind::Spin, n)) {
    t0 = Clock::now();
    bool holds = evaluate(*parse_ast(r.lhs), ctx) == evaluate(*parse_ast(r.rhs), ctx);
    out.push_back(make_check("pi_q:" + r.name, holds, true, t0));
  }
  t0 = Clock::now();
  std::size_t rk = gamma_span_rank(n);
  out.push_back(make_check("gamma span rank", rk == static_cast<std::size_t>(n - 1), true, t0,
                           "rank " + std::to_string(rk)));
  for (int i = 1; i + 1 < n; ++i) {
    t0 = Clock::now();
    const auto& a = g[static_cast<std::size_t>(i - 1)];
    const auto& b = g[static_cast<std::size_t>(i)];
    auto rhs = Laurent(2) * a + (Laurent::q(2) + Laurent::q(-2)) * b;
    std::string s = std::to_string(i), t = std::to_string(i + 1);
    out.push_back(make_check("gamma" + s + "*gamma" + t + "*gamma" + s + " = 2*gamma" + s + " + (q^2 + q^-2)*gamma" + t,
                             a * b * a == rhs, true, t0));
  }
  t0 = Clock::now();
  auto alg = SpinAlgebra::make(n, ZMode::Minus, false);
  std::mt19937_64 rng(seed);
  bool hom = true;
  for (int k = 0; k < samples; ++k) {
    auto x = random_element(alg, rng), y = random_element(alg, rng);
    hom = hom && act(x * y) == act(x) * act(y);
  }
  out.push_back(make_check("act multiplicative", hom, true, t0, std::to_string(samples) + " pairs"));
  if (algebra_dimension) {
    t0 = Clock::now();
    std::size_t d = gamma_algebra_dimension(n);
    out.push_back(make_check("image algebra dimension", d == (std::size_t{1} << (n - 1)), true, t0,
                             "dimension " + std::to_string(d) + ", simple supermodule dimension " +
                                 std::to_string(std::size_t{1} << (n / 2))));
  }
  return out;
}

}  // namespace spinhecke
