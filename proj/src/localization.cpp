#include "spinhecke/localization.hpp"

#include <map>
#include <set>

#include "spinhecke/expr.hpp"
#include "spinhecke/matrix.hpp"
#include "spinhecke/spin_affine.hpp"

namespace spinhecke {

namespace {

using Clock = std::chrono::steady_clock;
using Mono = RankArray<std::uint16_t>;
using MPoly = std::map<Mono, Laurent, std::greater<Mono>>;

void require_spin_affine(const SpinAlgebra& a) {
  if (!a.affine() || a.mode() != ZMode::Minus)
    throw DomainError("unsupported_algebra", "localization needs the affine spin Hecke algebra");
  if (a.n() < 2) throw DomainError("invalid_argument", "delta needs n >= 2");
}

SpinElement pdiff(const std::shared_ptr<const SpinAlgebra>& alg, int a, int b) {
  return generator(alg, alg->p(a)) - generator(alg, alg->p(b));
}

// prod over pairs (a,b) != (i,i+1) of (p_a - p_b)^2; the whole product when i = 0
SpinElement pair_product(const std::shared_ptr<const SpinAlgebra>& alg, int skip) {
  auto out = SpinElement::scalar(alg, 1);
  for (int a = 1; a <= alg->n(); ++a)
    for (int b = a + 1; b <= alg->n(); ++b) {
      if (a == skip && b == skip + 1) continue;
      auto d = pdiff(alg, a, b);
      out = out * d * d;
    }
  return out;
}

std::string istr(int i) { return std::to_string(i); }

}  // namespace

SpinElement delta(const std::shared_ptr<const SpinAlgebra>& alg) {
  require_spin_affine(*alg);
  return pair_product(alg, 0);
}

bool divide_by_p_polynomial(const SpinElement& x, const SpinElement& d, SpinElement& out) {
  if (d.is_zero()) throw DomainError("division_by_zero", "division by zero");
  for (const auto& [w, c] : d.terms())
    if (w.z || w.qmask || w.has_stair()) throw DomainError("invalid_argument", "divisor must be a polynomial in p");
  const auto& alg = x.algebra_ptr();
  MPoly dp;
  for (const auto& [w, c] : d.terms()) dp.emplace(w.pexp, c);
  const auto& [lead, lc] = *dp.begin();

  std::map<SpinWord, MPoly> groups;
  for (const auto& [w, c] : x.terms()) {
    SpinWord key = w;
    key.pexp = {};
    groups[key].emplace(w.pexp, c);
  }
  SpinElement result(alg);
  for (auto& [key, rem] : groups) {
    MPoly quo;
    while (!rem.empty()) {
      auto [m, c] = *rem.begin();
      Mono t{};
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (m[k] < lead[k]) return false;
        t[k] = static_cast<std::uint16_t>(m[k] - lead[k]);
      }
      Laurent cq;
      if (!c.exact_divide(lc, cq)) return false;
      quo[t] += cq;
      for (const auto& [dm, dc] : dp) {
        Mono s{};
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<std::uint16_t>(t[k] + dm[k]);
        auto& slot = rem[s];
        slot -= cq * dc;
        if (slot.is_zero()) rem.erase(s);
      }
    }
    for (const auto& [t, c] : quo) {
      if (c.is_zero()) continue;
      SpinWord w = key;
      w.pexp = t;
      result += SpinElement::word(alg, w, c);
    }
  }
  out = result;
  return true;
}

LocElement::LocElement(SpinElement num, int dpow) : num_(std::move(num)), dpow_(dpow) {
  if (dpow < 0) throw DomainError("invalid_argument", "negative delta power");
}

namespace {

SpinElement times_delta_power(const SpinElement& x, int k) {
  if (k == 0 || x.is_zero()) return x;
  auto d = delta(x.algebra_ptr());
  SpinElement out = x;
  for (int i = 0; i < k; ++i) out = d * out;
  return out;
}

const std::shared_ptr<const SpinAlgebra>& either_alg(const LocElement& a, const LocElement& b) {
  return a.algebra_ptr() ? a.algebra_ptr() : b.algebra_ptr();
}

}  // namespace

LocElement operator+(const LocElement& a, const LocElement& b) {
  if (!a.algebra_ptr()) return b;
  if (!b.algebra_ptr()) return a;
  int k = std::max(a.dpow_, b.dpow_);
  return LocElement(times_delta_power(a.num_, k - a.dpow_) + times_delta_power(b.num_, k - b.dpow_), k);
}

LocElement operator-(const LocElement& a, const LocElement& b) { return a + Laurent(-1) * b; }

LocElement operator*(const LocElement& a, const LocElement& b) {
  if (!a.algebra_ptr() || !b.algebra_ptr()) return LocElement(SpinElement(either_alg(a, b)));
  return LocElement(a.num_ * b.num_, a.dpow_ + b.dpow_);
}

LocElement operator*(const Laurent& c, const LocElement& a) { return LocElement(c * a.num_, a.dpow_); }

bool operator==(const LocElement& a, const LocElement& b) {
  // delta is a non-zero-divisor, so a common power can be cancelled before cross-multiplying
  int m = std::min(a.dpow_, b.dpow_);
  return times_delta_power(a.num_, b.dpow_ - m) == times_delta_power(b.num_, a.dpow_ - m);
}

LocElement LocElement::reduced() const {
  if (num_.is_zero()) return LocElement(num_, 0);
  auto d = delta(num_.algebra_ptr());
  SpinElement cur = num_;
  int k = dpow_;
  SpinElement next;
  while (k > 0 && divide_by_p_polynomial(cur, d, next)) {
    cur = next;
    --k;
  }
  return LocElement(cur, k);
}

std::string LocElement::to_string() const {
  if (dpow_ == 0) return num_.to_string();
  return "delta^-" + istr(dpow_) + "*(" + num_.to_string() + ")";
}

LocElement localize(const SpinElement& x) { return LocElement(x, 0); }

LocElement invert_p_diff(const std::shared_ptr<const SpinAlgebra>& alg, int i) {
  require_spin_affine(*alg);
  if (i < 1 || i >= alg->n()) throw DomainError("index_out_of_range", "index out of range");
  return LocElement(pdiff(alg, i, i + 1) * pair_product(alg, i), 1);
}

LocElement gimel(const std::shared_ptr<const SpinAlgebra>& alg, int i) {
  auto inv = invert_p_diff(alg, i);
  auto qd = generator(alg, alg->q(i)) - generator(alg, alg->q(i + 1));
  return localize(generator(alg, alg->R(i))) - Laurent::epsilon() * (inv * localize(qd));
}

Report intertwiner_suite(const std::shared_ptr<const SpinAlgebra>& alg, const IntertwinerOptions& opt) {
  require_spin_affine(*alg);
  int n = alg->n();
  Report out;
  std::vector<LocElement> g(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) g[static_cast<std::size_t>(i)] = gimel(alg, i);
  auto G = [&](int i) -> const LocElement& { return g[static_cast<std::size_t>(i)]; };
  auto P = [&](int j) { return localize(generator(alg, alg->p(j))); };
  auto Q = [&](int j) { return localize(generator(alg, alg->q(j))); };
  Laurent e = Laurent::epsilon();

  for (int i = 1; i < n; ++i) {
    std::string s = istr(i);
    auto t0 = Clock::now();
    auto inv = invert_p_diff(alg, i);
    auto pp = parse_element(alg, "p" + s + "*p" + istr(i + 1) + " - 1");
    auto rhs = localize(SpinElement::scalar(alg, -2)) + Laurent(2) * e * e * (inv * inv * localize(pp));
    out.push_back(make_check("gimel" + s + "^2", G(i) * G(i) == rhs, true, t0));

    t0 = Clock::now();
    out.push_back(make_check("gimel" + s + "*p" + s + " = p" + istr(i + 1) + "*gimel" + s,
                             G(i) * P(i) == P(i + 1) * G(i), true, t0));
    t0 = Clock::now();
    out.push_back(make_check("gimel" + s + "*p" + istr(i + 1) + " = p" + s + "*gimel" + s,
                             G(i) * P(i + 1) == P(i) * G(i), true, t0));
    t0 = Clock::now();
    out.push_back(make_check("gimel" + s + "*q" + s + " = -q" + istr(i + 1) + "*gimel" + s,
                             G(i) * Q(i) == Laurent(-1) * (Q(i + 1) * G(i)), true, t0));
    t0 = Clock::now();
    out.push_back(make_check("gimel" + s + "*q" + istr(i + 1) + " = -q" + s + "*gimel" + s,
                             G(i) * Q(i + 1) == Laurent(-1) * (Q(i) * G(i)), true, t0));
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      t0 = Clock::now();
      out.push_back(make_check("gimel" + s + "*p" + istr(j) + " = p" + istr(j) + "*gimel" + s,
                               G(i) * P(j) == P(j) * G(i), true, t0));
      t0 = Clock::now();
      out.push_back(make_check("gimel" + s + "*q" + istr(j) + " = -q" + istr(j) + "*gimel" + s,
                               G(i) * Q(j) == Laurent(-1) * (Q(j) * G(i)), true, t0));
    }
  }
  if (opt.far)
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        auto t0 = Clock::now();
        out.push_back(make_check("gimel" + istr(i) + "*gimel" + istr(j) + " = -gimel" + istr(j) + "*gimel" + istr(i),
                                 G(i) * G(j) == Laurent(-1) * (G(j) * G(i)), true, t0));
      }
  if (opt.braid)
    for (int i = 1; i + 1 < n; ++i) {
      auto t0 = Clock::now();
      auto lhs = G(i) * G(i + 1) * G(i);
      auto rhs = G(i + 1) * G(i) * G(i + 1);
      std::string a = istr(i), b = istr(i + 1);
      out.push_back(make_check("gimel" + a + "*gimel" + b + "*gimel" + a + " = gimel" + b + "*gimel" + a + "*gimel" + b,
                               lhs == rhs, true, t0));
    }
  return out;
}

Report localization_suite(const std::shared_ptr<const SpinAlgebra>& alg) {
  require_spin_affine(*alg);
  Report out;
  int n = alg->n();
  auto t0 = Clock::now();
  out.push_back(make_check("delta central", is_central(delta(alg)), true, t0));
  for (int i = 1; i < n; ++i) {
    t0 = Clock::now();
    auto prod = localize(pdiff(alg, i, i + 1)) * invert_p_diff(alg, i);
    out.push_back(make_check("(p" + istr(i) + " - p" + istr(i + 1) + ")*inverse = 1",
                             prod == localize(SpinElement::scalar(alg, 1)), true, t0));
    t0 = Clock::now();
    auto inv = invert_p_diff(alg, i);
    bool comm = true;
    for (int j = 1; j <= n; ++j) {
      auto pj = localize(generator(alg, alg->p(j)));
      comm = comm && pj * inv == inv * pj;
    }
    out.push_back(make_check("inverse of p" + istr(i) + " - p" + istr(i + 1) + " commutes with the p's", comm, true, t0));
  }
  t0 = Clock::now();
  auto x = parse_element(alg, "R1*p1 + q2");
  auto y = parse_element(alg, "p2^2 - e*q1*R1");
  bool arith = localize(x) + localize(y) == localize(x + y) && localize(x) * localize(y) == localize(x * y);
  out.push_back(make_check("arithmetic agrees with the algebra", arith, true, t0));
  t0 = Clock::now();
  LocElement frac(delta(alg) * x, 2);
  auto red = frac.reduced();
  out.push_back(make_check("reduction", red == frac && red.dpow() == 1 && red.num() == x, true, t0));
  return out;
}

Check delta_regularity_check(const std::shared_ptr<const SpinAlgebra>& alg, int max_degree) {
  require_spin_affine(*alg);
  auto t0 = Clock::now();
  int n = alg->n();
  auto d = delta(alg);
  std::vector<SpinWord> words;
  std::vector<SpinWord> finite = SpinAlgebra::make(n, ZMode::Minus, false)->basis();
  std::vector<Mono> monos;
  Mono cur{};
  std::function<void(int, int)> gen_monos = [&](int k, int left) {
    if (k == n) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(e);
      gen_monos(k + 1, left - e);
    }
    cur[static_cast<std::size_t>(k)] = 0;
  };
  gen_monos(0, max_degree);
  for (unsigned qm = 0; qm < (1u << n); ++qm)
    for (const auto& s : finite)
      for (const auto& m : monos) {
        SpinWord w = s;
        w.qmask = static_cast<std::uint16_t>(qm);
        w.pexp = m;
        words.push_back(w);
      }
  // images split into blocks sharing the q/staircase part; rank is additive over blocks
  std::map<SpinWord, std::vector<SpinElement>> blocks;
  for (const auto& w : words) {
    SpinWord key = w;
    key.pexp = {};
    blocks[key].push_back(d * SpinElement::word(alg, w));
  }
  std::size_t rank = 0;
  bool disjoint = true;
  std::set<SpinWord> seen;
  for (const auto& [key, imgs] : blocks) {
    std::map<SpinWord, std::size_t> col;
    for (const auto& img : imgs)
      for (const auto& [w, c] : img.terms()) col.try_emplace(w, 0);
    std::size_t k = 0;
    for (auto& [w, c] : col) {
      c = k++;
      disjoint = disjoint && seen.insert(w).second;
    }
    LRows rows;
    for (const auto& img : imgs) {
      std::vector<Laurent> r(col.size());
      for (const auto& [w, c] : img.terms()) r[col[w]] = c;
      rows.push_back(std::move(r));
    }
    rank += rank_exact(rows);
  }
  bool ok = disjoint && rank == words.size();
  return make_check("delta-regular, n=" + istr(n) + ", p-degree <= " + istr(max_degree), ok, true, t0,
                    "rank " + std::to_string(rank) + " of " + std::to_string(words.size()));
}

}  // namespace spinhecke
