#include "spinhecke/spin.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <tuple>

namespace spinhecke {

int SpinWord::p_degree() const {
  int d = 0;
  for (auto e : pexp) d += e;
  return d;
}

int SpinWord::length() const {
  int d = 0;
  for (auto e : stair) d += e;
  return d;
}

bool SpinWord::has_stair() const {
  for (auto e : stair)
    if (e != 0) return true;
  return false;
}

bool operator<(const SpinWord& x, const SpinWord& y) {
  if (x.z != y.z) return x.z < y.z;
  for (std::size_t k = kMaxRank; k-- > 0;)
    if (x.stair[k] != y.stair[k]) return x.stair[k] < y.stair[k];
  if (x.qmask != y.qmask) return x.qmask < y.qmask;
  int dx = x.p_degree(), dy = y.p_degree();
  if (dx != dy) return dx < dy;
  for (std::size_t k = 0; k < kMaxRank; ++k)
    if (x.pexp[k] != y.pexp[k]) return x.pexp[k] > y.pexp[k];
  return false;
}

std::size_t SpinWordHash::operator()(const SpinWord& w) const {
  std::size_t h = w.z * 7u + w.qmask * 1315423911u;
  for (std::size_t k = 0; k < kMaxRank; ++k) {
    h = h * 31u + w.stair[k];
    h = h * 131u + w.pexp[k];
  }
  return h;
}

std::shared_ptr<const SpinAlgebra> SpinAlgebra::make(int n, ZMode mode, bool affine) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::shared_ptr<const SpinAlgebra>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, static_cast<int>(mode), affine);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto alg = std::make_shared<const SpinAlgebra>(n, mode, affine);
  registry.emplace(key, alg);
  return alg;
}

SpinAlgebra::SpinAlgebra(int n, ZMode mode, bool affine) : n_(n), mode_(mode), affine_(affine) {
  if (n < 1 || n > kMaxRank)
    throw DomainError("rank_out_of_range", "n must lie in [1, " + std::to_string(kMaxRank) + "]");
}

std::string SpinAlgebra::name() const {
  std::string base = mode_ == ZMode::Minus ? "spin" : mode_ == ZMode::Plus ? "hecke-t" : "covering";
  if (affine_) base += "-affine";
  return base + "(" + std::to_string(n_) + ")";
}

GenKind SpinAlgebra::stair_kind() const {
  return mode_ == ZMode::Minus ? GenKind::R : mode_ == ZMode::Plus ? GenKind::Tc : GenKind::Tt;
}
GenKind SpinAlgebra::even_kind() const {
  return mode_ == ZMode::Minus ? GenKind::p : mode_ == ZMode::Plus ? GenKind::P : GenKind::Pt;
}
GenKind SpinAlgebra::odd_kind() const {
  return mode_ == ZMode::Minus ? GenKind::q : mode_ == ZMode::Plus ? GenKind::Q : GenKind::Qt;
}

std::vector<SpinWord> SpinAlgebra::basis() const {
  if (affine_) throw DomainError("infinite_dimensional", name() + " has no finite basis");
  std::vector<SpinWord> out;
  SpinWord w{};
  // odometer over 0 <= a_i <= i
  while (true) {
    out.push_back(w);
    if (mode_ == ZMode::Cover) {
      SpinWord v = w;
      v.z = 1;
      out.push_back(v);
    }
    int i = 1;
    for (; i <= n_ - 1; ++i) {
      auto& slot = w.stair[static_cast<std::size_t>(i - 1)];
      if (slot < i) {
        ++slot;
        break;
      }
      slot = 0;
    }
    if (i > n_ - 1) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpinWord SpinAlgebra::random_word(std::mt19937_64& rng, int max_pexp) const {
  SpinWord w{};
  for (int i = 1; i <= n_ - 1; ++i)
    w.stair[static_cast<std::size_t>(i - 1)] =
        static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, i)(rng));
  if (mode_ == ZMode::Cover) w.z = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 1)(rng));
  if (affine_) {
    for (int i = 1; i <= n_; ++i)
      w.pexp[static_cast<std::size_t>(i - 1)] =
          static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, max_pexp)(rng));
    w.qmask = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, (1 << n_) - 1)(rng));
  }
  return w;
}

std::vector<Gen> SpinAlgebra::letters(const SpinWord& w) const {
  std::vector<Gen> out;
  if (w.z) out.push_back(z());
  for (int i = 1; i <= n_; ++i)
    for (int k = 0; k < w.p(i); ++k) out.push_back(p(i));
  for (int i = 1; i <= n_; ++i)
    if (w.q(i)) out.push_back(q(i));
  for (int i = 1; i <= n_ - 1; ++i)
    for (int k = 0; k < w.a(i); ++k) out.push_back(R(i - k));
  return out;
}

int SpinAlgebra::letter_rank(Gen g) const {
  if (g.kind == stair_kind()) return 2 * kMaxRank + g.index;
  if (g.kind == odd_kind()) return kMaxRank + g.index;
  return g.index;
}

bool SpinAlgebra::valid_gen(Gen g) const {
  if (g.kind == GenKind::z) return mode_ == ZMode::Cover;
  if (g.kind == stair_kind()) return g.index >= 1 && g.index <= n_ - 1;
  if (g.kind == even_kind() || g.kind == odd_kind()) return affine_ && g.index >= 1 && g.index <= n_;
  return false;
}

void SpinAlgebra::check_gen(Gen g) const {
  if (!valid_gen(g)) throw DomainError("unknown_generator", gen_name(g) + " is not a generator of " + name());
}

int SpinAlgebra::parity(Gen g) const { return (g.kind == stair_kind() || g.kind == odd_kind()) ? 1 : 0; }

int SpinAlgebra::word_parity(const SpinWord& w) const {
  return (std::popcount(static_cast<unsigned>(w.qmask)) + w.length()) & 1;
}

std::pair<SpinWord, SpinWord> SpinAlgebra::peel(const SpinWord& w) const {
  SpinWord factor{};
  factor.z = w.z;
  factor.pexp = w.pexp;
  SpinWord core = w;
  core.z = 0;
  core.pexp = {};
  return {factor, core};
}

int SpinAlgebra::unpeel(const SpinWord& factor, SpinWord& w) const {
  w.z ^= factor.z;
  for (std::size_t k = 0; k < kMaxRank; ++k) w.pexp[k] = static_cast<std::uint16_t>(w.pexp[k] + factor.pexp[k]);
  return 1;
}

void SpinAlgebra::apply_z(Rewrite<SpinWord>& r, int power) const {
  if ((power & 1) == 0) return;
  switch (mode_) {
    case ZMode::Minus:
      r.coeff = -r.coeff;
      break;
    case ZMode::Plus:
      break;
    case ZMode::Cover:
      r.prefix.z ^= 1;
      break;
  }
}

std::vector<Gen> SpinAlgebra::run(int from, int to) const {
  std::vector<Gen> out;
  for (int k = from; k >= to; --k) out.push_back(R(k));
  return out;
}

void SpinAlgebra::absorb(const SpinWord& w, Gen g, std::vector<Rewrite<SpinWord>>& out) const {
  if (g.kind == GenKind::z) {
    SpinWord v = w;
    v.z ^= 1;
    out.push_back({Laurent(1), v, {}});
  } else if (g.kind == stair_kind()) {
    absorb_stair(w, g.index, out);
  } else if (g.kind == even_kind()) {
    absorb_even(w, g.index, out);
  } else if (g.kind == odd_kind()) {
    absorb_odd(w, g.index, out);
  } else {
    check_gen(g);
  }
}

namespace {

int last_run(const SpinWord& w, int n) {
  for (int i = n - 1; i >= 1; --i)
    if (w.a(i) > 0) return i;
  return 0;
}

std::vector<Gen> concat(std::vector<Gen> a, const std::vector<Gen>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

void SpinAlgebra::absorb_stair(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const {
  int m = last_run(w, n_);
  auto slot = [&](SpinWord& v, int i) -> std::uint8_t& { return v.stair[static_cast<std::size_t>(i - 1)]; };
  if (j > m) {
    slot(w, j) = 1;
    out.push_back({Laurent(1), w, {}});
    return;
  }
  int a = w.a(m);
  int b = m - a + 1;
  if (j == b - 1) {
    ++slot(w, m);
    out.push_back({Laurent(1), w, {}});
    return;
  }
  if (j == b) {
    --slot(w, m);
    Laurent c1 = Laurent::q(2) + Laurent(1) + Laurent::q(-2);
    switch (mode_) {
      case ZMode::Minus:
        out.push_back({Laurent(1) - c1, w, {}});
        break;
      case ZMode::Plus:
        out.push_back({Laurent(1) + c1, w, {}});
        break;
      case ZMode::Cover: {
        SpinWord v = w;
        v.z ^= 1;
        out.push_back({c1, v, {}});
        out.push_back({Laurent(1), w, {}});
        break;
      }
    }
    return;
  }
  SpinWord u = w;
  slot(u, m) = 0;
  if (j < b - 1) {
    Rewrite<SpinWord> r{Laurent(1), u, concat({R(j)}, run(m, b))};
    apply_z(r, a);
    out.push_back(std::move(r));
    return;
  }
  // b < j <= m: R_j meets R_j R_{j-1} inside the run; use the braid relation.
  Laurent e2 = Laurent::epsilon() * Laurent::epsilon();
  int e0 = j - 1 - b;
  Rewrite<SpinWord> t1{Laurent(1), u, concat({R(j - 1)}, run(m, b))};
  apply_z(t1, e0 + (m - j));
  Rewrite<SpinWord> t2{-e2, u, concat(run(j - 2, b), run(m, j))};
  apply_z(t2, e0 + (j - 1 - b) * (m - j + 1));
  Rewrite<SpinWord> t3{e2, u, concat(run(j - 1, b), run(m, j + 1))};
  apply_z(t3, e0 + (j - b) * (m - j));
  out.push_back(std::move(t1));
  out.push_back(std::move(t2));
  out.push_back(std::move(t3));
}

void SpinAlgebra::absorb_even(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const {
  int m = last_run(w, n_);
  if (m == 0) {
    ++w.pexp[static_cast<std::size_t>(j - 1)];
    out.push_back({Laurent(1), w, {}});
    return;
  }
  int d = m - w.a(m) + 1;
  --w.stair[static_cast<std::size_t>(m - 1)];
  Laurent eps = Laurent::epsilon();
  if (j != d && j != d + 1) {
    out.push_back({Laurent(1), w, {p(j), R(d)}});
    return;
  }
  // R_d P_d = P_{d+1} R_d - e Q_{d+1} - e z Q_d ; R_d P_{d+1} = P_d R_d + e Q_{d+1} + e z Q_d
  Laurent sgn = j == d ? Laurent(-1) : Laurent(1);
  out.push_back({Laurent(1), w, {p(j == d ? d + 1 : d), R(d)}});
  out.push_back({sgn * eps, w, {q(d + 1)}});
  Rewrite<SpinWord> r{sgn * eps, w, {q(d)}};
  apply_z(r, 1);
  out.push_back(std::move(r));
}

void SpinAlgebra::absorb_odd(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const {
  int m = last_run(w, n_);
  if (m == 0) {
    int above = std::popcount(static_cast<unsigned>(w.qmask) >> j);
    std::uint16_t bit = static_cast<std::uint16_t>(1u << (j - 1));
    if (!(w.qmask & bit)) {
      w.qmask |= bit;
      Rewrite<SpinWord> r{Laurent(1), w, {}};
      apply_z(r, above);
      out.push_back(std::move(r));
      return;
    }
    // Q_j^2 = z P_j^2 - z
    w.qmask &= static_cast<std::uint16_t>(~bit);
    SpinWord w2 = w;
    w2.pexp[static_cast<std::size_t>(j - 1)] += 2;
    Rewrite<SpinWord> r1{Laurent(1), w2, {}};
    apply_z(r1, above + 1);
    Rewrite<SpinWord> r2{Laurent(-1), w, {}};
    apply_z(r2, above + 1);
    out.push_back(std::move(r1));
    out.push_back(std::move(r2));
    return;
  }
  int d = m - w.a(m) + 1;
  --w.stair[static_cast<std::size_t>(m - 1)];
  Laurent eps = Laurent::epsilon();
  if (j != d && j != d + 1) {
    Rewrite<SpinWord> r{Laurent(1), w, {q(j), R(d)}};
    apply_z(r, 1);
    out.push_back(std::move(r));
    return;
  }
  // R_d Q_d = z Q_{d+1} R_d - e P_d - e P_{d+1} ; R_d Q_{d+1} = z Q_d R_d + z e P_d + z e P_{d+1}
  Rewrite<SpinWord> r0{Laurent(1), w, {q(j == d ? d + 1 : d), R(d)}};
  apply_z(r0, 1);
  Rewrite<SpinWord> r1{j == d ? -eps : eps, w, {p(d)}};
  Rewrite<SpinWord> r2{j == d ? -eps : eps, w, {p(d + 1)}};
  if (j == d + 1) {
    apply_z(r1, 1);
    apply_z(r2, 1);
  }
  out.push_back(std::move(r0));
  out.push_back(std::move(r1));
  out.push_back(std::move(r2));
}

std::string SpinAlgebra::word_text(const SpinWord& w) const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  if (w.z) add("z");
  for (int i = 1; i <= n_; ++i) {
    if (w.p(i) == 1) add(gen_name(p(i)));
    else if (w.p(i) > 1) add(gen_name(p(i)) + "^" + std::to_string(w.p(i)));
  }
  for (int i = 1; i <= n_; ++i)
    if (w.q(i)) add(gen_name(q(i)));
  for (int i = 1; i <= n_ - 1; ++i)
    for (int k = 0; k < w.a(i); ++k) add(gen_name(R(i - k)));
  return out;
}

}  // namespace spinhecke
