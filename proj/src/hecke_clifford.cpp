#include "spinhecke/hecke_clifford.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <tuple>

namespace spinhecke {

namespace {

int x_degree(const HCWord& w) {
  int d = 0;
  for (auto e : w.xexp) d += e < 0 ? -e : e;
  return d;
}

int perm_len_full(const Perm& s) { return perm_length(s, kMaxRank); }

}  // namespace

bool operator<(const HCWord& a, const HCWord& b) {
  int la = perm_len_full(a.perm), lb = perm_len_full(b.perm);
  if (la != lb) return la < lb;
  if (a.perm != b.perm) return a.perm < b.perm;
  int ca = std::popcount(static_cast<unsigned>(a.cmask)), cb = std::popcount(static_cast<unsigned>(b.cmask));
  if (ca != cb) return ca < cb;
  if (a.cmask != b.cmask) {
    // c1 before c2: compare reversed bit order
    for (int k = 0; k < 16; ++k) {
      bool x = (a.cmask >> k) & 1u, y = (b.cmask >> k) & 1u;
      if (x != y) return x;
    }
  }
  int da = x_degree(a), db = x_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = 0; k < kMaxRank; ++k)
    if (a.xexp[k] != b.xexp[k]) return a.xexp[k] > b.xexp[k];
  return false;
}

std::size_t HCWordHash::operator()(const HCWord& w) const {
  std::size_t h = w.cmask * 2654435761u;
  for (std::size_t k = 0; k < kMaxRank; ++k) {
    h = h * 31u + static_cast<std::size_t>(w.xexp[k] + 64);
    h = h * 17u + w.perm[k];
  }
  return h;
}

std::shared_ptr<const HCAlgebra> HCAlgebra::make(int n, bool affine, bool clifford) {
  static std::mutex mu;
  static std::map<std::tuple<int, bool, bool>, std::shared_ptr<const HCAlgebra>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, affine, clifford);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto alg = std::make_shared<const HCAlgebra>(n, affine, clifford);
  registry.emplace(key, alg);
  return alg;
}

HCAlgebra::HCAlgebra(int n, bool affine, bool clifford) : n_(n), affine_(affine), clifford_(clifford) {
  if (n < 1 || n > kMaxRank)
    throw DomainError("rank_out_of_range", "n must lie in [1, " + std::to_string(kMaxRank) + "]");
}

std::string HCAlgebra::name() const {
  std::string base = clifford_ ? "hecke-clifford" : "hecke";
  if (affine_) base += "-affine";
  return base + "(" + std::to_string(n_) + ")";
}

std::vector<HCWord> HCAlgebra::basis() const {
  if (affine_) throw DomainError("infinite_dimensional", name() + " has no finite basis");
  std::vector<HCWord> out;
  unsigned masks = clifford_ ? (1u << n_) : 1u;
  for (const Perm& s : all_perms(n_)) {
    for (unsigned m = 0; m < masks; ++m) {
      HCWord w{};
      w.perm = s;
      w.cmask = static_cast<std::uint16_t>(m);
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HCWord HCAlgebra::random_word(std::mt19937_64& rng, int max_xexp) const {
  HCWord w{};
  w.perm = random_perm(rng, n_);
  if (clifford_) w.cmask = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, (1 << n_) - 1)(rng));
  if (affine_)
    for (int i = 0; i < n_; ++i)
      w.xexp[static_cast<std::size_t>(i)] =
          static_cast<std::int16_t>(std::uniform_int_distribution<int>(-max_xexp, max_xexp)(rng));
  return w;
}

std::vector<Gen> HCAlgebra::letters(const HCWord& w) const {
  std::vector<Gen> out;
  for (int i = 1; i <= n_; ++i) {
    int e = w.x(i);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out.push_back(e > 0 ? X(i) : Xinv(i));
  }
  for (int i = 1; i <= n_; ++i)
    if (w.c(i)) out.push_back(c(i));
  for (int i : reduced_word(w.perm, n_)) out.push_back(T(i));
  return out;
}

int HCAlgebra::letter_rank(Gen g) const {
  switch (g.kind) {
    case GenKind::X:
      return g.index;
    case GenKind::Xinv:
      return kMaxRank + g.index;
    case GenKind::c:
      return 2 * kMaxRank + g.index;
    default:
      return 3 * kMaxRank + g.index;
  }
}

bool HCAlgebra::valid_gen(Gen g) const {
  switch (g.kind) {
    case GenKind::T:
      return g.index >= 1 && g.index <= n_ - 1;
    case GenKind::c:
      return clifford_ && g.index >= 1 && g.index <= n_;
    case GenKind::X:
    case GenKind::Xinv:
      return affine_ && g.index >= 1 && g.index <= n_;
    default:
      return false;
  }
}

void HCAlgebra::check_gen(Gen g) const {
  if (!valid_gen(g)) throw DomainError("unknown_generator", gen_name(g) + " is not a generator of " + name());
}

int HCAlgebra::word_parity(const HCWord& w) const { return std::popcount(static_cast<unsigned>(w.cmask)) & 1; }

std::pair<HCWord, HCWord> HCAlgebra::peel(const HCWord& w) const {
  HCWord factor{};
  factor.xexp = w.xexp;
  HCWord core = w;
  core.xexp = {};
  return {factor, core};
}

int HCAlgebra::unpeel(const HCWord& factor, HCWord& w) const {
  for (std::size_t k = 0; k < kMaxRank; ++k) w.xexp[k] = static_cast<std::int16_t>(w.xexp[k] + factor.xexp[k]);
  return 1;
}

void HCAlgebra::absorb(const HCWord& w, Gen g, std::vector<Rewrite<HCWord>>& out) const {
  switch (g.kind) {
    case GenKind::T: {
      int i = g.index;
      HCWord v = w;
      v.perm = times_simple(w.perm, i);
      if (w.perm[static_cast<std::size_t>(i - 1)] < w.perm[static_cast<std::size_t>(i)]) {
        out.push_back({Laurent(1), v, {}});
      } else {
        // T_s' T_i T_i = T_s' + e T_s' T_i
        out.push_back({Laurent(1), v, {}});
        out.push_back({Laurent::epsilon(), w, {}});
      }
      return;
    }
    case GenKind::c:
      absorb_c(w, g.index, out);
      return;
    case GenKind::X:
      absorb_x(w, g.index, 1, out);
      return;
    case GenKind::Xinv:
      absorb_x(w, g.index, -1, out);
      return;
    default:
      check_gen(g);
  }
}

void HCAlgebra::absorb_c(HCWord w, int j, std::vector<Rewrite<HCWord>>& out) const {
  int d = last_descent(w.perm, n_);
  if (d == 0) {
    auto bit = static_cast<std::uint16_t>(1u << (j - 1));
    int sign = clifford_sign(w.cmask, bit);
    w.cmask ^= bit;
    out.push_back({Laurent(sign), w, {}});
    return;
  }
  w.perm = times_simple(w.perm, d);
  Laurent eps = Laurent::epsilon();
  if (j == d) {
    out.push_back({Laurent(1), w, {c(d + 1), T(d)}});
  } else if (j == d + 1) {
    // T_d c_{d+1} = c_d T_d - e c_d + e c_{d+1}
    out.push_back({Laurent(1), w, {c(d), T(d)}});
    out.push_back({-eps, w, {c(d)}});
    out.push_back({eps, w, {c(d + 1)}});
  } else {
    out.push_back({Laurent(1), w, {c(j), T(d)}});
  }
}

void HCAlgebra::absorb_x(HCWord w, int j, int s, std::vector<Rewrite<HCWord>>& out) const {
  int d = last_descent(w.perm, n_);
  auto xg = [&](int i, int sg) { return sg > 0 ? X(i) : Xinv(i); };
  if (d == 0) {
    if (w.c(j)) s = -s;  // c_j X_j = X_j^-1 c_j
    HCWord v = w;
    v.xexp[static_cast<std::size_t>(j - 1)] = static_cast<std::int16_t>(v.xexp[static_cast<std::size_t>(j - 1)] + s);
    v.cmask = 0;
    v.perm = identity_perm();
    // X^a * X_j^s * c^eps, with X^a c^eps T_id = w
    HCWord r = w;
    r.xexp = v.xexp;
    out.push_back({Laurent(1), r, {}});
    return;
  }
  w.perm = times_simple(w.perm, d);
  Laurent eps = Laurent::epsilon();
  if (j != d && j != d + 1) {
    out.push_back({Laurent(1), w, {xg(j, s), T(d)}});
    return;
  }
  // T_d X_d     = X_{d+1} T_d - e X_{d+1} - e X_d^-1 c_d c_{d+1}
  // T_d X_{d+1} = X_d T_d + e X_{d+1} - e X_{d+1}^-1 c_d c_{d+1}
  // T_d X_d^-1     = X_{d+1}^-1 T_d + e X_d^-1 + e X_{d+1}^-1 c_d c_{d+1}
  // T_d X_{d+1}^-1 = X_d^-1 T_d - e X_d^-1 + e X_d^-1 c_d c_{d+1}
  int other = j == d ? d + 1 : d;
  out.push_back({Laurent(1), w, {xg(other, s), T(d)}});
  Laurent k1, k2;
  Gen g1{}, g2{};
  if (s > 0 && j == d) {
    k1 = -eps, g1 = X(d + 1), k2 = -eps, g2 = Xinv(d);
  } else if (s > 0) {
    k1 = eps, g1 = X(d + 1), k2 = -eps, g2 = Xinv(d + 1);
  } else if (j == d) {
    k1 = eps, g1 = Xinv(d), k2 = eps, g2 = Xinv(d + 1);
  } else {
    k1 = -eps, g1 = Xinv(d), k2 = eps, g2 = Xinv(d);
  }
  out.push_back({k1, w, {g1}});
  if (clifford_) out.push_back({k2, w, {g2, c(d), c(d + 1)}});
}

std::string HCAlgebra::word_text(const HCWord& w) const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (int i = 1; i <= n_; ++i) {
    int e = w.x(i);
    if (e == 1) add("X" + std::to_string(i));
    else if (e != 0) add("X" + std::to_string(i) + "^" + std::to_string(e));
  }
  for (int i = 1; i <= n_; ++i)
    if (w.c(i)) add("c" + std::to_string(i));
  for (int i : reduced_word(w.perm, n_)) add("T" + std::to_string(i));
  return out;
}

HCElement tsigma_mul(const std::shared_ptr<const HCAlgebra>& alg, const Perm& sigma, int i) {
  HCWord w{};
  w.perm = sigma;
  return right_mul(HCElement::word(alg, w), HCAlgebra::T(i));
}

HCElement c_past_T(const std::shared_ptr<const HCAlgebra>& alg, int i, int j) {
  return word_product(alg, {HCAlgebra::T(i), HCAlgebra::c(j)});
}

HCElement x_past_T(const std::shared_ptr<const HCAlgebra>& alg, int i, int j, int sign) {
  return word_product(alg, {HCAlgebra::T(i), sign > 0 ? HCAlgebra::X(j) : HCAlgebra::Xinv(j)});
}

HCElement c_past_X(const std::shared_ptr<const HCAlgebra>& alg, int i, int j, int sign) {
  return word_product(alg, {HCAlgebra::c(i), sign > 0 ? HCAlgebra::X(j) : HCAlgebra::Xinv(j)});
}

}  // namespace spinhecke
