#include "spinhecke/tensor.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "spinhecke/perm.hpp"

namespace spinhecke {

std::shared_ptr<const TensorAlgebra> TensorAlgebra::make(int n, bool affine) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::shared_ptr<const TensorAlgebra>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, affine);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto alg = std::make_shared<const TensorAlgebra>(SpinAlgebra::make(n, ZMode::Minus, affine));
  registry.emplace(key, alg);
  return alg;
}

TensorAlgebra::TensorAlgebra(std::shared_ptr<const SpinAlgebra> right) : right_(std::move(right)) {
  if (right_->mode() != ZMode::Minus)
    throw DomainError("unsupported_algebra", "tensor factor must be a spin algebra");
}

std::string TensorAlgebra::name() const { return "tensor" + std::string(affine() ? "-affine" : "") + "(" + std::to_string(n()) + ")"; }

std::vector<TensorWord> TensorAlgebra::basis() const {
  std::vector<TensorWord> out;
  for (const SpinWord& b : right_->basis())
    for (unsigned m = 0; m < (1u << n()); ++m) out.push_back({static_cast<std::uint16_t>(m), b});
  std::sort(out.begin(), out.end());
  return out;
}

TensorWord TensorAlgebra::random_word(std::mt19937_64& rng, int max_pexp) const {
  TensorWord w;
  w.cmask = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, (1 << n()) - 1)(rng));
  w.right = right_->random_word(rng, max_pexp);
  return w;
}

std::vector<Gen> TensorAlgebra::letters(const TensorWord& w) const {
  std::vector<Gen> out;
  for (int i = 1; i <= n(); ++i)
    if ((w.cmask >> (i - 1)) & 1u) out.push_back(c(i));
  auto r = right_->letters(w.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool TensorAlgebra::valid_gen(Gen g) const {
  if (g.kind == GenKind::c) return g.index >= 1 && g.index <= n();
  return right_->valid_gen(g);
}

void TensorAlgebra::check_gen(Gen g) const {
  if (!valid_gen(g)) throw DomainError("unknown_generator", gen_name(g) + " is not a generator of " + name());
}

int TensorAlgebra::word_parity(const TensorWord& w) const {
  return (std::popcount(static_cast<unsigned>(w.cmask)) + right_->word_parity(w.right)) & 1;
}

std::pair<TensorWord, TensorWord> TensorAlgebra::peel(const TensorWord& w) const {
  auto [rf, rc] = right_->peel(w.right);
  return {TensorWord{w.cmask, rf}, TensorWord{0, rc}};
}

int TensorAlgebra::unpeel(const TensorWord& factor, TensorWord& w) const {
  // factor = c^f (x) p^k with p^k even
  int sign = clifford_sign(factor.cmask, w.cmask);
  w.cmask ^= factor.cmask;
  sign *= right_->unpeel(factor.right, w.right);
  return sign;
}

void TensorAlgebra::absorb(const TensorWord& w, Gen g, std::vector<Rewrite<TensorWord>>& out) const {
  if (g.kind == GenKind::c) {
    check_gen(g);
    auto bit = static_cast<std::uint16_t>(1u << (g.index - 1));
    int sign = clifford_sign(w.cmask, bit);
    if (right_->word_parity(w.right)) sign = -sign;
    TensorWord v = w;
    v.cmask ^= bit;
    out.push_back({Laurent(sign), v, {}});
    return;
  }
  std::vector<Rewrite<SpinWord>> inner;
  right_->absorb(w.right, g, inner);
  for (auto& r : inner) out.push_back({std::move(r.coeff), TensorWord{w.cmask, r.prefix}, std::move(r.pending)});
}

std::string TensorAlgebra::word_text(const TensorWord& w) const {
  std::string out;
  for (int i = 1; i <= n(); ++i) {
    if ((w.cmask >> (i - 1)) & 1u) {
      if (!out.empty()) out += "*";
      out += "c" + std::to_string(i);
    }
  }
  std::string r = right_->word_text(w.right);
  if (!r.empty()) {
    if (!out.empty()) out += "*";
    out += r;
  }
  return out;
}

}  // namespace spinhecke
