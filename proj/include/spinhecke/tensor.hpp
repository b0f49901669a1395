#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "spinhecke/spin.hpp"

namespace spinhecke {

// c^eps (x) b in C_n (x) H, where H is a spin algebra (finite or affine).
struct TensorWord {
  std::uint16_t cmask = 0;
  SpinWord right{};

  bool operator==(const TensorWord&) const = default;
  friend bool operator<(const TensorWord& a, const TensorWord& b) {
    if (!(a.right == b.right)) return a.right < b.right;
    int pa = std::popcount(static_cast<unsigned>(a.cmask)), pb = std::popcount(static_cast<unsigned>(b.cmask));
    if (pa != pb) return pa < pb;
    for (int k = 0; k < 16; ++k) {
      bool x = (a.cmask >> k) & 1u, y = (b.cmask >> k) & 1u;
      if (x != y) return x;
    }
    return false;
  }
};

struct TensorWordHash {
  std::size_t operator()(const TensorWord& w) const { return SpinWordHash{}(w.right) * 65599u + w.cmask; }
};

// Super tensor product: (c' x b')(c x b) = (-1)^{|b'||c|} c'c x b'b.
class TensorAlgebra {
 public:
  using Word = TensorWord;
  using WordHash = TensorWordHash;

  static std::shared_ptr<const TensorAlgebra> make(int n, bool affine);

  explicit TensorAlgebra(std::shared_ptr<const SpinAlgebra> right);

  int n() const { return right_->n(); }
  bool affine() const { return right_->affine(); }
  const SpinAlgebra& right() const { return *right_; }
  const std::shared_ptr<const SpinAlgebra>& right_ptr() const { return right_; }
  std::string name() const;

  static Gen c(int i) { return {GenKind::c, i}; }

  std::vector<TensorWord> basis() const;
  TensorWord random_word(std::mt19937_64& rng, int max_pexp) const;

  const TensorWord& identity_word() const { return identity_; }
  std::vector<Gen> letters(const TensorWord& w) const;
  int letter_weight(Gen g) const { return g.kind == GenKind::c ? 1 : right_->letter_weight(g); }
  int letter_rank(Gen g) const { return g.kind == GenKind::c ? g.index : kMaxRank + right_->letter_rank(g); }
  bool valid_gen(Gen g) const;
  void check_gen(Gen g) const;
  int parity(Gen g) const { return g.kind == GenKind::c ? 1 : right_->parity(g); }
  int word_parity(const TensorWord& w) const;
  std::pair<TensorWord, TensorWord> peel(const TensorWord& w) const;
  int unpeel(const TensorWord& factor, TensorWord& w) const;
  void absorb(const TensorWord& w, Gen g, std::vector<Rewrite<TensorWord>>& out) const;
  std::string word_text(const TensorWord& w) const;
  const StepCache<TensorWord, TensorWordHash>& cache() const { return cache_; }

  bool operator==(const TensorAlgebra& o) const { return *right_ == *o.right_; }

 private:
  std::shared_ptr<const SpinAlgebra> right_;
  TensorWord identity_{};
  StepCache<TensorWord, TensorWordHash> cache_;
};

using TensorElement = Element<TensorAlgebra>;

}  // namespace spinhecke
