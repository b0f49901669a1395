#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "spinhecke/engine.hpp"

namespace spinhecke {

// How the central z acts: -1 (spin), +1 (the z = 1 quotient), or as a free central involution.
enum class ZMode : std::uint8_t { Minus, Plus, Cover };

// z^f * p^k * q^eps * R_{1,a_1} ... R_{n-1,a_{n-1}} with R_{i,a} = R_i R_{i-1} ... R_{i-a+1}.
struct SpinWord {
  std::uint8_t z = 0;
  std::uint16_t qmask = 0;  // bit i-1 set: q_i present
  RankArray<std::uint8_t> stair{};
  RankArray<std::uint16_t> pexp{};

  int a(int i) const { return stair[static_cast<std::size_t>(i - 1)]; }
  int p(int i) const { return pexp[static_cast<std::size_t>(i - 1)]; }
  bool q(int i) const { return (qmask >> (i - 1)) & 1u; }
  int p_degree() const;
  int length() const;  // number of staircase letters
  bool has_stair() const;

  bool operator==(const SpinWord&) const = default;
  friend bool operator<(const SpinWord& x, const SpinWord& y);
};

struct SpinWordHash {
  std::size_t operator()(const SpinWord& w) const;
};

class SpinAlgebra {
 public:
  using Word = SpinWord;
  using WordHash = SpinWordHash;

  // Shared instance per (n, mode, affine) so straightening caches are reused.
  static std::shared_ptr<const SpinAlgebra> make(int n, ZMode mode, bool affine);

  SpinAlgebra(int n, ZMode mode, bool affine);

  int n() const { return n_; }
  ZMode mode() const { return mode_; }
  bool affine() const { return affine_; }
  std::string name() const;

  GenKind stair_kind() const;
  GenKind even_kind() const;
  GenKind odd_kind() const;
  Gen R(int i) const { return {stair_kind(), i}; }
  Gen p(int i) const { return {even_kind(), i}; }
  Gen q(int i) const { return {odd_kind(), i}; }
  Gen z() const { return {GenKind::z, 0}; }

  // Finite basis in canonical order (finite algebras only).
  std::vector<SpinWord> basis() const;
  SpinWord random_word(std::mt19937_64& rng, int max_pexp) const;

  // engine interface
  const SpinWord& identity_word() const { return identity_; }
  std::vector<Gen> letters(const SpinWord& w) const;
  int letter_weight(Gen g) const { return g.kind == GenKind::z ? 0 : 1; }
  int letter_rank(Gen g) const;
  bool valid_gen(Gen g) const;
  void check_gen(Gen g) const;
  int parity(Gen g) const;
  int word_parity(const SpinWord& w) const;
  std::pair<SpinWord, SpinWord> peel(const SpinWord& w) const;
  int unpeel(const SpinWord& factor, SpinWord& w) const;
  void absorb(const SpinWord& w, Gen g, std::vector<Rewrite<SpinWord>>& out) const;
  std::string word_text(const SpinWord& w) const;
  const StepCache<SpinWord, SpinWordHash>& cache() const { return cache_; }

  bool operator==(const SpinAlgebra& o) const {
    return n_ == o.n_ && mode_ == o.mode_ && affine_ == o.affine_;
  }

 private:
  void apply_z(Rewrite<SpinWord>& r, int power) const;
  void absorb_stair(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const;
  void absorb_even(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const;
  void absorb_odd(SpinWord w, int j, std::vector<Rewrite<SpinWord>>& out) const;
  std::vector<Gen> run(int from, int to) const;  // R_from, R_from-1, ..., R_to

  int n_;
  ZMode mode_;
  bool affine_;
  SpinWord identity_{};
  StepCache<SpinWord, SpinWordHash> cache_;
};

using SpinElement = Element<SpinAlgebra>;

}  // namespace spinhecke
