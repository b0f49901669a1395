#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "spinhecke/engine.hpp"
#include "spinhecke/perm.hpp"

namespace spinhecke {

// X^alpha * c^eps * T_sigma
struct HCWord {
  RankArray<std::int16_t> xexp{};
  std::uint16_t cmask = 0;
  Perm perm = identity_perm();

  int x(int i) const { return xexp[static_cast<std::size_t>(i - 1)]; }
  bool c(int i) const { return (cmask >> (i - 1)) & 1u; }

  bool operator==(const HCWord&) const = default;
  friend bool operator<(const HCWord& a, const HCWord& b);
};

struct HCWordHash {
  std::size_t operator()(const HCWord& w) const;
};

// Hecke-Clifford algebra, optionally affine; with clifford = false the c's are absent
// and the same rules give the ordinary (affine) Hecke algebra.
class HCAlgebra {
 public:
  using Word = HCWord;
  using WordHash = HCWordHash;

  static std::shared_ptr<const HCAlgebra> make(int n, bool affine, bool clifford = true);

  HCAlgebra(int n, bool affine, bool clifford);

  int n() const { return n_; }
  bool affine() const { return affine_; }
  bool clifford() const { return clifford_; }
  std::string name() const;

  static Gen T(int i) { return {GenKind::T, i}; }
  static Gen c(int i) { return {GenKind::c, i}; }
  static Gen X(int i) { return {GenKind::X, i}; }
  static Gen Xinv(int i) { return {GenKind::Xinv, i}; }

  std::vector<HCWord> basis() const;
  HCWord random_word(std::mt19937_64& rng, int max_xexp) const;

  const HCWord& identity_word() const { return identity_; }
  std::vector<Gen> letters(const HCWord& w) const;
  int letter_weight(Gen g) const { return g.kind == GenKind::T ? 2 : 1; }
  int letter_rank(Gen g) const;
  bool valid_gen(Gen g) const;
  void check_gen(Gen g) const;
  int parity(Gen g) const { return g.kind == GenKind::c ? 1 : 0; }
  int word_parity(const HCWord& w) const;
  std::pair<HCWord, HCWord> peel(const HCWord& w) const;
  int unpeel(const HCWord& factor, HCWord& w) const;
  void absorb(const HCWord& w, Gen g, std::vector<Rewrite<HCWord>>& out) const;
  std::string word_text(const HCWord& w) const;
  const StepCache<HCWord, HCWordHash>& cache() const { return cache_; }

  bool operator==(const HCAlgebra& o) const {
    return n_ == o.n_ && affine_ == o.affine_ && clifford_ == o.clifford_;
  }

 private:
  void absorb_c(HCWord w, int j, std::vector<Rewrite<HCWord>>& out) const;
  void absorb_x(HCWord w, int j, int s, std::vector<Rewrite<HCWord>>& out) const;

  int n_;
  bool affine_;
  bool clifford_;
  HCWord identity_{};
  StepCache<HCWord, HCWordHash> cache_;
};

using HCElement = Element<HCAlgebra>;

// Individual commutation rules, returned as normal forms in alg.
HCElement tsigma_mul(const std::shared_ptr<const HCAlgebra>& alg, const Perm& sigma, int i);
HCElement c_past_T(const std::shared_ptr<const HCAlgebra>& alg, int i, int j);
HCElement x_past_T(const std::shared_ptr<const HCAlgebra>& alg, int i, int j, int sign);
HCElement c_past_X(const std::shared_ptr<const HCAlgebra>& alg, int i, int j, int sign);

}  // namespace spinhecke
