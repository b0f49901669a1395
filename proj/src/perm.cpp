#include "spinhecke/perm.hpp"

#include <algorithm>
#include <bit>

namespace spinhecke {

Perm identity_perm() {
  Perm s{};
  for (std::size_t k = 0; k < kMaxRank; ++k) s[k] = static_cast<std::uint8_t>(k + 1);
  return s;
}

int perm_length(const Perm& s, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

bool is_identity(const Perm& s, int n) {
  for (int i = 0; i < n; ++i)
    if (s[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

int last_descent(const Perm& s, int n) {
  for (int i = n - 1; i >= 1; --i)
    if (s[static_cast<std::size_t>(i - 1)] > s[static_cast<std::size_t>(i)]) return i;
  return 0;
}

Perm times_simple(Perm s, int i) {
  std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
  return s;
}

std::vector<int> reduced_word(Perm s, int n) {
  std::vector<int> out;
  for (int d = last_descent(s, n); d != 0; d = last_descent(s, n)) {
    out.push_back(d);
    s = times_simple(s, d);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm s = identity_perm();
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.begin() + n));
  return out;
}

Perm random_perm(std::mt19937_64& rng, int n) {
  Perm s = identity_perm();
  for (int i = n - 1; i > 0; --i) {
    int j = std::uniform_int_distribution<int>(0, i)(rng);
    std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
  }
  return s;
}

int clifford_sign(std::uint16_t a, std::uint16_t b) {
  int swaps = 0;
  for (int j = 0; j < 16; ++j)
    if ((b >> j) & 1u) swaps += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  return (swaps & 1) ? -1 : 1;
}

}  // namespace spinhecke
