#pragma once

#include <cstdint>
#include <array>
#include <cstddef>
#include <string>

namespace spinhecke {

inline constexpr int kMaxRank = 12;

enum class GenKind : std::uint8_t {
  R,     // spin generator
  Tt,    // covering generator
  Tc,    // generator of the z = 1 quotient
  T,     // Hecke generator
  c,     // Clifford generator
  X,     // polynomial generator
  Xinv,  // its inverse
  p,
  q,
  Pt,
  Qt,
  P,
  Q,
  z,
};

struct Gen {
  GenKind kind;
  int index = 0;  // 1-based; unused for z

  friend bool operator==(const Gen&, const Gen&) = default;
};

// "R3", "Xi2", "z"
std::string gen_name(const Gen& g);
// Prefix part of the name: "R", "Xi", "z".
std::string kind_name(GenKind k);
// Inverse of kind_name; false when unknown.
bool kind_from_name(const std::string& name, GenKind& out);

inline std::size_t gen_hash(const Gen& g) {
  return static_cast<std::size_t>(g.kind) * 131u + static_cast<std::size_t>(g.index);
}

// Inline word storage.
template <class T>
using RankArray = std::array<T, kMaxRank>;

}  // namespace spinhecke
