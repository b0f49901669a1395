#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spinhecke/gen.hpp"

namespace spinhecke {

// One-line notation, values 1-based; positions past n hold the identity.
using Perm = RankArray<std::uint8_t>;

Perm identity_perm();
int perm_length(const Perm& s, int n);
bool is_identity(const Perm& s, int n);
// Largest i with s(i) > s(i+1); 0 for the identity.
int last_descent(const Perm& s, int n);
// s * s_i, i.e. positions i and i+1 swapped.
Perm times_simple(Perm s, int i);
// Reduced word ending in last_descent, built recursively from the right.
std::vector<int> reduced_word(Perm s, int n);
std::vector<Perm> all_perms(int n);
Perm random_perm(std::mt19937_64& rng, int n);

// Sign of c^a c^b relative to c^(a xor b) for Clifford masks.
int clifford_sign(std::uint16_t a, std::uint16_t b);

}  // namespace spinhecke
