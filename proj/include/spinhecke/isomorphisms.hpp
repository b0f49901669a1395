#pragma once

#include <memory>

#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/matrix.hpp"
#include "spinhecke/report.hpp"
#include "spinhecke/tensor.hpp"

namespace spinhecke {

using PhiMap = GeneratorMap<HCAlgebra, TensorAlgebra>;
using PsiMap = GeneratorMap<TensorAlgebra, HCAlgebra>;

// Hecke-Clifford -> C_n (x) spin Hecke.
//   T_i -> -1/2 R_i (c_i - c_{i+1}) + e/2 (1 - c_i c_{i+1}),  X_i^{+-1} -> p_i -+ c_i q_i
PhiMap phi_map(int n, bool affine);
// C_n (x) spin Hecke -> Hecke-Clifford.
//   R_i -> (c_i - c_{i+1}) T_i + e c_{i+1},  p_i -> (X_i + X_i^-1)/2,  q_i -> (X_i - X_i^-1) c_i / 2
PsiMap psi_map(int n, bool affine);

TensorElement phi(const HCElement& x);
HCElement psi(const TensorElement& x);

struct IsoOptions {
  unsigned seed = 1;
  int round_trips = 100;
  int pairs = 200;
  int max_exponent = 2;  // X- and p-exponents of random words (affine)
};

// Relations under both maps, super-commutation with C_n, round trips, multiplicativity, parity.
Report iso_suite(int n, bool affine, const IsoOptions& opt = {});

// Exact rank of the coefficient vectors of Phi(basis of Hecke-Clifford(n)).
std::size_t phi_basis_rank(int n);
Check phi_rank_check(int n);

}  // namespace spinhecke
