#pragma once

#include <cstddef>
#include <vector>

#include "spinhecke/matrix.hpp"
#include "spinhecke/report.hpp"
#include "spinhecke/spin.hpp"

namespace spinhecke {

// Clifford generators c_1..c_n as matrices of size 2^ceil(n/2) (Jordan-Wigner).
struct MatRep {
  int n = 0;
  std::size_t dim = 0;
  std::vector<LMatrix> mats;  // mats[i-1] = c_i
  std::vector<int> parity;    // parity of each basis vector
};

MatRep clifford_matrices(int n);
// c_i^2 = 1, c_i c_j = -c_j c_i, every c_i odd.
bool clifford_relations_hold(const MatRep& rep);

// gamma_i = sqrt(-1) (q c_i - q^-1 c_{i+1}), i = 1..n-1
std::vector<LMatrix> pi_q(int n);

// Matrix of x in the basic spin module; x must lie in the finite spin Hecke algebra.
LMatrix act(const SpinElement& x);
// Evaluates an expression over R_1..R_{n-1} directly with matrices.
LMatrix act_expression(int n, const std::string& text);

// Rank of span{gamma_i}; dimension of the algebra spanned by gamma-words of length <= n-1.
std::size_t gamma_span_rank(int n);
std::size_t gamma_algebra_dimension(int n);

Report spin_module_suite(int n, unsigned seed, int samples, bool algebra_dimension);

}  // namespace spinhecke
