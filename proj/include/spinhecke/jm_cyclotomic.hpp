#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/poly.hpp"
#include "spinhecke/report.hpp"
#include "spinhecke/spin.hpp"

namespace spinhecke {

// Images of p_i, q_i under the evaluation map onto the finite spin Hecke algebra (p_1 -> 1, q_1 -> 0).
struct JMImages {
  std::shared_ptr<const SpinAlgebra> alg;
  std::vector<SpinElement> p;  // p[i-1]
  std::vector<SpinElement> q;
};

JMImages jm_images(int n);
GeneratorMap<SpinAlgebra, SpinAlgebra> jm_map(const JMImages& jm);

// The closed forms of p_2, q_2, p_3, q_3, compared as elements and as printed text.
Report jm_formula_checks(const JMImages& jm);
// Every relation of the affine spin Hecke algebra holds for the images.
Report jm_relation_suite(int n);

// J_1 = 1, J_{i+1} = (T_i + e c_i c_{i+1}) J_i T_i in the finite Hecke-Clifford algebra, with inverses.
std::pair<std::vector<HCElement>, std::vector<HCElement>> hc_jucys_murphy(int n);
// p_i = Phi(J_i + J_i^-1)/2 and q_i = Phi((J_i - J_i^-1) c_i)/2.
Report jm_hc_crosscheck(int n);

// h_0(p) + h_1(p) q in C[p, q]/(p^2 + q^2 - 1)
struct A1Element {
  QPoly even;
  QPoly odd;

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  friend A1Element operator+(const A1Element& a, const A1Element& b) { return {a.even + b.even, a.odd + b.odd}; }
  friend A1Element operator-(const A1Element& a, const A1Element& b) { return {a.even - b.even, a.odd - b.odd}; }
  friend A1Element operator*(const A1Element& a, const A1Element& b);
};

A1Element operator*(const A1Element& a, const A1Element& b);

// Polynomial in p1 (or p) and q1 (or q) with constant coefficients.
A1Element parse_a1(const std::string& text);

enum class IdealCase { F = 1, GQ = 2, PlusOne = 3, MinusOne = 4 };

struct CycIdeal {
  IdealCase form;
  QPoly f;
  QPoly g;
};

std::string ideal_case_text(IdealCase c);

// Minimal monic f, g with f(p) and g(p) q in the ideal generated by homogeneous elements.
CycIdeal classify_ideal(const std::vector<A1Element>& gens);
// Validates a claimed minimal pair (f, g) and assigns its case.
CycIdeal ideal_from_fg(const QPoly& f, const QPoly& g);
// (deg f + deg g)^n n!
unsigned long long cyclotomic_dim(const CycIdeal& ideal, int n);

using LPoly = UPoly<Laurent>;

struct CyclotomicImage {
  int case_number = 0;      // 1..4, by parity of d and a_0
  int degree = 0;
  int k = 0;
  Laurent a0;
  LPoly even;               // Phi(X^-k F) = even(p_1) + odd(p_1) c_1 q_1
  LPoly odd;
  IdealCase shape;          // matched target shape
  LPoly poly;               // extracted f (shape 1) or g, made monic
  bool degrees_ok = false;  // degree table: k, k-1, k, k
  std::string image_text;
};

// F given as text in X1 (or X); coefficients must satisfy a_d = 1, a_i = a_0 a_{d-i}.
CyclotomicImage theorem63_map(const std::string& F, int n = 1);
CyclotomicImage theorem63_map(const LPoly& F, int n = 1);

}  // namespace spinhecke
