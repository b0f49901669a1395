#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinhecke/algebras.hpp"
#include "spinhecke/report.hpp"

namespace spinhecke {

struct SuiteArgs {
  int n = 3;
  unsigned seed = 1;
  std::optional<AlgebraKind> algebra;  // only for suites that take one
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteArgs& args);

// Size of the standard basis of a finite algebra.
std::size_t algebra_dimension(AlgebraKind k, int n);
// Even part of the spin or covering Hecke algebra.
std::size_t even_dimension(AlgebraKind k, int n);

Report dimension_suite(int n);
Check closure_suite(AlgebraKind k, int n);
Report relations_suite(AlgebraKind k, int n);

// (xy)z = x(yz) on seeded triples; every product is a fixed point of renormalize.
Report associativity_suite(AlgebraKind k, int n, unsigned seed, int triples);
// renormalize is the identity on the outputs of the main constructions.
Report idempotence_suite(int n);

}  // namespace spinhecke
