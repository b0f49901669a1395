#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spinhecke/report.hpp"
#include "spinhecke/spin.hpp"

namespace spinhecke {

using SpinMap = GeneratorMap<SpinAlgebra, SpinAlgebra>;

std::vector<SpinWord> enumerate_basis(const SpinAlgebra& alg);
// Words of even total staircase length.
std::vector<SpinWord> even_basis(const SpinAlgebra& alg);

// sigma, s, bar, tau on the finite spin algebra; sigma+, sigma-, s_p, s_q, bar_p, bar_q, tau
// on the affine one.
std::vector<std::string> involution_names(bool affine);
SpinMap involution_map(const std::shared_ptr<const SpinAlgebra>& alg, const std::string& name);
SpinElement apply_involution(const std::string& name, const SpinElement& x);

// z -> sign from a covering algebra onto the spin (sign -1) or z = 1 (sign +1) algebra.
SpinMap cover_quotient_map(const std::shared_ptr<const SpinAlgebra>& covering, int sign);
SpinElement cover_quotient(const SpinElement& x, int sign);

// Products of basis words stay inside the enumerated basis.
Check closure_check(const std::shared_ptr<const SpinAlgebra>& alg);

// Relations, involutivity and (anti)multiplicativity of every involution on seeded samples.
Report involution_suite(const std::shared_ptr<const SpinAlgebra>& alg, unsigned seed, int samples);

// Both quotients are homomorphisms and carry the covering relations onto the target relations.
Report cover_quotient_suite(int n, bool affine, unsigned seed, int samples);

}  // namespace spinhecke
