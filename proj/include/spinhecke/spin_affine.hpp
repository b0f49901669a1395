#pragma once

#include <memory>
#include <utility>

#include "spinhecke/report.hpp"
#include "spinhecke/spin.hpp"
#include "spinhecke/spin_finite.hpp"

namespace spinhecke {

// Right-hand sides of the recursions for p_{i+1} and q_{i+1}, straightened.
std::pair<SpinElement, SpinElement> recursion_images(const std::shared_ptr<const SpinAlgebra>& alg, int i);

// k-th elementary symmetric polynomial in p_1..p_n.
SpinElement elementary_symmetric(const std::shared_ptr<const SpinAlgebra>& alg, int k);

// x commutes with every generator.
bool is_central(const SpinElement& x);

// e_1..e_n central; p_1 (for n >= 2) is a control that must fail.
Report center_suite(const std::shared_ptr<const SpinAlgebra>& alg);

// q_1 ... q_n central; expected to hold exactly for odd n.
Check odd_center_check(const std::shared_ptr<const SpinAlgebra>& alg);

}  // namespace spinhecke
