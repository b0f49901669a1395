#pragma once

#include <memory>
#include <string>

#include "spinhecke/report.hpp"
#include "spinhecke/spin.hpp"

namespace spinhecke {

// prod_{i<j} (p_i - p_j)^2 in the affine spin Hecke algebra.
SpinElement delta(const std::shared_ptr<const SpinAlgebra>& alg);

// Left division by a polynomial d in the p's; false when d does not divide x exactly.
bool divide_by_p_polynomial(const SpinElement& x, const SpinElement& d, SpinElement& out);

// num * delta^-dpow
class LocElement {
 public:
  LocElement() = default;
  explicit LocElement(SpinElement num, int dpow = 0);

  const SpinElement& num() const { return num_; }
  int dpow() const { return dpow_; }
  const std::shared_ptr<const SpinAlgebra>& algebra_ptr() const { return num_.algebra_ptr(); }

  friend LocElement operator+(const LocElement& a, const LocElement& b);
  friend LocElement operator-(const LocElement& a, const LocElement& b);
  friend LocElement operator*(const LocElement& a, const LocElement& b);
  friend LocElement operator*(const Laurent& c, const LocElement& a);
  friend bool operator==(const LocElement& a, const LocElement& b);

  // Cancels delta from the numerator as long as it divides exactly.
  LocElement reduced() const;
  std::string to_string() const;

 private:
  SpinElement num_;
  int dpow_ = 0;
};

LocElement operator+(const LocElement& a, const LocElement& b);
LocElement operator-(const LocElement& a, const LocElement& b);
LocElement operator*(const LocElement& a, const LocElement& b);
LocElement operator*(const Laurent& c, const LocElement& a);
bool operator==(const LocElement& a, const LocElement& b);

LocElement localize(const SpinElement& x);
// (p_i - p_{i+1})^-1
LocElement invert_p_diff(const std::shared_ptr<const SpinAlgebra>& alg, int i);
// R_i - e (p_i - p_{i+1})^-1 (q_i - q_{i+1})
LocElement gimel(const std::shared_ptr<const SpinAlgebra>& alg, int i);

struct IntertwinerOptions {
  bool braid = true;
  bool far = true;
};

Report intertwiner_suite(const std::shared_ptr<const SpinAlgebra>& alg, const IntertwinerOptions& opt = {});

// delta central, (p_i - p_{i+1}) times its inverse is 1, arithmetic and reduction consistency.
Report localization_suite(const std::shared_ptr<const SpinAlgebra>& alg);

// Left multiplication by delta is injective on basis words of p-degree <= max_degree.
Check delta_regularity_check(const std::shared_ptr<const SpinAlgebra>& alg, int max_degree);

}  // namespace spinhecke
