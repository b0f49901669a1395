#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/spin.hpp"
#include "spinhecke/tensor.hpp"

namespace spinhecke {

enum class AlgebraKind {
  Spin,
  Covering,
  HeckeT,
  SpinAffine,
  CoveringAffine,
  HeckePQ,
  HeckeClifford,
  HeckeCliffordAffine,
  Hecke,
  HeckeAffine,
  Tensor,
  TensorAffine,
};

// "spin", "covering", "hecke-t", "spin-affine", "covering-affine", "hecke-pq",
// "hecke-clifford", "hecke-clifford-affine", "hecke", "hecke-affine", "tensor", "tensor-affine"
std::string algebra_kind_name(AlgebraKind k);
AlgebraKind parse_algebra_kind(const std::string& name);
std::vector<std::string> algebra_kind_names();
bool is_affine(AlgebraKind k);

using AnyAlgebra = std::variant<std::shared_ptr<const SpinAlgebra>, std::shared_ptr<const HCAlgebra>,
                                std::shared_ptr<const TensorAlgebra>>;
using AnyElement = std::variant<SpinElement, HCElement, TensorElement>;

AnyAlgebra make_algebra(AlgebraKind k, int n);

}  // namespace spinhecke
