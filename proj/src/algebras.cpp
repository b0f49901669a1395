#include "spinhecke/algebras.hpp"

#include <array>
#include <utility>

namespace spinhecke {

namespace {

constexpr std::array<std::pair<AlgebraKind, const char*>, 12> kKinds = {{
    {AlgebraKind::Spin, "spin"},
    {AlgebraKind::Covering, "covering"},
    {AlgebraKind::HeckeT, "hecke-t"},
    {AlgebraKind::SpinAffine, "spin-affine"},
    {AlgebraKind::CoveringAffine, "covering-affine"},
    {AlgebraKind::HeckePQ, "hecke-pq"},
    {AlgebraKind::HeckeClifford, "hecke-clifford"},
    {AlgebraKind::HeckeCliffordAffine, "hecke-clifford-affine"},
    {AlgebraKind::Hecke, "hecke"},
    {AlgebraKind::HeckeAffine, "hecke-affine"},
    {AlgebraKind::Tensor, "tensor"},
    {AlgebraKind::TensorAffine, "tensor-affine"},
}};

}  // namespace

std::string algebra_kind_name(AlgebraKind k) {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "?";
}

AlgebraKind parse_algebra_kind(const std::string& name) {
  for (const auto& [kind, n] : kKinds)
    if (name == n) return kind;
  throw DomainError("unknown_algebra", "unknown algebra '" + name + "'");
}

std::vector<std::string> algebra_kind_names() {
  std::vector<std::string> out;
  for (const auto& kv : kKinds) out.emplace_back(kv.second);
  return out;
}

bool is_affine(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::SpinAffine:
    case AlgebraKind::CoveringAffine:
    case AlgebraKind::HeckePQ:
    case AlgebraKind::HeckeCliffordAffine:
    case AlgebraKind::HeckeAffine:
    case AlgebraKind::TensorAffine:
      return true;
    default:
      return false;
  }
}

AnyAlgebra make_algebra(AlgebraKind k, int n) {
  switch (k) {
    case AlgebraKind::Spin:
      return SpinAlgebra::make(n, ZMode::Minus, false);
    case AlgebraKind::Covering:
      return SpinAlgebra::make(n, ZMode::Cover, false);
    case AlgebraKind::HeckeT:
      return SpinAlgebra::make(n, ZMode::Plus, false);
    case AlgebraKind::SpinAffine:
      return SpinAlgebra::make(n, ZMode::Minus, true);
    case AlgebraKind::CoveringAffine:
      return SpinAlgebra::make(n, ZMode::Cover, true);
    case AlgebraKind::HeckePQ:
      return SpinAlgebra::make(n, ZMode::Plus, true);
    case AlgebraKind::HeckeClifford:
      return HCAlgebra::make(n, false, true);
    case AlgebraKind::HeckeCliffordAffine:
      return HCAlgebra::make(n, true, true);
    case AlgebraKind::Hecke:
      return HCAlgebra::make(n, false, false);
    case AlgebraKind::HeckeAffine:
      return HCAlgebra::make(n, true, false);
    case AlgebraKind::Tensor:
      return TensorAlgebra::make(n, false);
    case AlgebraKind::TensorAffine:
      return TensorAlgebra::make(n, true);
  }
  throw DomainError("unknown_algebra", "unknown algebra kind");
}

}  // namespace spinhecke
