#include "spinhecke/gen.hpp"

#include <array>
#include <utility>

namespace spinhecke {

namespace {

constexpr std::array<std::pair<GenKind, const char*>, 14> kNames = {{
    {GenKind::R, "R"},
    {GenKind::Tt, "Tt"},
    {GenKind::Tc, "Tc"},
    {GenKind::T, "T"},
    {GenKind::c, "c"},
    {GenKind::X, "X"},
    {GenKind::Xinv, "Xi"},
    {GenKind::p, "p"},
    {GenKind::q, "q"},
    {GenKind::Pt, "Pt"},
    {GenKind::Qt, "Qt"},
    {GenKind::P, "P"},
    {GenKind::Q, "Q"},
    {GenKind::z, "z"},
}};

}  // namespace

std::string kind_name(GenKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

bool kind_from_name(const std::string& name, GenKind& out) {
  for (const auto& [kind, n] : kNames) {
    if (name == n) {
      out = kind;
      return true;
    }
  }
  return false;
}

std::string gen_name(const Gen& g) {
  if (g.kind == GenKind::z) return "z";
  return kind_name(g.kind) + std::to_string(g.index);
}

}  // namespace spinhecke
