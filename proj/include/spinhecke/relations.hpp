#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "spinhecke/algebras.hpp"
#include "spinhecke/expr.hpp"
#include "spinhecke/report.hpp"

namespace spinhecke {

struct Relation {
  std::string name;
  std::string lhs;
  std::string rhs;
};

// Defining relations (plus the standard consequences used as rewrite rules) of each family.
std::vector<Relation> defining_relations(AlgebraKind k, int n);

template <class A>
Check check_relation_in(const std::shared_ptr<const A>& alg, const Relation& r) {
  auto t0 = std::chrono::steady_clock::now();
  bool holds = parse_element(alg, r.lhs) == parse_element(alg, r.rhs);
  return make_check(r.name, holds, true, t0);
}

template <class A>
Report check_relations_in(const std::shared_ptr<const A>& alg, const std::vector<Relation>& rels) {
  Report out;
  for (const auto& r : rels) out.push_back(check_relation_in(alg, r));
  return out;
}

// Relations of src, tested on their images under map.
template <class Src, class Dst>
Report check_relations_under(const std::shared_ptr<const Src>& src, const GeneratorMap<Src, Dst>& map,
                             const std::vector<Relation>& rels, const std::string& prefix = "") {
  Report out;
  for (const auto& r : rels) {
    auto t0 = std::chrono::steady_clock::now();
    bool holds = evaluate_under(src, map, r.lhs) == evaluate_under(src, map, r.rhs);
    out.push_back(make_check(prefix + r.name, holds, true, t0));
  }
  return out;
}

}  // namespace spinhecke
