#pragma once

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := atom ('^' int)?
// atom := number | number '/' number | identifier | '(' expr ')'
// Identifiers q, i, e are scalars (e = q - q^-1); a name followed by digits is an indexed
// generator (R1, Tt2, Xi1, ...); any other bare name is an unindexed generator (z, X).

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "spinhecke/coeff.hpp"
#include "spinhecke/engine.hpp"
#include "spinhecke/errors.hpp"
#include "spinhecke/gen.hpp"

namespace spinhecke {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  enum class Kind { Number, Param, Gen, Sum, Product, Power };
  Kind kind;
  std::size_t offset = 0;
  GaussRat number;             // Number
  char param = 0;              // Param: 'q', 'e' or 'i'
  std::string name;            // Gen
  int index = -1;              // Gen; -1 when unindexed
  std::vector<AstPtr> children;
  std::vector<int> signs;      // Sum: +1 / -1 per child
  int exponent = 1;            // Power
};

AstPtr parse_ast(const std::string& text);

bool is_scalar_ast(const Ast& a);
Laurent eval_scalar(const Ast& a);

// Parses a Laurent polynomial such as "3/2*q^-1 + i*q^2" or "e^2 + 2".
Laurent parse_laurent(const std::string& text);

struct GenRef {
  std::string name;
  int index;
  std::size_t offset;
  // Resolved generator, throws ParseError for unknown names.
  Gen to_gen() const;
};

template <class V>
struct EvalContext {
  std::function<V(const Laurent&)> scalar;
  // inverse = true asks for the inverse generator (only X-type generators have one)
  std::function<V(const GenRef&, bool inverse)> gen;
  // multiply right-to-left, for anti-homomorphisms
  bool reversed = false;
};

template <class V>
V evaluate(const Ast& a, const EvalContext<V>& ctx) {
  if (is_scalar_ast(a)) return ctx.scalar(eval_scalar(a));
  switch (a.kind) {
    case Ast::Kind::Gen:
      return ctx.gen(GenRef{a.name, a.index, a.offset}, false);
    case Ast::Kind::Sum: {
      V acc = ctx.scalar(Laurent());
      for (std::size_t k = 0; k < a.children.size(); ++k) {
        V c = evaluate(*a.children[k], ctx);
        acc = a.signs[k] > 0 ? acc + c : acc - c;
      }
      return acc;
    }
    case Ast::Kind::Product: {
      Laurent s(1);
      bool have = false;
      V acc = ctx.scalar(Laurent(1));
      for (const auto& c : a.children) {
        if (is_scalar_ast(*c)) {
          s *= eval_scalar(*c);
          continue;
        }
        V v = evaluate(*c, ctx);
        acc = have ? (ctx.reversed ? v * acc : acc * v) : v;
        have = true;
      }
      if (!have) return ctx.scalar(s);
      return s.is_one() ? acc : ctx.scalar(s) * acc;
    }
    case Ast::Kind::Power: {
      const Ast& base = *a.children[0];
      int k = a.exponent;
      V b = ctx.scalar(Laurent(1));
      if (k < 0) {
        if (base.kind != Ast::Kind::Gen)
          throw ParseError("negative_power", "negative exponent on a non-invertible expression", a.offset);
        b = ctx.gen(GenRef{base.name, base.index, base.offset}, true);
        k = -k;
      } else {
        b = evaluate(base, ctx);
      }
      V acc = ctx.scalar(Laurent(1));
      for (int i = 0; i < k; ++i) acc = acc * b;
      return acc;
    }
    default:
      throw ParseError("internal", "unexpected node", a.offset);
  }
}

// Evaluates an expression as an element of alg.
template <class A>
Element<A> parse_element(const std::shared_ptr<const A>& alg, const std::string& text);

template <class A>
EvalContext<Element<A>> element_context(const std::shared_ptr<const A>& alg) {
  EvalContext<Element<A>> ctx;
  ctx.scalar = [alg](const Laurent& c) { return Element<A>::scalar(alg, c); };
  ctx.gen = [alg](const GenRef& ref, bool inverse) {
    Gen g = ref.to_gen();
    if (inverse) {
      if (g.kind == GenKind::X) g.kind = GenKind::Xinv;
      else if (g.kind == GenKind::Xinv) g.kind = GenKind::X;
      else throw ParseError("negative_power", gen_name(g) + " is not invertible here", ref.offset);
    }
    if (!alg->valid_gen(g)) {
      Gen probe = g;
      probe.index = 1;
      bool family = alg->valid_gen(probe) || (g.index > 1 && alg->valid_gen(Gen{g.kind, g.index - 1}));
      if (family)
        throw ParseError("index_out_of_range", gen_name(g) + " is out of range for " + alg->name(), ref.offset);
      throw ParseError("unknown_generator", ref.name + " is not a generator of " + alg->name(), ref.offset);
    }
    return generator(alg, g);
  };
  return ctx;
}

template <class A>
Element<A> parse_element(const std::shared_ptr<const A>& alg, const std::string& text) {
  auto ast = parse_ast(text);
  return evaluate(*ast, element_context(alg));
}

// Evaluates text over a source alphabet by substituting images from map.
template <class Src, class Dst>
Element<Dst> evaluate_under(const std::shared_ptr<const Src>& src, const GeneratorMap<Src, Dst>& map,
                            const std::string& text) {
  auto ast = parse_ast(text);
  EvalContext<Element<Dst>> ctx;
  auto target = map.target();
  auto src_ctx = element_context(src);
  ctx.scalar = [target, &map](const Laurent& c) { return Element<Dst>::scalar(target, map.scalar(c)); };
  ctx.gen = [&map, src_ctx](const GenRef& ref, bool inverse) {
    // validates against the source, then substitutes
    auto e = src_ctx.gen(ref, inverse);
    return map(e);
  };
  ctx.reversed = map.anti();
  return evaluate(*ast, ctx);
}

}  // namespace spinhecke
