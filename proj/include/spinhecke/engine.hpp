#pragma once

// Generic straightening engine. An algebra type A supplies
//   Word, WordHash, identity_word(), letters(w), letter_weight(g), letter_rank(g),
//   check_gen(g), parity(g), peel(w), unpeel(f, w), absorb(w, g, out), word_text(w),
//   cache(), name() and operator==.
// absorb rewrites w*g into outcomes coeff * prefix * pending...; an outcome with no
// pending letters must already be a normal word. peel splits w = f*core where f
// multiplies normal words on the left monomially (unpeel returns the sign).

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinhecke/coeff.hpp"
#include "spinhecke/errors.hpp"
#include "spinhecke/gen.hpp"

namespace spinhecke {

template <class Word>
using Terms = std::vector<std::pair<Word, Laurent>>;

template <class Word>
struct Rewrite {
  Laurent coeff;
  Word prefix;
  std::vector<Gen> pending;
};

// Rewriting steps allowed per top-level operation.
inline constexpr long kDefaultBudget = 10'000'000;

namespace detail {

void budget_enter();
void budget_leave();
void budget_tick();

struct BudgetScope {
  BudgetScope() { budget_enter(); }
  ~BudgetScope() { budget_leave(); }
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;
};

}  // namespace detail

// Overrides the per-operation budget; returns the previous value.
long set_rewrite_budget(long steps);

template <class Word, class Hash>
class Accumulator {
 public:
  void add(const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
  void add_terms(const Terms<Word>& t) {
    for (const auto& [w, c] : t) add(w, c);
  }
  // Sorted by Word::operator<, zeros removed.
  Terms<Word> finish() {
    Terms<Word> out;
    out.reserve(map_.size());
    for (auto& [w, c] : map_)
      if (!c.is_zero()) out.emplace_back(w, std::move(c));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    map_.clear();
    return out;
  }
  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<Word, Laurent, Hash> map_;
};

template <class Word, class Hash>
class StepCache {
 public:
  using Result = std::shared_ptr<const Terms<Word>>;

  Result find(const Word& w, Gen g) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(Key{w, g});
    return it == map_.end() ? nullptr : it->second;
  }
  void insert(const Word& w, Gen g, Result r) const {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(Key{w, g}, std::move(r));
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  struct Key {
    Word w;
    Gen g;
    bool operator==(const Key& o) const { return g == o.g && w == o.w; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return Hash{}(k.w) * 1000003u ^ gen_hash(k.g); }
  };
  mutable std::mutex mu_;
  mutable std::unordered_map<Key, Result, KeyHash> map_;
};

namespace detail {

template <class A>
std::vector<std::pair<int, int>> order_key(const A& a, const std::vector<Gen>& letters) {
  std::vector<std::pair<int, int>> key;
  int weight = 0;
  for (const Gen& g : letters) {
    int wt = a.letter_weight(g);
    if (wt == 0) continue;
    weight += wt;
    key.emplace_back(wt, a.letter_rank(g));
  }
  key.insert(key.begin(), {weight, 0});
  return key;
}

inline bool key_less(const std::vector<std::pair<int, int>>& x, const std::vector<std::pair<int, int>>& y) {
  if (x[0].first != y[0].first) return x[0].first < y[0].first;
  for (std::size_t k = 1; k < x.size() && k < y.size(); ++k)
    if (x[k].second != y[k].second) return x[k].second < y[k].second;
  return x.size() < y.size();
}

template <class A>
typename StepCache<typename A::Word, typename A::WordHash>::Result step(const A& a,
                                                                       const typename A::Word& w,
                                                                       Gen g);

// Right-multiplies a list of normal terms by one generator, accumulating into acc.
template <class A, class Acc>
void right_mul_into(const A& a, const Terms<typename A::Word>& x, Gen g, Acc& acc) {
  for (const auto& [w, c] : x) {
    auto [factor, core] = a.peel(w);
    auto r = step(a, core, g);
    for (const auto& [w2, c2] : *r) {
      typename A::Word out = w2;
      int sign = a.unpeel(factor, out);
      Laurent k = c * c2;
      if (sign < 0) k = -k;
      acc.add(out, k);
    }
  }
}

template <class A>
Terms<typename A::Word> right_mul_terms(const A& a, const Terms<typename A::Word>& x, Gen g) {
  Accumulator<typename A::Word, typename A::WordHash> acc;
  right_mul_into(a, x, g, acc);
  return acc.finish();
}

template <class A>
typename StepCache<typename A::Word, typename A::WordHash>::Result step(const A& a,
                                                                       const typename A::Word& w,
                                                                       Gen g) {
  using Word = typename A::Word;
  if (auto hit = a.cache().find(w, g)) return hit;
  budget_tick();
  std::vector<Rewrite<Word>> rewrites;
  a.absorb(w, g, rewrites);
  Accumulator<Word, typename A::WordHash> acc;
  std::vector<std::pair<int, int>> before;
  for (auto& rw : rewrites) {
    if (rw.pending.empty()) {
      acc.add(rw.prefix, rw.coeff);
      continue;
    }
    if (before.empty()) {
      auto l = a.letters(w);
      l.push_back(g);
      before = order_key(a, l);
    }
    auto after_letters = a.letters(rw.prefix);
    after_letters.insert(after_letters.end(), rw.pending.begin(), rw.pending.end());
    if (!key_less(order_key(a, after_letters), before))
      throw Error("termination_order", "rewrite rule does not decrease the order in " + a.name());
    Terms<Word> cur{{rw.prefix, rw.coeff}};
    for (const Gen& h : rw.pending) cur = right_mul_terms(a, cur, h);
    acc.add_terms(cur);
  }
  auto result = std::make_shared<const Terms<Word>>(acc.finish());
  a.cache().insert(w, g, result);
  return result;
}

}  // namespace detail

template <class A>
class Element {
 public:
  using Algebra = A;
  using Word = typename A::Word;

  Element() = default;
  explicit Element(std::shared_ptr<const A> alg) : alg_(std::move(alg)) {}
  Element(std::shared_ptr<const A> alg, Terms<Word> sorted_terms)
      : alg_(std::move(alg)), terms_(std::move(sorted_terms)) {}

  static Element scalar(std::shared_ptr<const A> alg, const Laurent& c) {
    Element e(alg);
    if (!c.is_zero()) e.terms_.emplace_back(alg->identity_word(), c);
    return e;
  }
  static Element word(std::shared_ptr<const A> alg, const Word& w, const Laurent& c = Laurent(1)) {
    Element e(std::move(alg));
    if (!c.is_zero()) e.terms_.emplace_back(w, c);
    return e;
  }

  const A& algebra() const { return *alg_; }
  const std::shared_ptr<const A>& algebra_ptr() const { return alg_; }
  const Terms<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Laurent coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const auto& t, const Word& x) { return t.first < x; });
    if (it != terms_.end() && it->first == w) return it->second;
    return Laurent();
  }

  Element& operator+=(const Element& o) { return *this = combine(*this, o, false); }
  Element& operator-=(const Element& o) { return *this = combine(*this, o, true); }
  friend Element operator+(const Element& a, const Element& b) { return combine(a, b, false); }
  friend Element operator-(const Element& a, const Element& b) { return combine(a, b, true); }
  Element operator-() const {
    Element r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Element operator*(const Laurent& c, const Element& x) {
    Element r(x.alg_);
    if (c.is_zero()) return r;
    r.terms_.reserve(x.terms_.size());
    for (const auto& [w, k] : x.terms_) {
      Laurent v = c * k;
      if (!v.is_zero()) r.terms_.emplace_back(w, std::move(v));
    }
    return r;
  }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_ && same_algebra(a, b);
  }

  // q -> q^-1 on every coefficient.
  Element bar_coefficients() const {
    Element r = *this;
    for (auto& t : r.terms_) t.second = t.second.bar();
    return r;
  }

  // -1 when the element is not homogeneous, else 0 or 1 (0 for zero).
  int parity() const {
    int p = -2;
    for (const auto& t : terms_) {
      int w = alg_->word_parity(t.first);
      if (p == -2) p = w;
      else if (p != w) return -1;
    }
    return p == -2 ? 0 : p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      auto [text, atomic] = std::pair<std::string, bool>{c.to_string(),
                                                         c.is_monomial() && c.terms()[0].second.is_atomic()};
      textfmt::append_term(out, text, atomic, alg_->word_text(w));
    }
    return out;
  }

 private:
  static bool same_algebra(const Element& a, const Element& b) {
    if (a.alg_ == b.alg_) return true;
    if (!a.alg_ || !b.alg_) return a.terms_.empty() || b.terms_.empty();
    return *a.alg_ == *b.alg_;
  }
  static void require_same(const Element& a, const Element& b) {
    if (!same_algebra(a, b))
      throw DomainError("mismatched_algebra", "operands live in different algebras");
  }

  static Element combine(const Element& a, const Element& b, bool subtract) {
    if (!a.alg_) return subtract ? -b : b;
    if (!b.alg_) return a;
    require_same(a, b);
    Element r(a.alg_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        Laurent s = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Element multiply(const Element& a, const Element& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Element(a.alg_ ? a.alg_ : b.alg_);
    require_same(a, b);
    const A& alg = *a.alg_;
    detail::BudgetScope scope;
    using Hash = typename A::WordHash;
    std::unordered_map<Word, std::vector<std::pair<Word, const Laurent*>>, Hash> groups;
    std::vector<Word> order;
    for (const auto& [w, c] : a.terms_) {
      auto [factor, core] = alg.peel(w);
      auto [it, inserted] = groups.try_emplace(core);
      if (inserted) order.push_back(core);
      it->second.emplace_back(factor, &c);
    }
    std::vector<std::vector<Gen>> b_letters;
    b_letters.reserve(b.terms_.size());
    for (const auto& t : b.terms_) b_letters.push_back(alg.letters(t.first));
    // visit right terms in letter order so shared prefixes are straightened once per core
    std::vector<std::size_t> visit(b.terms_.size());
    for (std::size_t k = 0; k < visit.size(); ++k) visit[k] = k;
    auto gen_less = [](const Gen& x, const Gen& y) {
      return x.kind != y.kind ? x.kind < y.kind : x.index < y.index;
    };
    std::sort(visit.begin(), visit.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(b_letters[x].begin(), b_letters[x].end(), b_letters[y].begin(),
                                          b_letters[y].end(), gen_less);
    });
    Accumulator<Word, Hash> acc;
    for (const Word& core : order) {
      Accumulator<Word, Hash> partial;
      std::vector<Terms<Word>> stack;  // stack[j] = core * first j letters of the previous term
      const std::vector<Gen>* prev = nullptr;
      for (std::size_t k : visit) {
        const auto& letters = b_letters[k];
        std::size_t common = 0;
        if (prev)
          while (common < prev->size() && common < letters.size() && (*prev)[common] == letters[common]) ++common;
        stack.resize(common + 1);
        if (common == 0) stack[0] = Terms<Word>{{core, Laurent(1)}};
        for (std::size_t j = common; j < letters.size(); ++j)
          stack.push_back(detail::right_mul_terms(alg, stack.back(), letters[j]));
        const Laurent& cb = b.terms_[k].second;
        for (const auto& [w, c] : stack.back()) partial.add(w, c * cb);
        prev = &letters;
      }
      Terms<Word> r = partial.finish();
      for (const auto& [factor, ca] : groups[core]) {
        for (const auto& [w, c] : r) {
          Word out = w;
          int sign = alg.unpeel(factor, out);
          Laurent k = *ca * c;
          if (sign < 0) k = -k;
          acc.add(out, k);
        }
      }
    }
    return Element(a.alg_, acc.finish());
  }

  std::shared_ptr<const A> alg_;
  Terms<Word> terms_;
};

// Element times a single generator.
template <class A>
Element<A> right_mul(const Element<A>& x, Gen g) {
  x.algebra().check_gen(g);
  detail::BudgetScope scope;
  return Element<A>(x.algebra_ptr(), detail::right_mul_terms(x.algebra(), x.terms(), g));
}

// Normal form of c * g1 * g2 * ... .
template <class A>
Element<A> word_product(std::shared_ptr<const A> alg, const std::vector<Gen>& letters,
                        const Laurent& c = Laurent(1)) {
  detail::BudgetScope scope;
  Terms<typename A::Word> cur;
  if (!c.is_zero()) cur.emplace_back(alg->identity_word(), c);
  for (const Gen& g : letters) {
    alg->check_gen(g);
    cur = detail::right_mul_terms(*alg, cur, g);
  }
  return Element<A>(std::move(alg), std::move(cur));
}

template <class A>
Element<A> generator(std::shared_ptr<const A> alg, Gen g) {
  return word_product(std::move(alg), std::vector<Gen>{g});
}

// Re-straightens every word from its letters; a normal form is a fixed point.
template <class A>
Element<A> renormalize(const Element<A>& x) {
  if (x.is_zero()) return x;
  // 1 * x straightens every word of x from its letters
  return Element<A>::scalar(x.algebra_ptr(), Laurent(1)) * x;
}

template <class A>
Element<A> power(const Element<A>& x, int k) {
  if (k < 0) throw DomainError("negative_power", "negative power of a general element");
  auto r = Element<A>::scalar(x.algebra_ptr(), Laurent(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

template <class A>
Element<A> commutator(const Element<A>& x, const Element<A>& y) {
  return x * y - y * x;
}

// Algebra map given on generators, extended multiplicatively (or anti-multiplicatively).
template <class Src, class Dst>
class GeneratorMap {
 public:
  using ImageFn = std::function<Element<Dst>(Gen)>;

  GeneratorMap(std::shared_ptr<const Dst> target, ImageFn image, bool anti = false,
               bool bar_scalars = false)
      : target_(std::move(target)), image_(std::move(image)), anti_(anti), bar_(bar_scalars) {}

  const std::shared_ptr<const Dst>& target() const { return target_; }
  bool anti() const { return anti_; }
  bool bars_scalars() const { return bar_; }

  Element<Dst> image(Gen g) const {
    for (const auto& [h, e] : cache_)
      if (h == g) return e;
    Element<Dst> e = image_(g);
    cache_.emplace_back(g, e);
    return e;
  }

  Laurent scalar(const Laurent& c) const { return bar_ ? c.bar() : c; }

  Element<Dst> operator()(const Element<Src>& x) const {
    Element<Dst> out(target_);
    for (const auto& [w, c] : x.terms()) {
      auto letters = x.algebra().letters(w);
      if (anti_) std::reverse(letters.begin(), letters.end());
      auto acc = Element<Dst>::scalar(target_, scalar(c));
      for (const Gen& g : letters) acc = acc * image(g);
      out += acc;
    }
    return out;
  }

 private:
  std::shared_ptr<const Dst> target_;
  ImageFn image_;
  bool anti_;
  bool bar_;
  mutable std::vector<std::pair<Gen, Element<Dst>>> cache_;
};

}  // namespace spinhecke
