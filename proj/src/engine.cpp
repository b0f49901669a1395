#include "spinhecke/engine.hpp"

namespace spinhecke {

namespace {

thread_local long g_remaining = 0;
thread_local int g_depth = 0;
long g_budget = kDefaultBudget;

}  // namespace

long set_rewrite_budget(long steps) {
  long old = g_budget;
  g_budget = steps;
  return old;
}

namespace detail {

void budget_enter() {
  if (g_depth++ == 0) g_remaining = g_budget;
}

void budget_leave() { --g_depth; }

void budget_tick() {
  if (--g_remaining < 0)
    throw BudgetExceeded("rewriting exceeded " + std::to_string(g_budget) + " steps");
}

}  // namespace detail

}  // namespace spinhecke

#include "spinhecke/random.hpp"

namespace spinhecke {

Laurent random_laurent(std::mt19937_64& rng) {
  int terms = std::uniform_int_distribution<int>(1, 2)(rng);
  Laurent out;
  while (out.is_zero()) {
    for (int k = 0; k < terms; ++k) {
      int e = std::uniform_int_distribution<int>(-2, 2)(rng);
      int a = std::uniform_int_distribution<int>(-3, 3)(rng);
      int b = std::uniform_int_distribution<int>(1, 2)(rng);
      out += Laurent(GaussRat::rational(a, b), e);
    }
  }
  return out;
}

}  // namespace spinhecke
