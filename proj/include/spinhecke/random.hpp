#pragma once

#include <memory>
#include <random>

#include "spinhecke/engine.hpp"

namespace spinhecke {

struct RandomOptions {
  int max_terms = 3;
  int max_exponent = 2;  // bound on p- and X-exponents
};

// 1 or 2 terms, exponents in [-2, 2], coefficients a/b with |a| <= 3, b in {1, 2}.
Laurent random_laurent(std::mt19937_64& rng);

template <class A>
Element<A> random_element(const std::shared_ptr<const A>& alg, std::mt19937_64& rng, const RandomOptions& opt = {}) {
  int terms = std::uniform_int_distribution<int>(1, opt.max_terms)(rng);
  Element<A> out(alg);
  for (int k = 0; k < terms; ++k)
    out += Element<A>::word(alg, alg->random_word(rng, opt.max_exponent), random_laurent(rng));
  return out;
}

}  // namespace spinhecke
