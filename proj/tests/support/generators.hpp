#pragma once

// Deterministic random generators for the property suites.

#include <random>

#include "leibniz/field.hpp"
#include "leibniz/poly.hpp"

namespace leibniz::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Scalar random_scalar(Rng &rng, const Field &F) {
  if (F.is_finite())
    return Scalar(std::uint8_t(uniform(rng, 0, int(F.q()) - 1)));
  int num = uniform(rng, -9, 9);
  int den = uniform(rng, 1, 9);
  return F.from_fraction(num, den);
}

inline Scalar random_nonzero_scalar(Rng &rng, const Field &F) {
  for (;;) {
    Scalar s = random_scalar(rng, F);
    if (!F.is_zero(s))
      return s;
  }
}

inline Word random_word(Rng &rng, int max_var, int max_len) {
  int len = uniform(rng, 1, max_len);
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(uniform(rng, 1, max_var));
  return w;
}

inline LeibnizPoly random_poly(Rng &rng, const Field &F, int max_var,
                               int max_len, int max_terms) {
  LeibnizPoly p(F);
  int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i)
    p.add_term(random_word(rng, max_var, max_len), random_scalar(rng, F));
  return p;
}

} // namespace leibniz::testgen
