#pragma once

#include <set>
#include <string>
#include <vector>

#include "leibniz/engine.hpp"

namespace leibniz {

/// Exact image set of f on a finite-field algebra, elements encoded as
/// coordinate index vectors for set semantics.
struct ElementSet {
  std::set<std::vector<std::uint8_t>> raw;
  bool contains(const Element &e, const AlgebraDef &A) const;
  std::size_t size() const { return raw.size(); }
};

/// f(A) = { f(a_1..a_m) : a_i in A } by exhaustive evaluation.
ElementSet image_set(const AlgebraDef &A, const LeibnizPoly &f,
                     unsigned long long cost_cap = kDefaultCostCap);

/// Contains 0 and closed under addition and scalar multiples (exhaustive).
bool is_subspace(const AlgebraDef &A, const ElementSet &S);

/// Image shapes for the two-dimensional algebras.
struct ImageClass {
  enum Kind { Zero, LineKe1, ScaledSquares, WholeAlgebra, Other } kind;
  Scalar lambda; ///< ScaledSquares only
  std::string to_string(const Field &f) const;
};

/// Match image_set(A, f) against {0}, K e1, lambda K^2 e1, A, in that order.
/// f must be multihomogeneous; three-dimensional algebras report Other.
ImageClass classify_image(const AlgebraDef &A, const LeibnizPoly &f,
                          unsigned long long cost_cap = kDefaultCostCap);

} // namespace leibniz
