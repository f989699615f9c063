#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/commpoly.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/rr7.hpp"

namespace leibniz {

/// Raised when an exhaustive check would exceed the configured budget.
struct cost_cap_exceeded : std::runtime_error {
  explicit cost_cap_exceeded(unsigned long long estimate,
                             unsigned long long cap)
      : std::runtime_error("cost cap exceeded: estimated " +
                           std::to_string(estimate) + " field operations, cap " +
                           std::to_string(cap)),
        estimate(estimate), cap(cap) {}
  unsigned long long estimate, cap;
};

inline constexpr unsigned long long kDefaultCostCap = 100'000'000ull;

/// Coordinate vector over the algebra's basis.
using Element = std::vector<Scalar>;

Element zero_element(const AlgebraDef &A);
Element basis_element(const AlgebraDef &A, int i); ///< 0-based
Element multiply(const AlgebraDef &A, const Element &a, const Element &b);
bool element_is_zero(const AlgebraDef &A, const Element &e);
std::string element_to_string(const AlgebraDef &A, const Element &e);

/// Word-by-word left-normed evaluation; t covers all variables of f.
Element evaluate(const AlgebraDef &A, const LeibnizPoly &f,
                 const std::map<int, Element> &t);

/// Element with commuting-indeterminate coordinates, for generic evaluation.
using GenericElement = std::vector<CommPoly>;
GenericElement multiply_generic(const AlgebraDef &A, const GenericElement &a,
                                const GenericElement &b);
GenericElement evaluate_generic(const AlgebraDef &A, const LeibnizPoly &f,
                                const std::map<int, GenericElement> &t);
/// The fully generic point x_i = sum_k g_{i,k} e_k, indeterminates indexed
/// densely by (position of i in vars, k).
std::map<int, GenericElement> generic_point(const AlgebraDef &A,
                                            const std::vector<int> &vars);

/// Polynomial identity test.  Multilinear f: all basis tuples (sufficient by
/// multilinearity over any field).  Otherwise finite fields are checked
/// exhaustively when the estimate fits the cap and by exact generic
/// evaluation with Frobenius reduction when it does not; the rationals use
/// generic evaluation.
bool is_identity(const AlgebraDef &A, const LeibnizPoly &f,
                 unsigned long long cost_cap = kDefaultCostCap);

/// dim of the multidegree-d component of the relatively free algebra
/// computed as the evaluation rank of the component's words.
std::size_t codimension(const AlgebraDef &A, const Multidegree &d,
                        unsigned long long cost_cap = kDefaultCostCap);

/// c_n shortcut: codimension at the multilinear multidegree {1..n: 1}.
std::size_t codimension_n(const AlgebraDef &A, int n,
                          unsigned long long cost_cap = kDefaultCostCap);

/// The kernel P_d `intersect` T(A) as a row space over the component words
/// (identities of multidegree d), via evaluation.
RowSpace evaluation_kernel(const AlgebraDef &A, const Multidegree &d,
                           unsigned long long cost_cap = kDefaultCostCap);

/// A multidegree component of the T-ideal generated by gens.
struct ComponentSpace {
  Multidegree d;
  std::vector<Word> words;       ///< canonical order
  std::vector<std::vector<Scalar>> rows; ///< reduced echelon spanning rows
  std::size_t rank = 0;
};

/// Span of the degree-d members of <gens>_T, by the seeded fixpoint:
/// substitution instances (words, and sums of equal-multidegree words into
/// nonlinear slots, which carries the polarizations in every
/// characteristic), closed under single-variable multiplications from lower
/// multidegrees, iterated until the rank stabilizes.
ComponentSpace tideal_component(const Field &field,
                                const std::vector<LeibnizPoly> &gens,
                                const Multidegree &d,
                                unsigned long long cost_cap = kDefaultCostCap);

/// Membership f in <gens>_T.  Multihomogeneous f reduce against their
/// component span.  Mixed f are supported over finite fields through a
/// bounded graded region (regular generators relate different multidegrees);
/// over infinite fields mixed f split into parts.
bool in_tideal(const LeibnizPoly &f, const std::vector<LeibnizPoly> &gens,
               unsigned long long cost_cap = kDefaultCostCap);

} // namespace leibniz
