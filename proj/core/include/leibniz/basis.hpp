#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/word.hpp"

namespace leibniz {

/// True when the paper states a relatively-free-algebra basis for the name
/// (L2, L3, L4, RR2, RR3, RR6, RR7, RR9; RR11 inherits L4's).
bool has_basis_corollary(const std::string &name);

/// All basis words of multidegree d satisfying the matching corollary's side
/// conditions, in canonical order.  Over finite fields the corollary's
/// exponent caps apply; alpha is needed for RR7 (case-dependent caps).
/// Throws domain_error when the name has no corollary.
std::vector<Word> claimed_basis(const std::string &name, const Field &field,
                                const Multidegree &d,
                                const std::optional<Scalar> &alpha = {});

/// Same enumerator with the infinite-field conditions regardless of the
/// field.  A multidegree whose finite and infinite sets agree is one where
/// the corollary claims the infinite normal forms verbatim; those are the
/// components the componentwise rank checks may assert over finite fields.
std::vector<Word> claimed_basis_infinite_rules(const std::string &name,
                                               const Multidegree &d);

/// Closed codimension formula from the corollary, when one is stated.
std::optional<long> codimension_formula(const std::string &name, int n,
                                        bool char2);

} // namespace leibniz
