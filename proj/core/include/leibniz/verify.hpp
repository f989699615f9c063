#pragma once

#include "leibniz/basis.hpp"
#include "leibniz/engine.hpp"
#include "leibniz/presentation.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

/// End-to-end verifier for one (algebra, field, alpha) at degree bound D:
///   (a) every claimed generator is an identity;
///   (b) componentwise triple equality
///         #words - rank(T-ideal component) = codimension = basis count
///       at the multilinear components over the rationals, and over finite
///       fields at the components where the corollary imposes no extra
///       finite restriction (there its componentwise claim is the
///       infinite-field normal form, so the equality is asserted verbatim;
///       at the boundary components the corollary trades words across
///       multidegrees and only the whole-algebra claim makes sense);
///   (c) the closed codimension formula, over the rationals.
/// Algebras without a basis corollary check (b) without the third leg.
VerificationReport verify_presentation(
    const std::string &name, const Field &field,
    const std::optional<Scalar> &alpha, int max_degree,
    unsigned long long cost_cap = kDefaultCostCap);

/// The finite-field component multidegrees asserted by verify_presentation:
/// total degree <= D, entries within the corollary caps (never above 2q),
/// and finite/infinite enumerator agreement when a corollary exists.
std::vector<Multidegree> testable_components(const std::string &name,
                                             const Field &field,
                                             const std::optional<Scalar> &alpha,
                                             int max_degree);

} // namespace leibniz
