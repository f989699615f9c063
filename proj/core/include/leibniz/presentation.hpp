#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/poly.hpp"

namespace leibniz {

/// A claimed T-ideal generator list for one (algebra, field) pair.
struct Presentation {
  std::string algebra;
  Field field = Field::rationals();
  std::optional<Scalar> alpha;
  std::vector<LeibnizPoly> generators;
  std::string provenance; ///< which theorem the list comes from
};

/// The generator list of the matching theorem, including characteristic-2
/// and finite-field variants.  RR7 over finite fields is case-dependent on
/// alpha (root structure of t^2 - t - alpha); RR6 finite depends on the
/// parity of q.  Throws domain_error for unsupported combinations (RR1).
Presentation presentation(const std::string &name, const Field &field,
                          const std::optional<Scalar> &alpha = std::nullopt);

/// Names that have a presentation over the given field.
std::vector<std::string> presented_names(const Field &field);

} // namespace leibniz
