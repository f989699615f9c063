#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Structure flags established at construction time.
struct StructureFlags {
  bool leibniz = false;
  bool metabelian = false;
  bool lie = false;
};

/// One catalog entry: a 2- or 3-dimensional Leibniz algebra given by its
/// structure-constant table e_i e_j = sum_k c[i][j][k] e_k.  Immutable.
class AlgebraDef {
public:
  const std::string &name() const { return name_; }
  int dim() const { return dim_; }
  const Field &field() const { return field_; }
  const std::optional<Scalar> &alpha() const { return alpha_; }
  const StructureFlags &flags() const { return flags_; }

  /// c[i][j][k] with 0-based indices.
  const Scalar &c(int i, int j, int k) const {
    return table_[std::size_t((i * dim_ + j) * dim_ + k)];
  }

  /// "L2", "RR7:alpha=2", ...
  std::string spec_string() const;

private:
  friend AlgebraDef make_algebra(const std::string &, const Field &,
                                 const std::optional<Scalar> &);
  std::string name_;
  int dim_ = 0;
  Field field_ = Field::rationals();
  std::optional<Scalar> alpha_;
  std::vector<Scalar> table_;
  StructureFlags flags_;
};

/// Construct a catalog algebra.  Names: L2, L3, L4, RR1..RR11.  alpha is
/// required exactly for RR2, RR4, RR5, RR6, RR7 and must be nonzero for RR2
/// and RR6.  The Leibniz identity is checked on all basis triples.
AlgebraDef make_algebra(const std::string &name, const Field &field,
                        const std::optional<Scalar> &alpha = std::nullopt);

/// Exhaustive basis checks: Leibniz on triples, metabelian on 4-tuples of
/// (x1x2)(x3x4), Lie as x.x = 0 plus antisymmetry on basis pairs.
StructureFlags structure_check(const AlgebraDef &A);

/// Parse "<name>" or "<name>:alpha=<scalar>" against a field.
AlgebraDef parse_algebra_spec(const std::string &spec, const Field &field);

/// Catalog names in canonical order.
const std::vector<std::string> &catalog_names();

/// Does the name require an alpha parameter?
bool algebra_needs_alpha(const std::string &name);

} // namespace leibniz
