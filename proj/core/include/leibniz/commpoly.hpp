#pragma once

#include <map>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Sparse commutative polynomial over a Field.  Keys are exponent vectors
/// with trailing zeros stripped; no zero coefficients are stored.
class CommPoly {
public:
  using Expt = std::vector<int>;

  explicit CommPoly(Field field) : field_(std::move(field)) {}

  const Field &field() const { return field_; }
  const std::map<Expt, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Expt e, const Scalar &c);

  CommPoly operator+(const CommPoly &o) const;
  CommPoly operator-(const CommPoly &o) const;
  CommPoly operator*(const CommPoly &o) const;
  CommPoly scaled(const Scalar &c) const;
  bool operator==(const CommPoly &o) const;

  static CommPoly constant(const Field &f, const Scalar &c);
  static CommPoly variable(const Field &f, int index); ///< 0-based

  /// Evaluate at a point (index -> value); unset variables read as zero.
  Scalar eval(const std::vector<Scalar> &point) const;

private:
  Field field_;
  std::map<Expt, Scalar> terms_;
};

/// Replace every exponent e >= q by ((e-1) mod (q-1)) + 1, using x^q = x on
/// GF(q).  The result induces the same function GF(q)^m -> GF(q).
CommPoly frobenius_reduce(const CommPoly &f);

/// True iff f vanishes at every point of F^m.  Finite fields reduce first
/// and test for the zero polynomial; over the rationals only the zero
/// polynomial vanishes everywhere.
bool is_zero_function(const CommPoly &f);

} // namespace leibniz
