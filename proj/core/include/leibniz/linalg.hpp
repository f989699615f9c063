#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Incremental row space in reduced echelon form over an exact field.
/// add() reduces the candidate against the current basis and keeps the
/// residual (normalized) if nonzero; rank grows by at most 1 per call.
/// Finite fields are stored as raw byte rows with table arithmetic.
class RowSpace {
public:
  RowSpace(Field field, std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  /// Returns true when the row enlarged the space.
  bool add(const std::vector<Scalar> &row);

  /// Residual of row after reduction; all-zero means membership.
  std::vector<Scalar> reduce(std::vector<Scalar> row) const;
  bool contains(const std::vector<Scalar> &row) const;

  /// Echelon basis rows, materialized as scalars.
  std::vector<std::vector<Scalar>> rows() const;

private:
  Field field_;
  std::size_t width_;
  bool finite_;
  std::vector<std::vector<Scalar>> qrows_;
  std::vector<std::vector<std::uint8_t>> brows_;
  std::vector<std::size_t> pivots_;

  bool add_bytes(std::vector<std::uint8_t> row);
  void reduce_bytes(std::vector<std::uint8_t> &row) const;

  friend class RowSpaceByteView;
};

/// Direct byte-row access for finite-field kernels (no Scalar boxing).
class RowSpaceByteView {
public:
  explicit RowSpaceByteView(RowSpace &s) : s_(s) {}
  bool add(std::vector<std::uint8_t> row) { return s_.add_bytes(std::move(row)); }
  void reduce(std::vector<std::uint8_t> &row) const { s_.reduce_bytes(row); }
  bool contains(std::vector<std::uint8_t> row) const {
    s_.reduce_bytes(row);
    for (auto x : row)
      if (x)
        return false;
    return true;
  }
  const std::vector<std::vector<std::uint8_t>> &rows() const { return s_.brows_; }

private:
  RowSpace &s_;
};

/// Exact rank of a rectangular matrix (rows over one field).
/// Throws domain_error on ragged rows.
std::size_t matrix_rank(const Field &f,
                        const std::vector<std::vector<Scalar>> &rows);

} // namespace leibniz
