#include "leibniz/linalg.hpp"

namespace leibniz {

RowSpace::RowSpace(Field field, std::size_t width)
    : field_(std::move(field)), width_(width), finite_(field_.is_finite()) {}

void RowSpace::reduce_bytes(std::vector<std::uint8_t> &row) const {
  for (std::size_t r = 0; r < brows_.size(); ++r) {
    std::uint8_t c = row[pivots_[r]];
    if (!c)
      continue;
    std::uint8_t f = field_.rneg(c); // basis pivot is 1: row -= c * basis
    const auto &basis = brows_[r];
    // echelon rows are zero before their pivot
    for (std::size_t j = pivots_[r]; j < width_; ++j) {
      if (!basis[j])
        continue;
      row[j] = field_.radd(row[j], field_.rmul(f, basis[j]));
    }
  }
}

bool RowSpace::add_bytes(std::vector<std::uint8_t> row) {
  if (row.size() != width_)
    throw domain_error("RowSpace: ragged row");
  reduce_bytes(row);
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (row[j]) {
      pivot = j;
      break;
    }
  if (pivot == width_)
    return false;
  std::uint8_t inv = field_.inv(Scalar(row[pivot])).ff();
  for (auto &c : row)
    if (c)
      c = field_.rmul(c, inv);
  for (std::size_t r = 0; r < brows_.size(); ++r) {
    std::uint8_t c = brows_[r][pivot];
    if (!c)
      continue;
    std::uint8_t f = field_.rneg(c);
    for (std::size_t j = pivot; j < width_; ++j) {
      if (!row[j])
        continue;
      brows_[r][j] = field_.radd(brows_[r][j], field_.rmul(f, row[j]));
    }
  }
  brows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> row) const {
  if (finite_) {
    std::vector<std::uint8_t> b(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      b[i] = row[i].ff();
    reduce_bytes(b);
    for (std::size_t i = 0; i < row.size(); ++i)
      row[i] = Scalar(b[i]);
    return row;
  }
  for (std::size_t r = 0; r < qrows_.size(); ++r) {
    const Scalar &c = row[pivots_[r]];
    if (field_.is_zero(c))
      continue;
    Scalar factor = c; // basis rows have pivot 1
    for (std::size_t j = 0; j < width_; ++j) {
      if (field_.is_zero(qrows_[r][j]))
        continue;
      row[j] = field_.sub(row[j], field_.mul(factor, qrows_[r][j]));
    }
  }
  return row;
}

bool RowSpace::contains(const std::vector<Scalar> &row) const {
  auto res = reduce(row);
  for (auto &c : res)
    if (!field_.is_zero(c))
      return false;
  return true;
}

bool RowSpace::add(const std::vector<Scalar> &row_in) {
  if (row_in.size() != width_)
    throw domain_error("RowSpace: ragged row");
  if (finite_) {
    std::vector<std::uint8_t> b(row_in.size());
    for (std::size_t i = 0; i < row_in.size(); ++i)
      b[i] = row_in[i].ff();
    return add_bytes(std::move(b));
  }
  auto row = reduce(row_in);
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (!field_.is_zero(row[j])) {
      pivot = j;
      break;
    }
  if (pivot == width_)
    return false;
  Scalar inv = field_.inv(row[pivot]);
  for (auto &c : row)
    if (!field_.is_zero(c))
      c = field_.mul(c, inv);
  for (std::size_t r = 0; r < qrows_.size(); ++r) {
    const Scalar &c = qrows_[r][pivot];
    if (field_.is_zero(c))
      continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < width_; ++j) {
      if (field_.is_zero(row[j]))
        continue;
      qrows_[r][j] = field_.sub(qrows_[r][j], field_.mul(factor, row[j]));
    }
  }
  qrows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<std::vector<Scalar>> RowSpace::rows() const {
  if (!finite_)
    return qrows_;
  std::vector<std::vector<Scalar>> out;
  out.reserve(brows_.size());
  for (auto &b : brows_) {
    std::vector<Scalar> row;
    row.reserve(b.size());
    for (auto x : b)
      row.push_back(Scalar(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t matrix_rank(const Field &f,
                        const std::vector<std::vector<Scalar>> &rows) {
  if (rows.empty())
    return 0;
  std::size_t width = rows.front().size();
  for (auto &r : rows)
    if (r.size() != width)
      throw domain_error("matrix_rank: ragged rows");
  RowSpace space(f, width);
  for (auto &r : rows)
    space.add(r);
  return space.rank();
}

} // namespace leibniz
