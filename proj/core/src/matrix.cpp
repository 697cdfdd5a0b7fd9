#include "implicit/matrix.hpp"

#include <utility>

namespace implicit {

MatQ::MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

MatQ::MatQ(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw InvalidArgument("matrix entry count does not match rows*cols");
}

MatQ::MatQ(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

MatQ MatQ::identity(std::size_t order) {
  MatQ m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

void MatQ::append_row(const std::vector<Rat>& row) {
  if (row.size() != cols_) throw InvalidArgument("appended row has the wrong length");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rat> operator*(const MatQ& a, const std::vector<Rat>& v) {
  if (v.size() != a.cols()) throw InvalidArgument("matrix-vector size mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product size mismatch");
  MatQ out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

PolyMat::PolyMat(std::size_t order) : order_(order), entries_(order * order, BiPoly(1, 1)) {
  if (order == 0) throw InvalidArgument("PolyMat order must be positive");
}

void PolyMat::set(std::size_t r, std::size_t c, BiPoly entry) {
  if (entry.x_bound() > 1 || entry.y_bound() > 1) {
    throw InvalidArgument("PolyMat entries must have degree at most 1 in x and in y");
  }
  if (entry.x_bound() != 1 || entry.y_bound() != 1) {
    BiPoly widened(1, 1);
    for (std::size_t i = 0; i <= entry.x_bound(); ++i) {
      for (std::size_t j = 0; j <= entry.y_bound(); ++j) widened.at(i, j) = entry.at(i, j);
    }
    entry = std::move(widened);
  }
  entries_.at(r * order_ + c) = std::move(entry);
}

}  // namespace implicit
