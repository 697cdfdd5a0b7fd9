#pragma once

#include <cstddef>
#include <vector>

#include "implicit/bipoly.hpp"
#include "implicit/rat.hpp"

namespace implicit {

/// Dense row-major matrix over Rat.
class MatQ {
 public:
  /// Zero matrix; throws InvalidArgument if either dimension is zero.
  MatQ(std::size_t rows, std::size_t cols);
  MatQ(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  MatQ(std::initializer_list<std::initializer_list<Rat>> rows);

  static MatQ identity(std::size_t order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  MatQ transpose() const;
  /// Appends one row; its length must equal cols().
  void append_row(const std::vector<Rat>& row);

  friend bool operator==(const MatQ&, const MatQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

std::vector<Rat> operator*(const MatQ& a, const std::vector<Rat>& v);
MatQ operator*(const MatQ& a, const MatQ& b);

/// Square matrix whose entries are bivariate polynomials of degree at most
/// one in x and at most one in y.
class PolyMat {
 public:
  explicit PolyMat(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const BiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  /// Throws InvalidArgument unless entry has bounds within (1, 1).
  void set(std::size_t r, std::size_t c, BiPoly entry);

 private:
  std::size_t order_;
  std::vector<BiPoly> entries_;
};

}  // namespace implicit
