#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "implicit/rat.hpp"

namespace implicit {

/// Dense bivariate polynomial on the (m+1) x (n+1) grid of monomials x^i y^j.
///
/// Coefficients are stored i-major, j-minor, which is also the basis order
/// 1, y, ..., y^n, x, xy, ..., x^m y^n used by every interpolation system in
/// this library: index(i, j) = i * (n + 1) + j.
class BiPoly {
 public:
  BiPoly() : BiPoly(0, 0) {}
  /// Zero polynomial with bounds (m, n).
  BiPoly(std::size_t m, std::size_t n);
  /// Throws InvalidArgument unless coeffs.size() == (m + 1) * (n + 1).
  BiPoly(std::size_t m, std::size_t n, std::vector<Rat> coeffs);

  std::size_t x_bound() const noexcept { return m_; }
  std::size_t y_bound() const noexcept { return n_; }
  /// Dimension of the coefficient space, (m+1)(n+1).
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * (n_ + 1) + j; }
  const Rat& at(std::size_t i, std::size_t j) const { return coeffs_.at(index(i, j)); }
  Rat& at(std::size_t i, std::size_t j) { return coeffs_.at(index(i, j)); }
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Actual degree in x (resp. y); -1 for the zero polynomial.
  long degree_x() const;
  long degree_y() const;

  BiPoly& operator*=(const Rat& scalar);
  friend BiPoly operator*(BiPoly p, const Rat& s) { return p *= s; }
  friend BiPoly operator*(const Rat& s, BiPoly p) { return p *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rat> coeffs_;
};

Rat bipoly_eval(const BiPoly& f, const Rat& x0, const Rat& y0);

/// Drops all-zero trailing rows and columns so the bounds equal the actual
/// degrees. The zero polynomial trims to bounds (0, 0).
BiPoly trim(const BiPoly& f);

/// Scales f to integer coefficients with content 1 whose first nonzero
/// coefficient in basis order is positive, then trims. Two polynomials that
/// differ by a nonzero rational factor have equal canonical forms.
/// Throws InvalidArgument on the zero polynomial.
BiPoly canonicalize(const BiPoly& f);

}  // namespace implicit
