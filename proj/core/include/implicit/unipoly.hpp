#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "implicit/rat.hpp"

namespace implicit {

/// Degree reported for the zero polynomial. Compares below every real degree,
/// so max() over degrees behaves as with minus infinity.
inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial over Rat in the parameter t. Coefficient k is
/// the coefficient of t^k; the highest stored coefficient is never zero, so
/// the zero polynomial has no coefficients at all.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  /// Coefficient of t^k; zero past the degree.
  const Rat& coeff(std::size_t k) const;
  const Rat& leading() const;
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }

  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rat& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rat& lhs, UniPoly rhs) { return rhs *= lhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator-(UniPoly p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

struct PolyDivision {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Rat. Throws InvalidArgument for a zero divisor.
PolyDivision divide(const UniPoly& dividend, const UniPoly& divisor);

UniPoly pow(const UniPoly& base, std::size_t exponent);

/// Horner evaluation.
Rat poly_eval(const UniPoly& p, const Rat& t0);

/// Monic gcd by the Euclidean algorithm. Throws InvalidArgument if both
/// inputs are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

}  // namespace implicit
