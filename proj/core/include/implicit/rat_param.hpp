#pragma once

#include "implicit/bipoly.hpp"
#include "implicit/unipoly.hpp"

namespace implicit {

/// Rational parametrization (x(t), y(t)) = (u1/v1, u2/v2).
///
/// Denominators are nonzero and each fraction is coprime. A non-coprime
/// fraction is reduced on construction (both sides divided by the monic
/// gcd) and reduced() reports that this happened.
class RatParam {
 public:
  RatParam(UniPoly u1, UniPoly v1, UniPoly u2, UniPoly v2);

  const UniPoly& x_numerator() const noexcept { return u1_; }
  const UniPoly& x_denominator() const noexcept { return v1_; }
  const UniPoly& y_numerator() const noexcept { return u2_; }
  const UniPoly& y_denominator() const noexcept { return v2_; }

  bool reduced() const noexcept { return reduced_; }

  /// max(deg u1, deg v1), the t-degree of u1 - x v1.
  std::size_t x_degree() const;
  /// max(deg u2, deg v2), the t-degree of u2 - y v2.
  std::size_t y_degree() const;

 private:
  UniPoly u1_;
  UniPoly v1_;
  UniPoly u2_;
  UniPoly v2_;
  bool reduced_ = false;
};

/// True iff F(u1/v1, u2/v2) vanishes identically, tested on the
/// denominator-cleared form sum c_ij u1^i v1^(m-i) u2^j v2^(n-j).
/// Throws InvalidArgument for F == 0.
bool substitute_check(const BiPoly& f, const RatParam& p);

}  // namespace implicit
