#include "implicit/rat_param.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace implicit {

namespace {

// Divides num and den by their gcd; returns true if the gcd was nontrivial.
bool reduce(UniPoly& num, UniPoly& den) {
  const UniPoly g = poly_gcd(num, den);
  if (g.degree() <= 0) return false;
  num = divide(num, g).quotient;
  den = divide(den, g).quotient;
  return true;
}

std::vector<UniPoly> powers(const UniPoly& p, std::size_t up_to) {
  std::vector<UniPoly> out;
  out.reserve(up_to + 1);
  out.push_back(UniPoly::constant(1));
  for (std::size_t k = 1; k <= up_to; ++k) out.push_back(out.back() * p);
  return out;
}

}  // namespace

RatParam::RatParam(UniPoly u1, UniPoly v1, UniPoly u2, UniPoly v2)
    : u1_(std::move(u1)), v1_(std::move(v1)), u2_(std::move(u2)), v2_(std::move(v2)) {
  if (v1_.is_zero() || v2_.is_zero()) throw InvalidArgument("parametrization has a zero denominator");
  const bool rx = reduce(u1_, v1_);
  const bool ry = reduce(u2_, v2_);
  reduced_ = rx || ry;
}

std::size_t RatParam::x_degree() const {
  return static_cast<std::size_t>(std::max(u1_.degree(), v1_.degree()));
}

std::size_t RatParam::y_degree() const {
  return static_cast<std::size_t>(std::max(u2_.degree(), v2_.degree()));
}

bool substitute_check(const BiPoly& f, const RatParam& p) {
  if (f.is_zero()) throw InvalidArgument("substitute_check of the zero polynomial");
  const std::size_t m = f.x_bound();
  const std::size_t n = f.y_bound();
  const auto u1 = powers(p.x_numerator(), m);
  const auto v1 = powers(p.x_denominator(), m);
  const auto u2 = powers(p.y_numerator(), n);
  const auto v2 = powers(p.y_denominator(), n);

  UniPoly total;
  for (std::size_t i = 0; i <= m; ++i) {
    UniPoly row;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rat& c = f.at(i, j);
      if (c == 0) continue;
      row += c * (u2[j] * v2[n - j]);
    }
    if (!row.is_zero()) total += row * (u1[i] * v1[m - i]);
  }
  return total.is_zero();
}

}  // namespace implicit
