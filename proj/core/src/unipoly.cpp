#include "implicit/unipoly.hpp"

#include <algorithm>
#include <utility>

namespace implicit {

namespace {
const Rat kZero(0);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> coeffs(k + 1);
  coeffs[k] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rat inv = 1 / leading();
  return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

PolyDivision divide(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {UniPoly{}, dividend};

  const auto dq = static_cast<std::size_t>(divisor.degree());
  std::vector<Rat> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Rat> quot(rem.size() - dq);
  const Rat lead_inv = 1 / divisor.leading();
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k] == 0) continue;
    const Rat factor = rem[k] * lead_inv;
    quot[k - dq] = factor;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= factor * divisor.coeff(j);
  }
  rem.resize(dq);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly pow(const UniPoly& base, std::size_t exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

Rat poly_eval(const UniPoly& p, const Rat& t0) {
  Rat acc(0);
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= t0;
    acc += *it;
  }
  return acc;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  UniPoly a = p;
  UniPoly b = q;
  while (!b.is_zero()) {
    UniPoly r = divide(a, b).remainder;
    // Keeping the remainders monic bounds coefficient growth a little.
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace implicit
