#include "implicit/bipoly.hpp"

#include <algorithm>
#include <utility>

namespace implicit {

BiPoly::BiPoly(std::size_t m, std::size_t n) : m_(m), n_(n), coeffs_((m + 1) * (n + 1)) {}

BiPoly::BiPoly(std::size_t m, std::size_t n, std::vector<Rat> coeffs)
    : m_(m), n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (m + 1) * (n + 1)) {
    throw InvalidArgument("BiPoly coefficient count does not match (m+1)(n+1)");
  }
}

bool BiPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

long BiPoly::degree_x() const {
  for (std::size_t i = m_ + 1; i-- > 0;) {
    for (std::size_t j = 0; j <= n_; ++j) {
      if (at(i, j) != 0) return static_cast<long>(i);
    }
  }
  return -1;
}

long BiPoly::degree_y() const {
  for (std::size_t j = n_ + 1; j-- > 0;) {
    for (std::size_t i = 0; i <= m_; ++i) {
      if (at(i, j) != 0) return static_cast<long>(j);
    }
  }
  return -1;
}

BiPoly& BiPoly::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Rat bipoly_eval(const BiPoly& f, const Rat& x0, const Rat& y0) {
  // Nested Horner: outer in x over rows, inner in y along each row.
  Rat acc(0);
  for (std::size_t i = f.x_bound() + 1; i-- > 0;) {
    Rat row(0);
    for (std::size_t j = f.y_bound() + 1; j-- > 0;) {
      row *= y0;
      row += f.at(i, j);
    }
    acc *= x0;
    acc += row;
  }
  return acc;
}

BiPoly trim(const BiPoly& f) {
  const long dx = f.degree_x();
  const long dy = f.degree_y();
  if (dx < 0) return BiPoly(0, 0);
  const auto m = static_cast<std::size_t>(dx);
  const auto n = static_cast<std::size_t>(dy);
  if (m == f.x_bound() && n == f.y_bound()) return f;
  BiPoly out(m, n);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) out.at(i, j) = f.at(i, j);
  }
  return out;
}

BiPoly canonicalize(const BiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("cannot canonicalize the zero polynomial");

  Integer den_lcm(1);
  for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  Integer content(0);
  for (const auto& c : f.coeffs()) {
    const Integer scaled = c.get_num() * (den_lcm / c.get_den());
    content = gcd(content, scaled);
  }
  const Rat* first = nullptr;
  for (const auto& c : f.coeffs()) {
    if (c != 0) {
      first = &c;
      break;
    }
  }
  Rat scale = make_rat(den_lcm, content);
  if (sgn(*first) < 0) scale = -scale;
  return trim(f * scale);
}

}  // namespace implicit
