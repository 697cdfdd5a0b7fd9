#include "implicit/structmat.hpp"

namespace implicit {

namespace {

// Coefficient of t^k in num(t) - var * den(t), as a BiPoly on the (1,1) grid;
// var_is_x selects which grid cell carries the linear term.
BiPoly linear_coefficient(const UniPoly& num, const UniPoly& den, std::size_t k, bool var_is_x) {
  BiPoly c(1, 1);
  c.at(0, 0) = num.coeff(k);
  if (var_is_x) {
    c.at(1, 0) = -den.coeff(k);
  } else {
    c.at(0, 1) = -den.coeff(k);
  }
  return c;
}

}  // namespace

PolyMat build_parametric_sylvester(const RatParam& p) {
  const std::size_t d1 = p.x_degree();
  const std::size_t d2 = p.y_degree();
  if (d1 == 0 || d2 == 0) {
    throw DegenerateInput("parametrization is constant in t in one coordinate; no Sylvester matrix");
  }
  PolyMat s(d1 + d2);
  for (std::size_t r = 0; r < d2; ++r) {
    for (std::size_t k = 0; k <= d1; ++k) {
      s.set(r, r + k, linear_coefficient(p.x_numerator(), p.x_denominator(), d1 - k, true));
    }
  }
  for (std::size_t r = 0; r < d1; ++r) {
    for (std::size_t k = 0; k <= d2; ++k) {
      s.set(d2 + r, r + k, linear_coefficient(p.y_numerator(), p.y_denominator(), d2 - k, false));
    }
  }
  return s;
}

MatQ eval_polymat(const PolyMat& s, const Rat& x0, const Rat& y0) {
  MatQ out(s.order(), s.order());
  for (std::size_t r = 0; r < s.order(); ++r) {
    for (std::size_t c = 0; c < s.order(); ++c) out(r, c) = bipoly_eval(s(r, c), x0, y0);
  }
  return out;
}

}  // namespace implicit
