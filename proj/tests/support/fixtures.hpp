#pragma once

// Test-only oracles, generators and worked examples. Nothing here calls the
// library's solvers or determinant code, so the oracles stay independent of
// the paths they check.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "implicit/bipoly.hpp"
#include "implicit/matrix.hpp"
#include "implicit/rat_param.hpp"
#include "implicit/unipoly.hpp"

namespace implicit::testing {

inline UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

inline std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

/// ((1+t)/(2+t), (3+t)/(4+t)); implicit equation 2 - 3y - x + 2xy.
inline RatParam hyperbola() { return RatParam(up({1, 1}), up({2, 1}), up({3, 1}), up({4, 1})); }

inline BiPoly hyperbola_F() { return BiPoly(1, 1, rats({2, -3, -1, 2})); }

/// ((2t^2+2t+1)/(t^3+5), (t^3-3t^2+t-1)/(t^2-3)).
inline RatParam cubic_example() {
  return RatParam(up({1, 2, 2}), up({5, 0, 0, 1}), up({-1, 1, -3, 1}), up({-3, 0, 1}));
}

/// The printed implicit equation of cubic_example(), i-major.
inline BiPoly cubic_example_F() {
  return BiPoly(3, 3, rats({-53, 42, -74, 0, 172, 707, 121, 37, -652, -1156, -490, -34, 626, 396, 432, -2}));
}

inline std::vector<Rat> cubic_example_grid_data() {
  return rats({-53, -85, -265, -593, 93, 72, 35, -12, 2691, 4277, 8723, 15561, 11497, 21242, 44579, 80014});
}

/// Laplace expansion along the first row.
inline Rat cofactor_det(const MatQ& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rat total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    MatQ minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, kk++) = m(r, k);
      }
    }
    const Rat term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Cramer's rule on cofactor determinants.
inline std::vector<Rat> cramer_solve(const MatQ& m, const std::vector<Rat>& b) {
  const Rat d = cofactor_det(m);
  std::vector<Rat> x(b.size());
  for (std::size_t c = 0; c < b.size(); ++c) {
    MatQ mc = m;
    for (std::size_t r = 0; r < b.size(); ++r) mc(r, c) = b[r];
    x[c] = cofactor_det(mc) / d;
  }
  return x;
}

/// V[i][k] = nodes[i]^k.
inline MatQ vandermonde(const std::vector<Rat>& nodes) {
  MatQ v(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rat p(1);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      v(i, k) = p;
      p *= nodes[i];
    }
  }
  return v;
}

inline MatQ kronecker(const MatQ& a, const MatQ& b) {
  MatQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Monomial coefficients of the Lagrange interpolant, by expanding each basis
/// polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
inline std::vector<Rat> lagrange_coefficients(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  UniPoly total;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    UniPoly basis = UniPoly::constant(values[i]);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly({Rat(-nodes[j]), Rat(1)});
      basis *= Rat(1 / (nodes[i] - nodes[j]));
    }
    total += basis;
  }
  std::vector<Rat> out(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = total.coeff(k);
  return out;
}

// --- random generation ----------------------------------------------------

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat random_rat(Rng& rng, long num_range = 20, long den_max = 9) {
  return make_rat(uniform(rng, -num_range, num_range), uniform(rng, 1, den_max));
}

inline std::vector<Rat> distinct_rats(Rng& rng, std::size_t count, long num_range = 20, long den_max = 9) {
  std::vector<Rat> out;
  while (out.size() < count) {
    Rat r = random_rat(rng, num_range, den_max);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

inline MatQ random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool integer_entries) {
  MatQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_entries ? Rat(uniform(rng, -9, 9)) : random_rat(rng);
  return m;
}

/// Degree exactly `degree` (nonzero leading coefficient), integer coefficients.
inline UniPoly random_poly(Rng& rng, long degree, long coef_range = 9) {
  if (degree < 0) return {};
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = uniform(rng, -coef_range, coef_range);
  while (c.back() == 0) c.back() = uniform(rng, -coef_range, coef_range);
  return UniPoly(std::move(c));
}

/// A parametrization is proper iff, for generic s, gcd_t of
/// u1(t)v1(s) - u1(s)v1(t) and u2(t)v2(s) - u2(s)v2(t) is t - s alone.
/// Checked at a few fixed rational s; test-side filter only.
inline bool looks_proper(const RatParam& p) {
  const Rat samples[] = {make_rat(7, 3), make_rat(-11, 5), make_rat(13, 17)};
  for (const Rat& s : samples) {
    const Rat v1 = poly_eval(p.x_denominator(), s);
    const Rat v2 = poly_eval(p.y_denominator(), s);
    if (v1 == 0 || v2 == 0) continue;
    const UniPoly h1 = p.x_numerator() * v1 - p.x_denominator() * poly_eval(p.x_numerator(), s);
    const UniPoly h2 = p.y_numerator() * v2 - p.y_denominator() * poly_eval(p.y_numerator(), s);
    if (h1.is_zero() || h2.is_zero()) return false;
    if (poly_gcd(h1, h2).degree() == 1) return true;
  }
  return false;
}

/// Random proper parametrization with coprime fractions and integer
/// coefficients in [-coef_range, coef_range]. x_degree() == n_deg and
/// y_degree() == m_deg when exact is set; otherwise degrees are drawn in
/// [1, n_deg] and [1, m_deg].
inline RatParam random_param(Rng& rng, long n_deg, long m_deg, bool exact, long coef_range = 9) {
  for (;;) {
    const long dx = exact ? n_deg : uniform(rng, 1, n_deg);
    const long dy = exact ? m_deg : uniform(rng, 1, m_deg);
    // One side of each fraction carries the full degree, the other anything up to it.
    const bool x_num_full = uniform(rng, 0, 1) == 1;
    const bool y_num_full = uniform(rng, 0, 1) == 1;
    UniPoly u1 = random_poly(rng, x_num_full ? dx : uniform(rng, 0, dx), coef_range);
    UniPoly v1 = random_poly(rng, x_num_full ? uniform(rng, 0, dx) : dx, coef_range);
    UniPoly u2 = random_poly(rng, y_num_full ? dy : uniform(rng, 0, dy), coef_range);
    UniPoly v2 = random_poly(rng, y_num_full ? uniform(rng, 0, dy) : dy, coef_range);
    if (poly_gcd(u1, v1).degree() != 0 || poly_gcd(u2, v2).degree() != 0) continue;
    RatParam p(u1, v1, u2, v2);
    if (static_cast<long>(p.x_degree()) != dx || static_cast<long>(p.y_degree()) != dy) continue;
    if (!looks_proper(p)) continue;
    return p;
  }
}

}  // namespace implicit::testing
