#include <utility>
#include <vector>

#include "implicit/structmat.hpp"

namespace implicit {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Scales every row of m (optionally augmented by b) to integers using the lcm
// of that row's denominators. The row scales are written to row_scale.
IntMatrix integer_rows(const MatQ& m, std::span<const Rat> b, std::vector<Integer>& row_scale,
                       OpCounter& counter) {
  const bool augmented = !b.empty();
  IntMatrix a(m.rows(), std::vector<Integer>(m.cols() + (augmented ? 1 : 0)));
  row_scale.assign(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale(1);
    for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, m(r, c).get_den());
    if (augmented) scale = lcm(scale, b[r].get_den());
    row_scale[r] = scale;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
      counter.observe(a[r][c]);
    }
    if (augmented) {
      a[r][m.cols()] = b[r].get_num() * (scale / b[r].get_den());
      counter.observe(a[r][m.cols()]);
    }
    if (scale != 1) counter.muls += a[r].size();
  }
  return a;
}

struct BareissOutcome {
  bool full_rank = true;
  int sign = 1;
};

// Bareiss fraction-free elimination over the first `pivots` columns. After
// return, a is upper triangular in those columns and each a[k][j] (j >= k) is
// a minor of the input, so the division by the previous pivot is exact.
BareissOutcome bareiss_eliminate(IntMatrix& a, std::size_t pivots, OpCounter& counter) {
  BareissOutcome out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Integer prev(1);
  Integer tmp;
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = k;
    while (p < rows && sgn(a[p][k]) == 0) ++p;
    if (p == rows) {
      out.full_rank = false;
      return out;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      out.sign = -out.sign;
    }
    const Integer& pivot = a[k][k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        tmp = a[i][j] * pivot;
        tmp -= a[i][k] * a[k][j];
        counter.muls += 2;
        counter.adds += 1;
        if (k > 0) {
          if (mpz_divisible_p(tmp.get_mpz_t(), prev.get_mpz_t()) == 0) {
            throw InternalError("Bareiss division was not exact");
          }
          mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
          counter.divs += 1;
        } else {
          a[i][j] = tmp;
        }
        counter.observe(a[i][j]);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return out;
}

}  // namespace

Rat det_bareiss(const MatQ& m, OpCounter& counter) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  counter.determinants += 1;
  std::vector<Integer> scale;
  IntMatrix a = integer_rows(m, {}, scale, counter);
  const std::size_t n = m.rows();
  const BareissOutcome outcome = bareiss_eliminate(a, n, counter);
  if (!outcome.full_rank) return Rat(0);

  Integer den(1);
  for (const auto& s : scale) {
    if (s != 1) {
      den *= s;
      counter.muls += 1;
    }
  }
  Rat det = make_rat(a[n - 1][n - 1] * outcome.sign, den);
  if (den != 1) counter.divs += 1;
  counter.observe(det);
  return det;
}

std::vector<Rat> solve_general(const MatQ& m, std::span<const Rat> b, OpCounter& counter) {
  if (!m.is_square()) throw InvalidArgument("solve_general needs a square matrix");
  if (b.size() != m.rows()) throw InvalidArgument("right-hand side length does not match the matrix");
  const std::size_t n = m.rows();

  std::vector<Integer> scale;
  IntMatrix a = integer_rows(m, b, scale, counter);
  if (!bareiss_eliminate(a, n, counter).full_rank) throw SingularMatrix("matrix is singular");

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      acc -= Rat(a[i][j]) * x[j];
      counter.muls += 1;
      counter.adds += 1;
    }
    x[i] = acc / Rat(a[i][i]);
    counter.divs += 1;
    counter.observe(x[i]);
  }
  return x;
}

namespace {

struct Echelon {
  MatQ reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon reduced_row_echelon(const MatQ& m, OpCounter& counter) {
  Echelon e{m, {}};
  MatQ& a = e.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  Rat factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rat inv = 1 / a(r, c);
    counter.divs += 1;
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (a(r, j) == 0) continue;
      a(r, j) *= inv;
      counter.muls += 1;
      counter.observe(a(r, j));
    }
    a(r, c) = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      factor = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        a(i, j) -= factor * a(r, j);
        counter.muls += 1;
        counter.adds += 1;
        counter.observe(a(i, j));
      }
      a(i, c) = 0;
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::vector<std::vector<Rat>> nullspace(const MatQ& m, OpCounter& counter) {
  const Echelon e = reduced_row_echelon(m, counter);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const MatQ& m, OpCounter& counter) { return reduced_row_echelon(m, counter).pivot_cols.size(); }

}  // namespace implicit
