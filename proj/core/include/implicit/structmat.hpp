#pragma once

// Exact structured-matrix kernels. Every kernel takes an OpCounter and adds
// the Rat/Integer operations it performs.

#include <span>
#include <vector>

#include "implicit/matrix.hpp"
#include "implicit/op_counter.hpp"
#include "implicit/rat_param.hpp"

namespace implicit {

/// Sylvester matrix of p(t) = u1 - x v1 and q(t) = u2 - y v2, of order
/// d1 + d2 with d1 = deg_t p, d2 = deg_t q. The first d2 rows carry the
/// coefficients of p from t^d1 down to t^0, each shifted one column right of
/// the previous row; the last d1 rows do the same for q.
///
/// Throws DegenerateInput when either coordinate is constant in t.
PolyMat build_parametric_sylvester(const RatParam& p);

MatQ eval_polymat(const PolyMat& s, const Rat& x0, const Rat& y0);

/// Exact determinant. Each row is scaled to integers by the lcm of its
/// denominators, the integer matrix is reduced by Bareiss fraction-free
/// elimination, and the result is divided by the product of the row scales.
/// Every Bareiss division is checked for exactness; an inexact one throws
/// InternalError. Throws InvalidArgument on a non-square matrix.
Rat det_bareiss(const MatQ& m, OpCounter& counter);

/// Unique solution of m x = b. Fraction-free forward elimination on the
/// integer-scaled augmented matrix (pivot: first nonzero in the column),
/// then rational back substitution. Throws SingularMatrix.
std::vector<Rat> solve_general(const MatQ& m, std::span<const Rat> b, OpCounter& counter);

/// Basis of {x : m x = 0} read off the reduced row-echelon form: one vector
/// per free column, with a 1 in that column. Empty iff m has full column rank.
std::vector<std::vector<Rat>> nullspace(const MatQ& m, OpCounter& counter);

/// Rank via the same elimination as nullspace().
std::size_t rank(const MatQ& m, OpCounter& counter);

/// Coefficients a of the interpolating polynomial: sum_k a_k nodes[i]^k = values[i].
/// Bjorck-Pereyra: Newton divided differences, then Newton-to-monomial
/// conversion; O(s^2). Throws DuplicateNode.
std::vector<Rat> vandermonde_solve_primal(std::span<const Rat> nodes, std::span<const Rat> values,
                                          OpCounter& counter);

/// Solution c of the transposed system: sum_i c_i nodes[i]^k = b[k].
/// Bjorck-Pereyra dual sweeps; O(s^2). Throws DuplicateNode.
std::vector<Rat> vandermonde_solve_dual(std::span<const Rat> nodes, std::span<const Rat> b,
                                        OpCounter& counter);

/// Solution c of (V_x (x) V_y) c = b with V_x[k][i] = x_nodes[k]^i and
/// V_y[l][j] = y_nodes[l]^j. Rows of b are indexed (k, l) k-major; c is
/// indexed (i, j) i-major. Performs |x_nodes| solves with V_y followed by
/// |y_nodes| solves with V_x and never forms the Kronecker matrix.
std::vector<Rat> kron_solve(std::span<const Rat> x_nodes, std::span<const Rat> y_nodes,
                            std::span<const Rat> b, OpCounter& counter);

}  // namespace implicit
