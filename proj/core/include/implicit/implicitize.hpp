#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "implicit/bipoly.hpp"
#include "implicit/matrix.hpp"
#include "implicit/op_counter.hpp"
#include "implicit/rat_param.hpp"

namespace implicit {

/// Coordinate degree bounds of the implicit equation: deg_x F = m and
/// deg_y F = n for a proper parametrization, so F lives in a space of
/// dimension N = (m+1)(n+1).
struct DegreeBounds {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t N = 1;

  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

/// m = max(deg u2, deg v2), n = max(deg u1, deg v1).
DegreeBounds degree_bounds(const RatParam& p);

enum class Method {
  unstructured,      ///< nullspace of a dense system at points on the curve
  dual_vandermonde,  ///< resultant values at (p1^k, p2^k), transposed Vandermonde solve
  kronecker,         ///< resultant values on the integer grid, V_x (x) V_y solve
};

/// CLI spelling: "unstructured", "dualvand", "kron".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct MethodConfig {
  Method method = Method::kronecker;
  unsigned long p1 = 2;  ///< dual_vandermonde only
  unsigned long p2 = 3;  ///< dual_vandermonde only
  /// unstructured only: rows added while the nullity exceeds one; 2N if unset.
  std::optional<std::size_t> max_extra_nodes;
};

/// Throws InvalidArgument unless p1 and p2 are distinct primes.
void validate(const MethodConfig& cfg);

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct ImplicitResult {
  BiPoly F;  ///< canonical form
  DegreeBounds bounds;
  Method method = Method::kronecker;
  OpCounter data_counter;   ///< node evaluation, system assembly, determinants
  OpCounter solve_counter;  ///< the linear solve or nullspace computation
  OpCounter counter;        ///< data_counter merged with solve_counter
  bool verified = false;      ///< substitute_check(F, P)
  bool degree_tight = false;  ///< deg_x F == m and deg_y F == n
  std::vector<Point> nodes;  ///< interpolation nodes, in system row order
  std::vector<Rat> data;     ///< interpolation data; all zero for unstructured
  std::size_t data_max_bits = 0;    ///< widest entry of data
  std::size_t matrix_max_bits = 0;  ///< widest entry of the interpolation matrix
  std::size_t extra_nodes = 0;      ///< rows added beyond N (unstructured only)
};

/// The first `count` distinct points (x(t), y(t)) for t = 0, 1, 2, ...,
/// skipping poles of either coordinate. Throws DegenerateInput when both
/// coordinates are constant and count > 1.
std::vector<Point> nodes_on_curve(const RatParam& p, std::size_t count);

/// Row of monomials x^i y^j at a point, i-major.
std::vector<Rat> monomial_row(const Point& node, const DegreeBounds& bounds);

/// Matrix whose row r is monomial_row(nodes[r]).
MatQ unstructured_system(std::span<const Point> nodes, const DegreeBounds& bounds);

/// Nodes (p1^k, p2^k), k = 0..N-1.
std::vector<Point> prime_power_nodes(const DegreeBounds& bounds, unsigned long p1, unsigned long p2);

/// Column nodes p1^i p2^j of the transposed Vandermonde system, i-major.
/// Throws InternalError if two coincide.
std::vector<Rat> prime_power_columns(const DegreeBounds& bounds, unsigned long p1, unsigned long p2);

/// Grid nodes (i, j), i = 0..m, j = 0..n, i-major.
std::vector<Point> grid_nodes(const DegreeBounds& bounds);

/// det S(node) for each node. One determinant per node; the per-node
/// counters are merged in node order.
std::vector<Rat> sylvester_data(const PolyMat& s, std::span<const Point> nodes, OpCounter& counter);

ImplicitResult method_unstructured(const RatParam& p, const MethodConfig& cfg = {});
ImplicitResult method_dual_vandermonde(const RatParam& p, const MethodConfig& cfg = {});
ImplicitResult method_kronecker(const RatParam& p);

/// Runs the configured method. Throws InternalError if the result fails
/// substitute_check; a degree-deficient result is returned with
/// degree_tight == false.
ImplicitResult implicitize(const RatParam& p, const MethodConfig& cfg = {});

}  // namespace implicit
