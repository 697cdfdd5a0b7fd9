#include <algorithm>
#include <vector>

#include "implicit/structmat.hpp"

namespace implicit {

namespace {

void require_distinct(std::span<const Rat> nodes) {
  std::vector<Rat> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateNode("Vandermonde nodes must be pairwise distinct");
  }
}

void require_shape(std::span<const Rat> nodes, std::span<const Rat> rhs) {
  if (nodes.empty()) throw InvalidArgument("Vandermonde system needs at least one node");
  if (nodes.size() != rhs.size()) throw InvalidArgument("node and right-hand side lengths differ");
}

}  // namespace

std::vector<Rat> vandermonde_solve_primal(std::span<const Rat> nodes, std::span<const Rat> values,
                                          OpCounter& counter) {
  require_shape(nodes, values);
  require_distinct(nodes);
  counter.vandermonde_solves += 1;
  const std::size_t s = nodes.size();
  std::vector<Rat> a(values.begin(), values.end());
  Rat gap;

  // Divided differences: a[i] becomes f[x_0, ..., x_i].
  for (std::size_t k = 0; k + 1 < s; ++k) {
    for (std::size_t i = s - 1; i > k; --i) {
      gap = nodes[i] - nodes[i - k - 1];
      a[i] -= a[i - 1];
      a[i] /= gap;
      counter.adds += 2;
      counter.divs += 1;
      counter.observe(a[i]);
    }
  }
  // Newton form to monomial coefficients.
  for (std::size_t k = s - 1; k-- > 0;) {
    for (std::size_t i = k; i + 1 < s; ++i) {
      a[i] -= nodes[k] * a[i + 1];
      counter.muls += 1;
      counter.adds += 1;
      counter.observe(a[i]);
    }
  }
  return a;
}

std::vector<Rat> vandermonde_solve_dual(std::span<const Rat> nodes, std::span<const Rat> b,
                                        OpCounter& counter) {
  require_shape(nodes, b);
  require_distinct(nodes);
  counter.vandermonde_solves += 1;
  const std::size_t s = nodes.size();
  std::vector<Rat> z(b.begin(), b.end());
  Rat gap;

  for (std::size_t k = 0; k + 1 < s; ++k) {
    for (std::size_t i = s - 1; i > k; --i) {
      z[i] -= nodes[k] * z[i - 1];
      counter.muls += 1;
      counter.adds += 1;
      counter.observe(z[i]);
    }
  }
  for (std::size_t k = s - 1; k-- > 0;) {
    for (std::size_t i = k + 1; i < s; ++i) {
      gap = nodes[i] - nodes[i - k - 1];
      z[i] /= gap;
      counter.adds += 1;
      counter.divs += 1;
    }
    for (std::size_t i = k; i + 1 < s; ++i) {
      z[i] -= z[i + 1];
      counter.adds += 1;
      counter.observe(z[i]);
    }
  }
  return z;
}

std::vector<Rat> kron_solve(std::span<const Rat> x_nodes, std::span<const Rat> y_nodes,
                            std::span<const Rat> b, OpCounter& counter) {
  if (x_nodes.empty() || y_nodes.empty()) throw InvalidArgument("kron_solve needs nodes on both axes");
  const std::size_t nx = x_nodes.size();
  const std::size_t ny = y_nodes.size();
  if (b.size() != nx * ny) throw InvalidArgument("kron_solve right-hand side must have |x_nodes|*|y_nodes| entries");
  require_distinct(x_nodes);
  require_distinct(y_nodes);

  // Stage 1: one V_y solve per x node, on consecutive blocks of b.
  std::vector<std::vector<Rat>> d(nx);
  for (std::size_t k = 0; k < nx; ++k) {
    d[k] = vandermonde_solve_primal(y_nodes, b.subspan(k * ny, ny), counter);
  }
  // Stage 2: one V_x solve per y monomial, on the gathered columns of d.
  std::vector<Rat> c(nx * ny);
  std::vector<Rat> column(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t k = 0; k < nx; ++k) column[k] = d[k][j];
    const std::vector<Rat> f = vandermonde_solve_primal(x_nodes, column, counter);
    for (std::size_t i = 0; i < nx; ++i) c[i * ny + j] = f[i];
  }
  return c;
}

}  // namespace implicit
