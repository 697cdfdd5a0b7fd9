#include "implicit/implicitize.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "implicit/structmat.hpp"

namespace implicit {

namespace {

bool is_prime(unsigned long v) {
  if (v < 2) return false;
  for (unsigned long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Yields (x(t), y(t)) for t = 0, 1, 2, ... skipping poles and repeated points.
class CurveNodeStream {
 public:
  explicit CurveNodeStream(const RatParam& p) : p_(p) {}

  Point next() {
    for (;; t_ += 1) {
      const Rat v1 = poly_eval(p_.x_denominator(), t_);
      const Rat v2 = poly_eval(p_.y_denominator(), t_);
      if (v1 == 0 || v2 == 0) continue;
      Point pt{poly_eval(p_.x_numerator(), t_) / v1, poly_eval(p_.y_numerator(), t_) / v2};
      if (std::find(seen_.begin(), seen_.end(), pt) != seen_.end()) continue;
      seen_.push_back(pt);
      t_ += 1;
      return pt;
    }
  }

 private:
  const RatParam& p_;
  Rat t_{0};
  std::vector<Point> seen_;
};

std::size_t max_bits(std::span<const Rat> values) {
  std::size_t bits = 0;
  for (const auto& v : values) bits = std::max(bits, bit_length(v));
  return bits;
}

// Canonicalizes the raw coefficient vector and fills the common result fields.
void finish(ImplicitResult& r, const RatParam& p, const std::vector<Rat>& raw) {
  BiPoly f(r.bounds.m, r.bounds.n, raw);
  if (f.is_zero()) throw InternalError("interpolation produced the zero polynomial");
  r.F = canonicalize(f);
  r.verified = substitute_check(r.F, p);
  r.degree_tight = r.F.x_bound() == r.bounds.m && r.F.y_bound() == r.bounds.n;
  r.counter = merged(r.data_counter, r.solve_counter);
  r.data_max_bits = max_bits(r.data);
}

// The solved coefficients must reproduce every datum when evaluated
// independently of the solver.
void check_data(const std::vector<Rat>& raw, const ImplicitResult& r) {
  const BiPoly f(r.bounds.m, r.bounds.n, raw);
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    if (bipoly_eval(f, r.nodes[k].x, r.nodes[k].y) != r.data[k]) {
      throw InternalError("interpolant does not reproduce datum " + std::to_string(k));
    }
  }
}

}  // namespace

DegreeBounds degree_bounds(const RatParam& p) {
  DegreeBounds b;
  b.m = p.y_degree();
  b.n = p.x_degree();
  b.N = (b.m + 1) * (b.n + 1);
  return b;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::unstructured:
      return "unstructured";
    case Method::dual_vandermonde:
      return "dualvand";
    case Method::kronecker:
      return "kron";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "unstructured") return Method::unstructured;
  if (name == "dualvand") return Method::dual_vandermonde;
  if (name == "kron") return Method::kronecker;
  return std::nullopt;
}

void validate(const MethodConfig& cfg) {
  if (!is_prime(cfg.p1) || !is_prime(cfg.p2)) throw InvalidArgument("p1 and p2 must be primes");
  if (cfg.p1 == cfg.p2) throw InvalidArgument("p1 and p2 must be distinct");
}

std::vector<Point> nodes_on_curve(const RatParam& p, std::size_t count) {
  if (count > 1 && p.x_degree() == 0 && p.y_degree() == 0) {
    throw DegenerateInput("constant parametrization has a single point");
  }
  CurveNodeStream stream(p);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(stream.next());
  return out;
}

std::vector<Rat> monomial_row(const Point& node, const DegreeBounds& bounds) {
  std::vector<Rat> row(bounds.N);
  Rat xi(1);
  for (std::size_t i = 0; i <= bounds.m; ++i) {
    Rat xy = xi;
    for (std::size_t j = 0; j <= bounds.n; ++j) {
      row[i * (bounds.n + 1) + j] = xy;
      xy *= node.y;
    }
    xi *= node.x;
  }
  return row;
}

MatQ unstructured_system(std::span<const Point> nodes, const DegreeBounds& bounds) {
  if (nodes.empty()) throw InvalidArgument("unstructured system needs at least one node");
  MatQ a(nodes.size(), bounds.N);
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const auto row = monomial_row(nodes[r], bounds);
    for (std::size_t c = 0; c < bounds.N; ++c) a(r, c) = row[c];
  }
  return a;
}

std::vector<Point> prime_power_nodes(const DegreeBounds& bounds, unsigned long p1, unsigned long p2) {
  std::vector<Point> nodes;
  nodes.reserve(bounds.N);
  Rat x(1);
  Rat y(1);
  for (std::size_t k = 0; k < bounds.N; ++k) {
    nodes.push_back({x, y});
    x *= p1;
    y *= p2;
  }
  return nodes;
}

std::vector<Rat> prime_power_columns(const DegreeBounds& bounds, unsigned long p1, unsigned long p2) {
  std::vector<Rat> alpha(bounds.N);
  Rat xi(1);
  for (std::size_t i = 0; i <= bounds.m; ++i) {
    Rat v = xi;
    for (std::size_t j = 0; j <= bounds.n; ++j) {
      alpha[i * (bounds.n + 1) + j] = v;
      v *= p2;
    }
    xi *= p1;
  }
  std::vector<Rat> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InternalError("prime-power column nodes are not distinct");
  }
  return alpha;
}

std::vector<Point> grid_nodes(const DegreeBounds& bounds) {
  std::vector<Point> nodes;
  nodes.reserve(bounds.N);
  for (std::size_t i = 0; i <= bounds.m; ++i) {
    for (std::size_t j = 0; j <= bounds.n; ++j) nodes.push_back({Rat(i), Rat(j)});
  }
  return nodes;
}

std::vector<Rat> sylvester_data(const PolyMat& s, std::span<const Point> nodes, OpCounter& counter) {
  // Each datum is independent; per-node counters keep the merge order fixed.
  std::vector<Rat> data(nodes.size());
  std::vector<OpCounter> local(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    data[k] = det_bareiss(eval_polymat(s, nodes[k].x, nodes[k].y), local[k]);
  }
  for (const auto& c : local) counter.merge(c);
  return data;
}

ImplicitResult method_unstructured(const RatParam& p, const MethodConfig& cfg) {
  ImplicitResult r;
  r.method = Method::unstructured;
  r.bounds = degree_bounds(p);
  const std::size_t cap = cfg.max_extra_nodes.value_or(2 * r.bounds.N);

  if (r.bounds.N > 1 && p.x_degree() == 0 && p.y_degree() == 0) {
    throw DegenerateInput("constant parametrization has a single point");
  }
  CurveNodeStream stream(p);
  for (std::size_t k = 0; k < r.bounds.N; ++k) r.nodes.push_back(stream.next());
  MatQ a = unstructured_system(r.nodes, r.bounds);
  r.data_counter.muls += r.bounds.N * r.bounds.N;

  std::vector<std::vector<Rat>> basis;
  for (;;) {
    basis = nullspace(a, r.solve_counter);
    if (basis.empty()) throw InternalError("interpolation matrix has trivial nullspace");
    if (basis.size() == 1) break;
    if (r.extra_nodes == cap) {
      throw DegenerateInput("nullspace dimension " + std::to_string(basis.size()) + " after " +
                            std::to_string(cap) + " extra nodes");
    }
    r.nodes.push_back(stream.next());
    a.append_row(monomial_row(r.nodes.back(), r.bounds));
    r.data_counter.muls += r.bounds.N;
    ++r.extra_nodes;
  }

  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.data_counter.observe(a(i, j));
      r.matrix_max_bits = std::max(r.matrix_max_bits, bit_length(a(i, j)));
    }
  }
  r.data.assign(r.nodes.size(), Rat(0));
  finish(r, p, basis.front());
  return r;
}

ImplicitResult method_dual_vandermonde(const RatParam& p, const MethodConfig& cfg) {
  validate(cfg);
  ImplicitResult r;
  r.method = Method::dual_vandermonde;
  r.bounds = degree_bounds(p);
  const PolyMat s = build_parametric_sylvester(p);

  r.nodes = prime_power_nodes(r.bounds, cfg.p1, cfg.p2);
  r.data = sylvester_data(s, r.nodes, r.data_counter);
  const std::vector<Rat> alpha = prime_power_columns(r.bounds, cfg.p1, cfg.p2);
  // Entries are alpha^k with alpha >= 1, so the widest is max(alpha)^(N-1).
  r.matrix_max_bits = bit_length(pow(*std::max_element(alpha.begin(), alpha.end()), r.bounds.N - 1));

  const std::vector<Rat> raw = vandermonde_solve_dual(alpha, r.data, r.solve_counter);
  check_data(raw, r);
  finish(r, p, raw);
  return r;
}

ImplicitResult method_kronecker(const RatParam& p) {
  ImplicitResult r;
  r.method = Method::kronecker;
  r.bounds = degree_bounds(p);
  const PolyMat s = build_parametric_sylvester(p);

  r.nodes = grid_nodes(r.bounds);
  r.data = sylvester_data(s, r.nodes, r.data_counter);
  std::vector<Rat> xs(r.bounds.m + 1);
  std::vector<Rat> ys(r.bounds.n + 1);
  for (std::size_t i = 0; i <= r.bounds.m; ++i) xs[i] = i;
  for (std::size_t j = 0; j <= r.bounds.n; ++j) ys[j] = j;
  r.matrix_max_bits = bit_length(pow(xs.back(), r.bounds.m) * pow(ys.back(), r.bounds.n));

  const std::vector<Rat> raw = kron_solve(xs, ys, r.data, r.solve_counter);
  check_data(raw, r);
  finish(r, p, raw);
  return r;
}

ImplicitResult implicitize(const RatParam& p, const MethodConfig& cfg) {
  ImplicitResult r;
  switch (cfg.method) {
    case Method::unstructured:
      r = method_unstructured(p, cfg);
      break;
    case Method::dual_vandermonde:
      r = method_dual_vandermonde(p, cfg);
      break;
    case Method::kronecker:
      r = method_kronecker(p);
      break;
  }
  if (!r.verified) throw InternalError("implicit equation does not vanish on the parametrization");
  return r;
}

}  // namespace implicit
