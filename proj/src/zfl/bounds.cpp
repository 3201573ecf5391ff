#include "zfl/bounds.hpp"

#include <cmath>
#include <vector>

namespace zfl {
namespace {

void require_edge(const Graph& g) {
  if (g.edge_count() == 0) fail(ErrorCode::Precondition, "bound requires at least one edge");
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::OutOfRange, "probability must lie in [0, 1]");
}

std::size_t min_degree_checked(const Graph& g) {
  const std::size_t delta = g.min_degree();
  if (delta == 0) fail(ErrorCode::Precondition, "bound requires minimum degree >= 1");
  return delta;
}

}  // namespace

double degree_sum_bound(const Graph& g, double p) {
  require_edge(g);
  check_probability(p);
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d > 0) sum += d * std::pow(p, d);
  }
  return sum;
}

BigInt degree_sum_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b) {
  require_edge(g);
  const std::size_t n = g.order();
  BigInt sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d > 0) sum += BigInt(d) * ipow(a, d) * ipow(b, n - d);
  }
  return sum;
}

double min_degree_bound(const Graph& g, double p) {
  check_probability(p);
  const std::size_t delta = min_degree_checked(g);
  const double dd = static_cast<double>(delta);
  return dd * static_cast<double>(g.order()) * std::pow(p, dd);
}

BigInt min_degree_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b) {
  const std::size_t delta = min_degree_checked(g);
  const std::size_t n = g.order();
  return BigInt(delta) * n * ipow(a, delta) * ipow(b, n - delta);
}

std::string few_low_degree_violation(const Graph& g, double p, std::size_t d, std::size_t N) {
  const std::size_t n = g.order();
  if (has_isolated_vertex(g)) return "graph has an isolated vertex";
  if (d < 1 || d > n) return "d must satisfy 1 <= d <= n";
  if (!(p >= 0.0 && p <= 1.0)) return "p outside [0, 1]";
  if (p > std::exp(-1.0 / static_cast<double>(d))) return "p exceeds e^(-1/d)";
  std::vector<std::size_t> count(n, 0);
  for (Vertex v = 0; v < n; ++v) ++count[g.degree(v)];
  for (std::size_t k = 1; k < d; ++k) {
    // N^k, saturating once it passes n.
    std::size_t limit = 1;
    for (std::size_t i = 0; i < k && limit <= n; ++i) limit *= N;
    if (count[k] > limit)
      return "more than N^" + std::to_string(k) + " vertices of degree " + std::to_string(k);
  }
  return {};
}

double few_low_degree_bound(const Graph& g, double p, std::size_t d, std::size_t N) {
  if (auto why = few_low_degree_violation(g, p, d, N); !why.empty())
    fail(ErrorCode::Precondition, "few-low-degree bound: " + why);
  const double dd = static_cast<double>(d);
  return 4.0 * p * static_cast<double>(N) + dd * static_cast<double>(g.order()) * std::pow(p, dd);
}

BigInt few_low_degree_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b,
                                   std::size_t d, std::size_t N) {
  const std::size_t n = g.order();
  if (d < 1 || d > n) fail(ErrorCode::Precondition, "d must satisfy 1 <= d <= n");
  return BigInt(4) * a * N * ipow(b, n - 1) + BigInt(d) * n * ipow(a, d) * ipow(b, n - d);
}

BigInt degree_count_bound(const Graph& g, std::size_t k) {
  require_edge(g);
  const auto n = static_cast<long long>(g.order());
  if (static_cast<long long>(k) > n) fail(ErrorCode::OutOfRange, "k must satisfy k <= n");
  BigInt sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<long long>(g.degree(v));
    if (d > 0) sum += BigInt(d) * binomial(n - d, static_cast<long long>(k) - d);
  }
  return sum;
}

Rational path_count_lower_bound(std::size_t n, std::size_t k) {
  if (k > n) fail(ErrorCode::OutOfRange, "k must satisfy k <= n");
  if (n == 0) return 0;
  const BigInt k2 = BigInt(k) * k;
  return Rational(k2 * binomial(static_cast<long long>(n), static_cast<long long>(k)),
                  BigInt(n) + k2);
}

Rational tree_count_bound(std::size_t n, std::size_t k) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "tree needs n >= 1");
  if (k > n) fail(ErrorCode::OutOfRange, "k must satisfy k <= n");
  const BigInt k4 = ipow(BigInt(k), 4);
  return Rational(13 * k4 * binomial(static_cast<long long>(n), static_cast<long long>(k)),
                  BigInt(n) * n);
}

double double_pendant_bound(std::size_t n, double p) {
  check_probability(p);
  return 4.0 * p + static_cast<double>(n) * p * p;
}

BigInt double_pendant_bound_scaled(std::size_t n, const BigInt& a, const BigInt& b) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "n must be at least 2");
  return 4 * a * ipow(b, n - 1) + BigInt(n) * a * a * ipow(b, n - 2);
}

std::size_t small_k_range(std::size_t n, std::size_t delta) {
  if (delta < 3) fail(ErrorCode::Precondition, "small-k range needs delta >= 3");
  const double dd = static_cast<double>(delta);
  const double x = std::pow(2.0 * dd, -1.0 / dd) * std::pow(static_cast<double>(n), 1.0 - 1.0 / dd);
  // Guard the floor against values that land a rounding error below an integer.
  return static_cast<std::size_t>(std::floor(x + 1e-9));
}

bool min_degree_covers_all_k(std::size_t n, std::size_t delta) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "needs n >= 2");
  const double l = std::log2(static_cast<double>(n));
  return static_cast<double>(delta) >= l + 2.0 * std::log2(l);
}

EndpointPairComparison endpoint_vs_pair(std::size_t n, const Rational& p) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "needs n >= 2");
  const Rational q = 1 - p;
  Rational pair_miss = 1;
  const Rational base = 1 - p * p;
  for (std::size_t i = 0; i < (n - 1) / 2; ++i) pair_miss *= base;
  return {1 - q * q, 1 - pair_miss};
}

}  // namespace zfl
