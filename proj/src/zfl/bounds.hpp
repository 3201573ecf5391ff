#pragma once

#include <cstddef>
#include <string>

#include "zfl/exact.hpp"
#include "zfl/graph.hpp"

namespace zfl {

// Upper bounds on Pr[B_p(G) is zero forcing] and on z(G; k), plus the
// matching exact forms used by the verification harness. The `_scaled`
// variants return b^n times the bound at p = a/b, so that comparisons with
// `scaled_probability` are integer comparisons.

/// sum_v d(v) p^d(v). Requires at least one edge.
double degree_sum_bound(const Graph& g, double p);
BigInt degree_sum_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b);

/// delta * n * p^delta for minimum degree delta >= 1.
double min_degree_bound(const Graph& g, double p);
BigInt min_degree_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b);

/// Hypotheses for `few_low_degree_bound`: no isolated vertex, 1 <= d <= n,
/// at most N^k vertices of degree k for every 1 <= k < d, p <= e^(-1/d).
/// Returns an empty string when they hold, else the first violated one.
std::string few_low_degree_violation(const Graph& g, double p, std::size_t d, std::size_t N);

/// 4pN + d n p^d. Throws `Error(Precondition)` when the hypotheses fail.
double few_low_degree_bound(const Graph& g, double p, std::size_t d, std::size_t N);
BigInt few_low_degree_bound_scaled(const Graph& g, const BigInt& a, const BigInt& b,
                                   std::size_t d, std::size_t N);

/// sum_v d(v) C(n - d(v), k - d(v)); bounds z(G; k) for k < n.
BigInt degree_count_bound(const Graph& g, std::size_t k);

/// k^2 / (n + k^2) * C(n, k); a lower bound on z(P_n; k).
Rational path_count_lower_bound(std::size_t n, std::size_t k);

/// 13 k^4 / n^2 * C(n, k); bounds z(T; k) for trees T other than the path.
Rational tree_count_bound(std::size_t n, std::size_t k);

/// 4p + n p^2, for graphs with a vertex anchoring two pendant paths.
double double_pendant_bound(std::size_t n, double p);
BigInt double_pendant_bound_scaled(std::size_t n, const BigInt& a, const BigInt& b);

/// Largest k with k <= (2 delta)^(-1/delta) n^(1 - 1/delta); every such k
/// satisfies z(G;k) <= z(P_n;k) when the minimum degree is delta >= 3.
std::size_t small_k_range(std::size_t n, std::size_t delta);

/// True when delta >= log2(n) + 2 log2(log2(n)), the minimum degree that
/// makes the comparison with the path hold for every k. Requires n >= 2.
bool min_degree_covers_all_k(std::size_t n, std::size_t delta);

/// Endpoint versus consecutive-pair comparison on n labelled vertices:
/// endpoint = 1 - (1-p)^2, pair = 1 - (1-p^2)^floor((n-1)/2).
struct EndpointPairComparison {
  Rational endpoint;
  Rational pair;
};
EndpointPairComparison endpoint_vs_pair(std::size_t n, const Rational& p);

}  // namespace zfl
