#pragma once

#include <cstddef>
#include <vector>

#include "zfl/exact.hpp"
#include "zfl/graph.hpp"

namespace zfl {

/// Zero forcing polynomial: coeffs[k] = number of zero forcing sets of size k,
/// k = 0..n. For n >= 1, coeffs[0] = 0 and coeffs[n] = 1.
struct ZfPolynomial {
  std::size_t n = 0;
  std::vector<u128> coeffs;

  friend bool operator==(const ZfPolynomial&, const ZfPolynomial&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;
inline constexpr std::size_t kHardEnumerationCap = 30;

/// Counts zero forcing sets of every size by closing all 2^n subsets.
/// `max_n` is clamped to kHardEnumerationCap; larger graphs throw
/// `Error(CapExceeded)`. Work is split across thread_count() workers; the
/// result does not depend on the split.
ZfPolynomial zf_polynomial_exact(const Graph& g, std::size_t max_n = kDefaultEnumerationCap);

/// z(P_n; k) = C(n, k) - C(n-k-1, k).
u128 zf_path_closed_form(std::size_t n, std::size_t k);

ZfPolynomial path_polynomial(std::size_t n);
ZfPolynomial clique_polynomial(std::size_t n);
ZfPolynomial empty_graph_polynomial(std::size_t n);

/// Polynomial of a disjoint union: a set is zero forcing iff both halves are.
ZfPolynomial union_polynomial(const ZfPolynomial& a, const ZfPolynomial& b);

/// Pr[B_p is zero forcing] = sum_k z_k p^k (1-p)^(n-k).
double prob_zfs_exact(const ZfPolynomial& poly, double p);
Rational prob_zfs_rational(const ZfPolynomial& poly, const Rational& p);

/// b^n * Pr at p = a/b, as an exact integer: sum_k z_k a^k (b-a)^(n-k).
BigInt scaled_probability(const ZfPolynomial& poly, const BigInt& a, const BigInt& b);

/// Probability that B_p(K_n) has at least n-1 vertices. Requires n >= 2.
double prob_kn_closed_form(std::size_t n, double p);

/// Path probability from the closed-form coefficients; log-space terms for
/// n > 64 so it stays finite for thousands of vertices.
double prob_path_closed_form(std::size_t n, double p);

double prob_empty_closed_form(std::size_t n, double p);

}  // namespace zfl
