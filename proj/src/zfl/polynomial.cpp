#include "zfl/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "zfl/forcing.hpp"
#include "zfl/parallel.hpp"

namespace zfl {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::OutOfRange, "probability must lie in [0, 1]");
}

void check_polynomial(const ZfPolynomial& poly) {
  if (poly.n == 0 || poly.coeffs.size() != poly.n + 1)
    fail(ErrorCode::InvalidArgument, "polynomial must describe a graph with n >= 1");
}

}  // namespace

ZfPolynomial zf_polynomial_exact(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n == 0) fail(ErrorCode::InvalidArgument, "polynomial of the empty graph");
  const std::size_t cap = std::min(max_n, kHardEnumerationCap);
  if (n > cap)
    fail(ErrorCode::CapExceeded, "exact enumeration capped at " + std::to_string(cap) +
                                     " vertices, graph has " + std::to_string(n));

  std::vector<std::uint64_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.row(v)[0];
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << n;

  // Partition by the high bits of the subset index.
  const auto workers = static_cast<std::uint64_t>(thread_count());
  const unsigned high_bits =
      std::min<unsigned>(static_cast<unsigned>(n),
                         static_cast<unsigned>(std::bit_width(workers - 1)) + 4);
  const std::size_t chunks = std::size_t{1} << high_bits;
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(n + 1, 0));

  parallel_chunks(total, chunks, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
    auto& counts = partial[c];
    for (std::uint64_t s = begin; s < end; ++s)
      if (closure_mask(rows.data(), s, full) == full) ++counts[std::popcount(s)];
  });

  ZfPolynomial poly{n, std::vector<u128>(n + 1, 0)};
  for (const auto& counts : partial)
    for (std::size_t k = 0; k <= n; ++k) poly.coeffs[k] += counts[k];
  return poly;
}

u128 zf_path_closed_form(std::size_t n, std::size_t k) {
  const auto nn = static_cast<long long>(n);
  const auto kk = static_cast<long long>(k);
  return binomial_u128(nn, kk) - binomial_u128(nn - kk - 1, kk);
}

ZfPolynomial path_polynomial(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "path needs n >= 1");
  ZfPolynomial poly{n, std::vector<u128>(n + 1)};
  for (std::size_t k = 0; k <= n; ++k) poly.coeffs[k] = zf_path_closed_form(n, k);
  return poly;
}

ZfPolynomial clique_polynomial(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "clique needs n >= 1");
  ZfPolynomial poly{n, std::vector<u128>(n + 1, 0)};
  poly.coeffs[n] = 1;
  if (n >= 2) poly.coeffs[n - 1] = n;
  return poly;
}

ZfPolynomial empty_graph_polynomial(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty graph needs n >= 1");
  ZfPolynomial poly{n, std::vector<u128>(n + 1, 0)};
  poly.coeffs[n] = 1;
  return poly;
}

ZfPolynomial union_polynomial(const ZfPolynomial& a, const ZfPolynomial& b) {
  check_polynomial(a);
  check_polynomial(b);
  ZfPolynomial out{a.n + b.n, std::vector<u128>(a.n + b.n + 1, 0)};
  for (std::size_t i = 0; i <= a.n; ++i)
    for (std::size_t j = 0; j <= b.n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

double prob_zfs_exact(const ZfPolynomial& poly, double p) {
  check_polynomial(poly);
  check_probability(p);
  const std::size_t n = poly.n;
  const long double pl = p;
  const long double ql = 1.0L - pl;
  std::vector<long double> q_pow(n + 1, 1.0L);
  for (std::size_t i = 1; i <= n; ++i) q_pow[i] = q_pow[i - 1] * ql;
  long double sum = 0.0L;
  long double p_pow = 1.0L;
  for (std::size_t k = 0; k <= n; ++k) {
    if (poly.coeffs[k] != 0)
      sum += static_cast<long double>(poly.coeffs[k]) * p_pow * q_pow[n - k];
    p_pow *= pl;
  }
  return static_cast<double>(std::clamp(sum, 0.0L, 1.0L));
}

BigInt scaled_probability(const ZfPolynomial& poly, const BigInt& a, const BigInt& b) {
  check_polynomial(poly);
  if (a < 0 || a > b || b <= 0)
    fail(ErrorCode::OutOfRange, "probability must lie in [0, 1]");
  const std::size_t n = poly.n;
  const BigInt c = b - a;
  std::vector<BigInt> c_pow(n + 1, BigInt(1));
  for (std::size_t i = 1; i <= n; ++i) c_pow[i] = c_pow[i - 1] * c;
  BigInt sum = 0;
  BigInt a_pow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (poly.coeffs[k] != 0) sum += to_big(poly.coeffs[k]) * a_pow * c_pow[n - k];
    a_pow *= a;
  }
  return sum;
}

Rational prob_zfs_rational(const ZfPolynomial& poly, const Rational& p) {
  const BigInt a = boost::multiprecision::numerator(p);
  const BigInt b = boost::multiprecision::denominator(p);
  return Rational(scaled_probability(poly, a, b), ipow(b, poly.n));
}

double prob_kn_closed_form(std::size_t n, double p) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "clique closed form needs n >= 2");
  check_probability(p);
  const double nd = static_cast<double>(n);
  return nd * (1.0 - p) * std::pow(p, nd - 1.0) + std::pow(p, nd);
}

double prob_path_closed_form(std::size_t n, double p) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "path needs n >= 1");
  check_probability(p);
  if (n <= 64) return prob_zfs_exact(path_polynomial(n), p);
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  // 1 - Pr[not zero forcing] where the failing sets of size k number
  // C(n-k-1, k): no endpoint and no two consecutive vertices.
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  long double fail_sum = 0.0L;
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
    const double top = static_cast<double>(n - k - 1);
    const double kd = static_cast<double>(k);
    const double log_binom =
        std::lgamma(top + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(top - kd + 1.0);
    fail_sum += std::exp(static_cast<long double>(log_binom + kd * lp +
                                                  static_cast<double>(n - k) * lq));
  }
  return static_cast<double>(std::clamp(1.0L - fail_sum, 0.0L, 1.0L));
}

double prob_empty_closed_form(std::size_t n, double p) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty graph needs n >= 1");
  check_probability(p);
  return std::pow(p, static_cast<double>(n));
}

}  // namespace zfl
