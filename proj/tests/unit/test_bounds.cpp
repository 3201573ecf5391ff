#include <doctest.h>

#include "zfl/bounds.hpp"
#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/polynomial.hpp"

using namespace zfl;

namespace {

double exact(const Graph& g, double p) { return prob_zfs_exact(zf_polynomial_exact(g), p); }

// Probability that some two consecutive vertices of an n-vertex path are both
// chosen, by a two-state recurrence over the path.
Rational consecutive_pair_probability(std::size_t n, const Rational& p) {
  Rational last_in = p;       // no pair yet, last vertex chosen
  Rational last_out = 1 - p;  // no pair yet, last vertex not chosen
  for (std::size_t i = 1; i < n; ++i) {
    const Rational in = last_out * p;
    const Rational out = (last_in + last_out) * (1 - p);
    last_in = in;
    last_out = out;
  }
  return 1 - last_in - last_out;
}

}  // namespace

TEST_CASE("degree-sum bound") {
  CHECK(degree_sum_bound(star_graph(4), 0.5) == doctest::Approx(1.875));
  const Graph c4 = cycle_graph(4);
  CHECK(degree_sum_bound(c4, 0.1) == doctest::Approx(0.08));
  CHECK(exact(c4, 0.1) == doctest::Approx(0.0361));
  CHECK(degree_sum_bound(c4, 0.0) == 0.0);
  CHECK_THROWS_AS(degree_sum_bound(empty_graph(3), 0.5), Error);
}

TEST_CASE("min-degree bound") {
  const Graph k2 = complete_graph(2);
  for (double p : {0.1, 0.25, 0.5, 0.9}) {
    CHECK(min_degree_bound(k2, p) == doctest::Approx(2 * p));
    CHECK(min_degree_bound(k2, p) - exact(k2, p) == doctest::Approx(p * p));
  }
  CHECK(min_degree_bound(cycle_graph(6), 0.2) == doctest::Approx(0.48));
  CHECK(min_degree_bound(cycle_graph(6), 0.2) >= exact(cycle_graph(6), 0.2));
  CHECK(min_degree_bound(hypercube_graph(3), 0.3) == doctest::Approx(0.648));
  CHECK(min_degree_bound(hypercube_graph(3), 0.3) >= exact(hypercube_graph(3), 0.3));
  CHECK_THROWS_AS(min_degree_bound(disjoint_union(k2, empty_graph(1)), 0.5), Error);
}

TEST_CASE("few-low-degree bound") {
  const Graph c8 = cycle_graph(8);
  for (double p : {0.1, 0.3, 0.5})
    CHECK(few_low_degree_bound(c8, p, 2, 0) == doctest::Approx(16 * p * p));
  const Graph p8 = path_graph(8);
  CHECK(few_low_degree_bound(p8, 0.1, 2, 2) == doctest::Approx(0.96));
  CHECK(few_low_degree_bound(p8, 0.1, 2, 2) >= exact(p8, 0.1));
  const Graph grid = grid_graph(3, 3);
  CHECK(few_low_degree_violation(grid, 0.1, 4, 3).empty());
  CHECK(few_low_degree_bound(grid, 0.1, 4, 3) >= exact(grid, 0.1));
  CHECK_FALSE(few_low_degree_violation(p8, 0.1, 2, 1).empty());
  CHECK_FALSE(few_low_degree_violation(c8, 0.7, 2, 0).empty());
  CHECK_THROWS_AS(few_low_degree_bound(p8, 0.1, 2, 1), Error);
}

TEST_CASE("degree-count bound") {
  CHECK(degree_count_bound(complete_graph(3), 2) == 6);
  CHECK(degree_count_bound(path_graph(3), 1) == 2);
  CHECK(degree_count_bound(cycle_graph(4), 2) == 8);
}

TEST_CASE("path-count lower bound") {
  CHECK(path_count_lower_bound(5, 2) == Rational(40, 9));
  for (std::size_t n = 1; n < 12; ++n) CHECK(path_count_lower_bound(n, 0) == 0);
  CHECK(path_count_lower_bound(10, 3) == Rational(1080, 19));
  CHECK(zf_path_closed_form(10, 3) == 100);
}

TEST_CASE("small-k range and the all-k predicate") {
  CHECK(small_k_range(1000, 3) == 55);
  CHECK(small_k_range(5, 3) >= 1);
  CHECK(min_degree_covers_all_k(8, 7));
  CHECK_THROWS_AS(small_k_range(100, 2), Error);
}

TEST_CASE("double-pendant bound") {
  CHECK(double_pendant_bound(10, 0.1) == doctest::Approx(0.5));
  CHECK(double_pendant_bound_scaled(10, 1, 10) == BigInt(4) * ipow(BigInt(10), 9) + 10 * ipow(BigInt(10), 8));
}

TEST_CASE("endpoint probability is below the consecutive-pair probability for p > 8/n") {
  for (std::size_t n = 16; n <= 48; n += 4) {
    for (int j = 1; j < 50; ++j) {
      const Rational p(j, 50);
      if (p <= Rational(8, static_cast<long long>(n))) continue;
      const auto cmp = endpoint_vs_pair(n, p);
      CHECK(cmp.endpoint == 1 - (1 - p) * (1 - p));
      CHECK(cmp.endpoint < cmp.pair);
      CHECK(cmp.pair <= consecutive_pair_probability(n, p));
    }
  }
}
