#include <doctest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/graph6.hpp"
#include "zfl/parallel.hpp"
#include "zfl/polynomial.hpp"

using namespace zfl;

namespace {

std::vector<u128> coeffs(std::initializer_list<unsigned> values) {
  return {values.begin(), values.end()};
}

bool matches_oracle(const Graph& g) {
  const auto poly = zf_polynomial_exact(g);
  const auto expect = oracle::zf_counts(g);
  if (poly.n != g.order() || poly.coeffs.size() != expect.size()) return false;
  for (std::size_t k = 0; k < expect.size(); ++k)
    if (poly.coeffs[k] != expect[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("small polynomials") {
  CHECK(zf_polynomial_exact(path_graph(4)).coeffs == coeffs({0, 2, 6, 4, 1}));
  CHECK(zf_polynomial_exact(cycle_graph(4)).coeffs == coeffs({0, 0, 4, 4, 1}));
  CHECK(zf_polynomial_exact(complete_graph(3)).coeffs == coeffs({0, 0, 3, 1}));
  CHECK(zf_polynomial_exact(complete_graph(1)).coeffs == coeffs({0, 1}));
  CHECK(zf_polynomial_exact(star_graph(4)).coeffs == coeffs({0, 0, 3, 4, 1}));
}

TEST_CASE("path closed form") {
  CHECK(zf_path_closed_form(5, 1) == 2);
  CHECK(zf_path_closed_form(5, 2) == 9);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(zf_path_closed_form(n, n) == 1);
  for (std::size_t n = 1; n <= 16; ++n) CHECK(path_polynomial(n) == zf_polynomial_exact(path_graph(n)));
}

TEST_CASE("closed-form polynomials agree with enumeration") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(clique_polynomial(n) == zf_polynomial_exact(complete_graph(n)));
    CHECK(empty_graph_polynomial(n) == zf_polynomial_exact(empty_graph(n)));
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 11, 0.2 + 0.005 * trial, rng);
    if (!matches_oracle(g)) FAIL("mismatch on " << trial);
  }
  std::ifstream in(ZFL_TEST_DATA_DIR "/connected_n1-8.g6");
  std::string line;
  for (int i = 0; i < 400 && std::getline(in, line); ++i)
    if (!matches_oracle(graph6_decode(line))) FAIL("mismatch on " << line);
}

TEST_CASE("enumeration beyond one machine word of subsets is thread-count independent") {
  const Graph g = grid_graph(3, 6);
  set_thread_count(1);
  const auto serial = zf_polynomial_exact(g);
  set_thread_count(3);
  const auto threaded = zf_polynomial_exact(g);
  set_thread_count(0);
  CHECK(serial == threaded);
  CHECK(serial.coeffs.back() == 1);
}

TEST_CASE("union polynomial is the convolution") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a = oracle::random_graph(1 + trial % 6, 0.5, rng);
    const Graph b = oracle::random_graph(1 + trial % 5, 0.5, rng);
    CHECK(union_polynomial(zf_polynomial_exact(a), zf_polynomial_exact(b)) ==
          zf_polynomial_exact(disjoint_union(a, b)));
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(zf_polynomial_exact(path_graph(25)), Error);
  try {
    zf_polynomial_exact(path_graph(31), 31);
    FAIL("expected the hard cap to apply");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("probabilities") {
  const auto c4 = zf_polynomial_exact(cycle_graph(4));
  CHECK(prob_zfs_exact(c4, 0.5) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(prob_zfs_rational(c4, Rational(1, 2)) == Rational(9, 16));
  for (const auto& poly : {c4, path_polynomial(7), clique_polynomial(5)}) {
    CHECK(prob_zfs_exact(poly, 0.0) == 0.0);
    CHECK(prob_zfs_exact(poly, 1.0) == 1.0);
  }
  CHECK_THROWS_AS(prob_zfs_exact(c4, 1.5), Error);
  CHECK_THROWS_AS(prob_zfs_exact(c4, -0.1), Error);
}

TEST_CASE("scaled probability is the numerator over b^n") {
  const auto poly = zf_polynomial_exact(wheel_graph(7));
  for (int a = 0; a <= 13; ++a) {
    const Rational p(a, 13);
    CHECK(Rational(scaled_probability(poly, a, 13), ipow(BigInt(13), 7)) == prob_zfs_rational(poly, p));
  }
}

TEST_CASE("clique closed form") {
  CHECK(prob_kn_closed_form(3, 0.5) == 0.5);
  for (std::size_t n = 2; n <= 10; ++n) CHECK(prob_kn_closed_form(n, 1.0) == 1.0);
  CHECK_THROWS_AS(prob_kn_closed_form(1, 0.5), Error);
  CHECK(prob_kn_closed_form(5, 0.5) ==
        doctest::Approx(prob_zfs_exact(zf_polynomial_exact(complete_graph(5)), 0.5)).epsilon(1e-14));
}

TEST_CASE("long-path closed form agrees with exact rational evaluation") {
  for (std::size_t n : {65, 70, 80, 96}) {
    const auto poly = path_polynomial(n);
    for (int j = 1; j < 20; ++j) {
      const double exact = to_double(prob_zfs_rational(poly, Rational(j, 100)));
      CHECK(prob_path_closed_form(n, j / 100.0) == doctest::Approx(exact).epsilon(1e-11));
    }
  }
  CHECK(prob_path_closed_form(10000, 0.0) == 0.0);
  CHECK(prob_path_closed_form(10000, 1.0) == 1.0);
}

TEST_CASE("empty graph closed form") {
  CHECK(prob_empty_closed_form(3, 0.5) == 0.125);
  CHECK(prob_zfs_exact(empty_graph_polynomial(4), 0.5) == 0.0625);
}
