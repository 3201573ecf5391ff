#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "zfl/zfl.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  zfl_string_free(s);
  return out;
}

struct Graph {
  zfl_graph* g = nullptr;
  ~Graph() { zfl_graph_free(g); }
};

struct Poly {
  zfl_poly* p = nullptr;
  ~Poly() { zfl_poly_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(zfl_version()) > 0);
  CHECK(std::string(zfl_status_name(ZFL_OK)) == "ok");
  CHECK(std::string(zfl_status_name(ZFL_ERR_CAP)) != std::string(zfl_status_name(ZFL_ERR_PARSE)));
}

TEST_CASE("graph construction and queries") {
  const uint32_t edges[] = {0, 1, 1, 2};
  Graph p3;
  REQUIRE(zfl_graph_from_edges(3, edges, 2, &p3.g) == ZFL_OK);
  CHECK(zfl_graph_order(p3.g) == 3);
  CHECK(zfl_graph_edge_count(p3.g) == 2);
  size_t d = 0;
  CHECK(zfl_graph_degree(p3.g, 1, &d) == ZFL_OK);
  CHECK(d == 2);
  CHECK(zfl_graph_degree(p3.g, 7, &d) == ZFL_ERR_RANGE);
  CHECK(std::string(zfl_last_error()).find('7') != std::string::npos);
  char* text = nullptr;
  CHECK(zfl_graph_to_graph6(p3.g, &text) == ZFL_OK);
  CHECK(take(text) == "Bg");

  Graph k3, c4, hub, w5;
  CHECK(zfl_graph_from_graph6("Bw", &k3.g) == ZFL_OK);
  CHECK(zfl_graph_edge_count(k3.g) == 3);
  CHECK(zfl_graph_from_graph6("B!", &k3.g) == ZFL_ERR_PARSE);
  CHECK(zfl_graph_from_family("cycle:4", &c4.g) == ZFL_OK);
  CHECK(zfl_graph_from_family("complete:1", &hub.g) == ZFL_OK);
  CHECK(zfl_graph_join(c4.g, hub.g, &w5.g) == ZFL_OK);
  CHECK(zfl_graph_degree(w5.g, 4, &d) == ZFL_OK);
  CHECK(d == 4);
  Graph u;
  CHECK(zfl_graph_union(p3.g, c4.g, &u.g) == ZFL_OK);
  CHECK(zfl_graph_order(u.g) == 7);

  Graph bad;
  CHECK(zfl_graph_from_family("cycle:2", &bad.g) == ZFL_ERR_INVALID);
  CHECK(zfl_graph_from_family(nullptr, &bad.g) == ZFL_ERR_INVALID);
  CHECK(bad.g == nullptr);
}

TEST_CASE("forcing through the C interface") {
  Graph c4;
  REQUIRE(zfl_graph_from_family("cycle:4", &c4.g) == ZFL_OK);
  const uint32_t adjacent[] = {1, 2};
  const uint32_t opposite[] = {0, 2};
  int ok = -1;
  CHECK(zfl_is_zfs(c4.g, adjacent, 2, &ok) == ZFL_OK);
  CHECK(ok == 1);
  CHECK(zfl_is_zfs(c4.g, opposite, 2, &ok) == ZFL_OK);
  CHECK(ok == 0);
  const uint32_t outside[] = {4};
  CHECK(zfl_is_zfs(c4.g, outside, 1, &ok) == ZFL_ERR_RANGE);

  char* text = nullptr;
  REQUIRE(zfl_closure_json(c4.g, adjacent, 2, &text) == ZFL_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["zero_forcing"] == true);
  CHECK(j["forces"].size() == 2);

  Graph q3;
  REQUIRE(zfl_graph_from_family("hypercube:3", &q3.g) == ZFL_OK);
  size_t z = 0;
  CHECK(zfl_zero_forcing_number(q3.g, 32, &z) == ZFL_OK);
  CHECK(z == 4);
}

TEST_CASE("polynomials through the C interface") {
  Graph c4;
  REQUIRE(zfl_graph_from_family("cycle:4", &c4.g) == ZFL_OK);
  Poly poly;
  REQUIRE(zfl_poly_compute(c4.g, 0, &poly.p) == ZFL_OK);
  CHECK(zfl_poly_order(poly.p) == 4);
  char* text = nullptr;
  CHECK(zfl_poly_coeff(poly.p, 2, &text) == ZFL_OK);
  CHECK(take(text) == "4");
  CHECK(zfl_poly_coeff(poly.p, 5, &text) == ZFL_ERR_RANGE);
  CHECK(zfl_poly_csv(poly.p, &text) == ZFL_OK);
  CHECK(take(text) == "k,z\n0,0\n1,0\n2,4\n3,4\n4,1\n");
  double v = 0;
  CHECK(zfl_poly_prob(poly.p, 0.5, &v) == ZFL_OK);
  CHECK(v == 0.5625);
  CHECK(zfl_poly_prob(poly.p, 2.0, &v) == ZFL_ERR_RANGE);
  CHECK(zfl_poly_prob_rational(poly.p, "1/2", &text) == ZFL_OK);
  CHECK(take(text) == "9/16");
  CHECK(zfl_poly_prob_rational(poly.p, "half", &text) == ZFL_ERR_PARSE);

  Poly big;
  CHECK(zfl_poly_from_family("path:40", 0, &big.p) == ZFL_OK);
  CHECK(zfl_poly_coeff(big.p, 1, &text) == ZFL_OK);
  CHECK(take(text) == "2");
  Graph grid;
  REQUIRE(zfl_graph_from_family("grid:5x5", &grid.g) == ZFL_OK);
  Poly capped;
  CHECK(zfl_poly_compute(grid.g, 0, &capped.p) == ZFL_ERR_CAP);
}

TEST_CASE("Monte Carlo and thresholds through the C interface") {
  Graph c4;
  REQUIRE(zfl_graph_from_family("cycle:4", &c4.g) == ZFL_OK);
  zfl_mc_result r{};
  REQUIRE(zfl_mc_prob(c4.g, 0.5, 100000, 7, 0.01, 0, &r) == ZFL_OK);
  CHECK(r.ci_lo <= 0.5625);
  CHECK(0.5625 <= r.ci_hi);
  CHECK(r.seed == 7);
  CHECK(zfl_mc_prob(c4.g, 0.5, 0, 7, 0.01, 0, &r) != ZFL_OK);

  zfl_threshold_result t{};
  CHECK(zfl_threshold_exact_family("nk1:2", 1e-12, 0, &t) == ZFL_OK);
  CHECK(std::fabs(t.p_hat - std::sqrt(0.5)) < 1e-9);
  CHECK(t.method == ZFL_THRESHOLD_EXACT);

  Graph path;
  REQUIRE(zfl_graph_from_family("path:256", &path.g) == ZFL_OK);
  zfl_mc_threshold_options opts;
  zfl_mc_threshold_options_init(&opts);
  opts.seed = 9;
  opts.tol = 0.005;
  REQUIRE(zfl_threshold_mc(path.g, &opts, &t) == ZFL_OK);
  CHECK(t.method == ZFL_THRESHOLD_MC);
  CHECK(t.lo <= t.p_hat);
  CHECK(t.p_hat <= t.hi);
  CHECK(t.seed == 9);

  double lo = 0, hi = 0;
  CHECK(zfl_threshold_bounds_kn(10, &lo, &hi) == ZFL_OK);
  CHECK(lo == 0.5);
  CHECK(zfl_threshold_bounds_kn(3, &lo, &hi) == ZFL_ERR_PRECONDITION);
}

TEST_CASE("structure through the C interface") {
  Graph r5;
  REQUIRE(zfl_graph_from_family("rgraph:5", &r5.g) == ZFL_OK);
  const uint32_t b[] = {0, 3, 4};
  char* text = nullptr;
  REQUIRE(zfl_core2_json(r5.g, b, 3, 1, &text) == ZFL_OK);
  const auto core = nlohmann::json::parse(take(text));
  CHECK(core["graph6"] == "Bw");
  CHECK(core["projected_original"] == nlohmann::json::array({0, 2}));
  REQUIRE(zfl_pendants_json(r5.g, &text) == ZFL_OK);
  const auto pend = nlohmann::json::parse(take(text));
  CHECK(pend["pendant_paths"].size() == 1);
}

TEST_CASE("verification and experiments through the C interface") {
  zfl_verify_options opts;
  zfl_verify_options_init(&opts);
  opts.claim = "path-count";
  opts.corpus = "trees:1..8";
  char* report = nullptr;
  uint64_t cx = 99;
  REQUIRE(zfl_verify(&opts, &report, &cx) == ZFL_OK);
  CHECK(cx == 0);
  const auto j = nlohmann::json::parse(take(report));
  CHECK(j["pass"] == true);
  CHECK(j["instances"] == 48);
  CHECK_FALSE(j.contains("wall_seconds"));

  opts.claim = "conj-1.8";
  CHECK(zfl_verify(&opts, &report, &cx) == ZFL_ERR_INVALID);

  char* claims = nullptr;
  REQUIRE(zfl_claims_json(&claims) == ZFL_OK);
  CHECK(nlohmann::json::parse(take(claims)).size() >= 10);

  zfl_experiment_options e;
  zfl_experiment_options_init(&e);
  e.name = "figure2";
  e.include_mc = 0;
  char* csv = nullptr;
  char* summary = nullptr;
  REQUIRE(zfl_experiment(&e, &csv, &summary) == ZFL_OK);
  CHECK(take(csv).rfind("graph,n,method,p", 0) == 0);
  CHECK(nlohmann::json::parse(take(summary))["crossings"].size() == 4);
}

TEST_CASE("null arguments are rejected") {
  CHECK(zfl_graph_from_edges(3, nullptr, 1, nullptr) == ZFL_ERR_INVALID);
  size_t d = 0;
  CHECK(zfl_graph_degree(nullptr, 0, &d) == ZFL_ERR_INVALID);
  CHECK(zfl_graph_order(nullptr) == 0);
  zfl_string_free(nullptr);
  zfl_graph_free(nullptr);
}
