#include <doctest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/graph.hpp"
#include "zfl/graph6.hpp"

using namespace zfl;

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("make_graph builds adjacency and degrees") {
  const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.degrees() == std::vector<std::size_t>{1, 2, 1});
  CHECK(p3.edge_count() == 2);
  const Graph k1 = make_graph(1, std::span<const Edge>{});
  CHECK(k1.degrees() == std::vector<std::size_t>{0});
  const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.degrees() == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("make_graph rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), Error);
  CHECK(make_graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("family generators") {
  const Graph p4 = family("path:4");
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const Graph c4 = cycle_graph(4);
  CHECK(graph6_encode(grid_graph(2, 2)) != "");
  CHECK(sorted_degrees(grid_graph(2, 2)) == sorted_degrees(c4));
  CHECK(is_connected(grid_graph(2, 2)));
  CHECK(grid_graph(2, 2).edge_count() == 4);
  CHECK(sorted_degrees(hypercube_graph(2)) == sorted_degrees(c4));
  CHECK(hypercube_graph(2).edge_count() == 4);

  const Graph r5 = family("rgraph:5");
  CHECK(r5 == make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}}));

  const Graph w5 = wheel_graph(5);
  CHECK(w5 == join(cycle_graph(4), empty_graph(1)));
  CHECK(w5.degree(4) == 4);
  CHECK(w5.edge_count() == 8);

  CHECK(complete_multipartite({2, 3}).edge_count() == 6);
  CHECK(binary_tree(7).degrees() == std::vector<std::size_t>{2, 3, 3, 1, 1, 1, 1});
  CHECK(star_graph(4).degree(0) == 3);
  CHECK(clique_paths(3, 2).order() == 9);
  CHECK(hypercube_graph(3).edge_count() == 12);
}

TEST_CASE("family minimums and descriptor errors") {
  CHECK_THROWS_AS(family("cycle:2"), Error);
  CHECK_THROWS_AS(family("wheel:3"), Error);
  CHECK_THROWS_AS(family("rgraph:2"), Error);
  CHECK_THROWS_AS(parse_family("bogus:3"), Error);
  CHECK_THROWS_AS(parse_family("grid:3"), Error);
  CHECK_FALSE(try_parse_family("path").has_value());
  CHECK(parse_family("grid:4x4").order() == 16);
  CHECK(parse_family("hypercube:8").order() == 256);
  CHECK(parse_family("clique:5").to_string() == "complete:5");
}

TEST_CASE("disjoint union and join") {
  const Graph k1 = complete_graph(1);
  const Graph two = disjoint_union(k1, k1);
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);

  const Graph u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(component_count(u) == 2);

  Graph empty = k1;
  for (int i = 0; i < 6; ++i) empty = disjoint_union(empty, k1);
  CHECK(empty.order() == 7);
  CHECK(empty.edge_count() == 0);

  CHECK(join(k1, k1) == complete_graph(2));
  CHECK(join(complete_graph(2), k1) == complete_graph(3));
}

TEST_CASE("graph6 known strings") {
  CHECK(graph6_decode("Bw") == complete_graph(3));
  CHECK(graph6_decode("Bg") == path_graph(3));
  CHECK(graph6_encode(complete_graph(1)) == "@");
  CHECK_THROWS_AS(make_graph(0, std::span<const Edge>{}), Error);
}

TEST_CASE("graph6 matches the reference encoder on random graphs") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1, 2, 5, 6, 7, 12, 30, 62, 63, 64, 65, 100, 200}) {
    for (double q : {0.1, 0.5, 0.9}) {
      const Graph g = oracle::random_graph(n, q, rng);
      const std::string text = graph6_encode(g);
      CHECK(text == oracle::graph6(g));
      CHECK(graph6_decode(text) == g);
    }
  }
}

TEST_CASE("graph6 round-trips the connected corpus byte for byte") {
  std::ifstream in(ZFL_TEST_DATA_DIR "/connected_n1-8.g6");
  REQUIRE(in);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Graph g = graph6_decode(line);
    if (graph6_encode(g) != line) FAIL("round trip changed " << line);
    CHECK(is_connected(g));
    ++count;
  }
  CHECK(count == 12113);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), Error);
  CHECK_THROWS_AS(graph6_decode("C"), Error);
  CHECK_THROWS_AS(graph6_decode("B\x01"), Error);
  CHECK_THROWS_AS(graph6_decode(">>graph6<<"), Error);
}

TEST_CASE("connectivity helpers") {
  CHECK(is_tree(path_graph(6)));
  CHECK_FALSE(is_tree(cycle_graph(6)));
  CHECK(is_forest(disjoint_union(path_graph(3), path_graph(2))));
  CHECK(has_isolated_vertex(disjoint_union(path_graph(3), complete_graph(1))));
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(induced_subgraph(complete_graph(5), keep) == complete_graph(3));
}
