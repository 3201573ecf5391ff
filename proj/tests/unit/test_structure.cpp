#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/forcing.hpp"
#include "zfl/polynomial.hpp"
#include "zfl/structure.hpp"
#include "zfl/trees.hpp"

using namespace zfl;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> vs) {
  return VertexSet::from_indices(n, std::span<const Vertex>(vs.begin(), vs.size()));
}

Graph spider() {
  return make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

std::vector<Vertex> original(const CoreProjection& proj) {
  std::vector<Vertex> out;
  proj.projected_set.for_each([&](Vertex v) { out.push_back(proj.to_original[v]); });
  return out;
}

}  // namespace

TEST_CASE("two-core") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(two_core(path_graph(n)).core.order() == 0);
  const auto r5 = two_core(r_graph(5));
  CHECK(r5.core == complete_graph(3));
  CHECK(r5.to_original == std::vector<Vertex>{0, 1, 2});
  CHECK(two_core(cycle_graph(6)).core == cycle_graph(6));
  CHECK(two_core(spider()).core.order() == 0);
}

TEST_CASE("pendant paths") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(pendant_paths(path_graph(n)).empty());
  const auto r5 = pendant_paths(r_graph(5));
  REQUIRE(r5.size() == 1);
  CHECK(r5[0].vertices == std::vector<Vertex>{4, 3, 2});
  CHECK(r5[0].anchor() == 2);
  CHECK(r5[0].pendant() == 4);
  CHECK(pendant_paths(spider()).size() == 3);
  CHECK(double_pendant_anchors(spider()) == std::vector<Vertex>{0});
  // A path component has no anchor and is classified separately.
  CHECK(scan_pendants(disjoint_union(cycle_graph(3), path_graph(3))).path_components.size() == 1);
}

TEST_CASE("pendant trees") {
  const auto r5 = pendant_trees(r_graph(5));
  REQUIRE(r5.size() == 1);
  CHECK(r5[0].vertices == set_of(5, {2, 3, 4}));
  CHECK(r5[0].anchor == 2);
  CHECK(pendant_trees(cycle_graph(6)).empty());
  const Graph c4_leaf = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  const auto t = pendant_trees(c4_leaf);
  REQUIRE(t.size() == 1);
  CHECK(t[0].vertices == set_of(5, {0, 4}));
  CHECK(t[0].anchor == 0);
  CHECK(tree_components(disjoint_union(cycle_graph(3), star_graph(4))).size() == 1);
}

TEST_CASE("core projection examples") {
  const Graph r5 = r_graph(5);
  const auto a = core_project_set(r5, set_of(5, {0, 3, 4}));
  CHECK(original(a) == std::vector<Vertex>{0, 2});
  CHECK(is_zfs(a.core, a.projected_set));
  const auto b = core_project_set(r5, set_of(5, {3, 4}));
  CHECK(original(b) == std::vector<Vertex>{2});

  const Graph c6 = cycle_graph(6);
  const auto same = core_project_set(c6, set_of(6, {1, 2, 5}));
  CHECK(same.projected_set == set_of(6, {1, 2, 5}));
}

TEST_CASE("core projection of zero forcing sets is zero forcing") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t nonvacuous = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const Graph g = oracle::random_graph(n, 1.2 / static_cast<double>(n) + 0.3 * unit(rng), rng);
    VertexSet b(n);
    for (Vertex v = 0; v < n; ++v)
      if (unit(rng) < 0.5) b.set(v);
    if (!is_zfs(g, b)) continue;
    const auto proj = core_project_set(g, b);
    if (proj.core.order() == 0) continue;
    ++nonvacuous;
    if (!is_zfs(proj.core, proj.projected_set)) FAIL("projection not zero forcing");
  }
  CHECK(nonvacuous > 300);
}

TEST_CASE("leaf clique") {
  const Graph star = star_graph(4);
  CHECK(add_leaf_clique(star, set_of(4, {2})) == star);
  const Graph lifted = add_leaf_clique(star, set_of(4, {1, 2}));
  CHECK(lifted == make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}));
  CHECK_THROWS_AS(add_leaf_clique(star, set_of(4, {0, 1})), Error);
}

TEST_CASE("leaf-clique lifting inequality by enumeration") {
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    for_each_free_tree(n, [&](const Graph& t) {
      VertexSet leaves(n);
      for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) == 1) leaves.set(v);
      const auto base = zf_polynomial_exact(t);
      const auto lifted = zf_polynomial_exact(add_leaf_clique(t, leaves));
      const long long M = static_cast<long long>(leaves.count());
      for (int j = 1; j < 20; ++j) {
        const Rational p(j, 20);
        CHECK(prob_zfs_rational(base, p) <= prob_zfs_rational(lifted, p) + p * M);
      }
      ++checked;
    });
  }
  CHECK(checked > 100);
}

TEST_CASE("cut-vertex split") {
  const auto p3 = split_at_cut_vertex(path_graph(3), 1);
  CHECK(p3.first == path_graph(2));
  CHECK(p3.second == path_graph(2));

  const auto r5 = split_at_cut_vertex(r_graph(5), 2);
  CHECK(r5.first == complete_graph(3));
  CHECK(r5.second == path_graph(3));
  CHECK(r5.first_vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(r5.second_vertices == std::vector<Vertex>{2, 3, 4});

  const Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto b = split_at_cut_vertex(bowtie, 2);
  CHECK(b.first == complete_graph(3));
  CHECK(b.second == complete_graph(3));

  CHECK_FALSE(is_cut_vertex(cycle_graph(5), 0));
  CHECK_THROWS_AS(split_at_cut_vertex(cycle_graph(5), 0), Error);
}
