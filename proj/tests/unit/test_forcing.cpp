#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zfl/families.hpp"
#include "zfl/forcing.hpp"
#include "zfl/structure.hpp"

using namespace zfl;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<Vertex> vs) {
  return VertexSet::from_indices(g.order(), std::span<const Vertex>(vs.begin(), vs.size()));
}

}  // namespace

TEST_CASE("closure of P5 from two middle vertices") {
  const Graph p5 = path_graph(5);
  const auto rec = closure(p5, set_of(p5, {1, 2}));
  CHECK(rec.final_blue.is_full());
  auto has = [&](Vertex f, Vertex t) {
    return std::find(rec.forces.begin(), rec.forces.end(), Force{f, t}) != rec.forces.end();
  };
  CHECK(has(1, 0));
  CHECK(has(2, 3));
  CHECK(has(3, 4));
  CHECK(rec.forces.size() == 3);

  const auto chains = maximal_forcing_chains(rec);
  CHECK(chains == std::vector<std::vector<Vertex>>{{1, 0}, {2, 3, 4}});
}

TEST_CASE("closure edge cases") {
  const Graph k3 = complete_graph(3);
  const auto stuck = closure(k3, set_of(k3, {0}));
  CHECK(stuck.final_blue == set_of(k3, {0}));
  CHECK(stuck.forces.empty());

  const Graph q3 = hypercube_graph(3);
  const auto all = closure(q3, VertexSet::full(8));
  CHECK(all.forces.empty());
  CHECK(maximal_forcing_chains(all).size() == 8);

  const Graph p3 = path_graph(3);
  CHECK(maximal_forcing_chains(closure(p3, set_of(p3, {0}))) ==
        std::vector<std::vector<Vertex>>{{0, 1, 2}});
}

TEST_CASE("is_zfs examples") {
  for (std::size_t n = 1; n <= 9; ++n) CHECK(is_zfs(path_graph(n), set_of(path_graph(n), {0})));
  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(is_zfs(c4, set_of(c4, {0, 2})));
  CHECK(is_zfs(c4, set_of(c4, {0, 1})));
  CHECK(is_zfs(c4, set_of(c4, {1, 2})));
}

TEST_CASE("zero forcing number") {
  CHECK(zero_forcing_number(path_graph(7)) == 1);
  CHECK(zero_forcing_number(complete_graph(5)) == 4);
  CHECK(zero_forcing_number(hypercube_graph(3)) == 4);
  CHECK(zero_forcing_number(hypercube_graph(4)) == 8);
  CHECK(zero_forcing_number(cycle_graph(9)) == 2);
  CHECK(zero_forcing_number(empty_graph(4)) == 4);
}

TEST_CASE("closure is independent of force order") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(1, 14);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = order(rng);
    const Graph g = oracle::random_graph(n, 0.15 + 0.5 * unit(rng), rng);
    const auto adj = oracle::adjacency(g);
    const double density = unit(rng);
    std::vector<bool> blue(n);
    VertexSet b(n);
    for (std::size_t v = 0; v < n; ++v)
      if (unit(rng) < density) {
        blue[v] = true;
        b.set(static_cast<Vertex>(v));
      }
    const auto expected = oracle::closure_random_order(adj, blue, rng);
    const auto rec = closure(g, b);
    bool same = true;
    for (std::size_t v = 0; v < n; ++v) same &= rec.final_blue.test(static_cast<Vertex>(v)) == expected[v];
    if (!same) FAIL("closure differs on trial " << trial);
    CHECK(rec.reversal.count() == rec.final_blue.count() - rec.forces.size());
  }
}

TEST_CASE("the closure kernel agrees with the record-keeping closure beyond 64 vertices") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t n : {65, 100, 130, 256}) {
    const Graph g = oracle::random_graph(n, 3.0 / static_cast<double>(n), rng);
    ForcingKernel kernel(g);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint8_t> blue(n);
      VertexSet b(n);
      for (std::size_t v = 0; v < n; ++v)
        if (unit(rng) < 0.4) {
          blue[v] = 1;
          b.set(static_cast<Vertex>(v));
        }
      const auto count = kernel.close(blue);
      CHECK(count == closure_set(g, b).count());
    }
  }
}

TEST_CASE("zero forcing sets form an up-set") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> order(2, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = order(rng);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      if (!is_zfs(g, VertexSet::from_mask(n, mask))) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (!is_zfs(g, VertexSet::from_mask(n, mask | (std::uint64_t{1} << v))))
          FAIL("superset of a zero forcing set is not zero forcing");
    }
  }
}

TEST_CASE("every set of size n-1 forces when no vertex is isolated") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 12, 0.3, rng);
    if (has_isolated_vertex(g)) continue;
    const std::size_t n = g.order();
    for (Vertex v = 0; v < n; ++v) {
      VertexSet b = VertexSet::full(n);
      b.reset(v);
      CHECK(is_zfs(g, b));
    }
  }
}

TEST_CASE("cut-vertex observation holds for random zero forcing sets") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t checked = 0;
  for (int trial = 0; trial < 4000 && checked < 1500; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    if (!is_connected(g)) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (!is_cut_vertex(g, w)) continue;
      const auto split = split_at_cut_vertex(g, w);
      VertexSet b(n);
      do {
        b = VertexSet(n);
        for (Vertex v = 0; v < n; ++v)
          if (unit(rng) < 0.5) b.set(v);
      } while (!is_zfs(g, b));
      bool some_side = false;
      for (const auto* side : {&split.first_vertices, &split.second_vertices}) {
        const Graph& gi = side == &split.first_vertices ? split.first : split.second;
        VertexSet restricted(gi.order());
        VertexSet with_w(gi.order());
        for (std::size_t i = 0; i < side->size(); ++i) {
          if (b.test((*side)[i])) restricted.set(static_cast<Vertex>(i));
          if (b.test((*side)[i]) || (*side)[i] == w) with_w.set(static_cast<Vertex>(i));
        }
        CHECK(is_zfs(gi, with_w));
        some_side |= is_zfs(gi, restricted);
      }
      CHECK(some_side);
      ++checked;
    }
  }
  CHECK(checked >= 500);
}
