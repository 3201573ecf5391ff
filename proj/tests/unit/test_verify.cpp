#include <doctest.h>

#include "oracles.hpp"
#include "zfl/corpus.hpp"
#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/forcing.hpp"
#include "zfl/graph6.hpp"
#include "zfl/grid.hpp"
#include "zfl/parallel.hpp"
#include "zfl/serialize.hpp"
#include "zfl/verify.hpp"

using namespace zfl;

namespace {

Corpus corpus_of(std::string name, std::vector<Graph> graphs) {
  Corpus c;
  c.descriptor = std::move(name);
  std::string lines;
  for (const auto& g : graphs) lines += graph6_encode(g) + "\n";
  c.hash = fnv1a(lines);
  c.graphs = std::move(graphs);
  return c;
}

}  // namespace

TEST_CASE("claim registry") {
  CHECK(is_claim("path-count"));
  CHECK(is_claim("core-projection"));
  CHECK_FALSE(is_claim("conj-1.8"));
  CHECK_THROWS_AS(verify_claim("nope", tree_corpus(1, 3)), Error);
  for (const auto& c : claims()) CHECK_FALSE(c.summary.empty());
}

TEST_CASE("path-count holds on small trees and Hamiltonian-path graphs") {
  const auto trees = verify_claim("path-count", tree_corpus(1, 10));
  CHECK(trees.pass());
  CHECK(trees.counterexamples.empty());
  CHECK(trees.instances == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);

  std::vector<Graph> ham;
  for (const auto& g : load_graph6_file(ZFL_TEST_DATA_DIR "/connected_n1-8.g6").graphs)
    if (g.order() <= 7 && oracle::has_hamiltonian_path(g)) ham.push_back(g);
  REQUIRE(ham.size() > 500);
  const auto report = verify_claim("path-count", corpus_of("hamiltonian", ham));
  CHECK(report.pass());
  CHECK(report.instances == ham.size());
}

TEST_CASE("tree-path dominance on trees with 8 vertices") {
  VerifyOptions opts;
  opts.grid = parse_grid("0.1:0.9:0.1");
  const auto report = verify_claim("tree-path-dominance", tree_corpus(8, 8), opts);
  CHECK(report.pass());
  // P_8 is included and must meet itself with equality.
  CHECK(report.instances == 23);
  CHECK(report.comparisons == 23 * 9);
  REQUIRE(report.note("min_margin") != nullptr);
  CHECK(parse_rational(*report.note("min_margin")) > 0);
}

TEST_CASE("degree bounds on cycles and trees") {
  std::vector<Graph> cycles;
  for (std::size_t n = 3; n <= 14; ++n) cycles.push_back(cycle_graph(n));
  CHECK(verify_claim("min-degree", corpus_of("cycles", cycles)).pass());
  const auto tc = verify_claim("tree-count", tree_corpus(1, 11));
  CHECK(tc.pass());
  CHECK(tc.skipped == 11);  // the paths P_1..P_11
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const auto corpus = open_corpus("random:9:300", 4);
  VerifyOptions opts;
  opts.seed = 4;
  opts.samples = 3000;
  for (const char* claim : {"degree-bounds", "leaf-clique", "core-projection"}) {
    set_thread_count(1);
    const auto a = to_json(verify_claim(claim, corpus, opts), false).dump();
    set_thread_count(3);
    const auto b = to_json(verify_claim(claim, corpus, opts), false).dump();
    set_thread_count(0);
    CHECK_MESSAGE(a == b, claim);
  }
}

TEST_CASE("report serialization") {
  const auto report = verify_claim("double-pendant", tree_corpus(1, 8));
  const auto j = to_json(report, false);
  CHECK(j["claim"] == "double-pendant");
  CHECK(j["pass"] == true);
  CHECK(j["corpus_hash"] == hash_hex(report.corpus_hash));
  CHECK(j["counterexamples"].empty());
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(to_json(report, true).contains("wall_seconds"));
}

TEST_CASE("the serial polynomial matches the parallel one") {
  for (const char* d : {"grid:3x4", "wheel:9", "hypercube:4"}) {
    const Graph g = family(d);
    CHECK(zf_polynomial_serial(g) == zf_polynomial_exact(g));
  }
}

TEST_CASE("forcing record serialization") {
  const Graph p5 = path_graph(5);
  const std::vector<Vertex> b{1, 2};
  const auto rec = closure(p5, VertexSet::from_indices(5, b));
  const auto j = to_json(rec);
  CHECK(j["forces"].size() == 3);
  CHECK(j["blue"] == Json::array({0, 1, 2, 3, 4}));
  CHECK(chains_to_json(maximal_forcing_chains(rec)).dump() == "[[1,0],[2,3,4]]");
  CHECK(polynomial_csv(path_polynomial(5)) == "k,z\n0,0\n1,2\n2,9\n3,10\n4,5\n5,1\n");
}
