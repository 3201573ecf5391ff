#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "zfl/corpus.hpp"
#include "zfl/error.hpp"
#include "zfl/graph6.hpp"
#include "zfl/grid.hpp"
#include "zfl/trees.hpp"

using namespace zfl;

TEST_CASE("free tree counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (std::size_t n = 1; n <= 16; ++n) {
    std::size_t count = 0;
    for_each_free_tree(n, [&](const Graph& t) {
      CHECK(t.order() == n);
      if (!is_tree(t)) FAIL("not a tree");
      ++count;
    });
    CHECK_MESSAGE(count == expected[n - 1], "n = " << n);
  }
  CHECK_THROWS_AS(enumerate_free_trees(17), Error);
}

TEST_CASE("free trees are pairwise non-isomorphic and complete (Prüfer oracle)") {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> seen;
    for (const auto& t : enumerate_free_trees(static_cast<std::size_t>(n)))
      CHECK(seen.insert(oracle::tree_canonical(oracle::adjacency(t))).second);
    CHECK_MESSAGE(seen == oracle::prufer_tree_classes(n), "n = " << n);
  }
}

TEST_CASE("tree corpus and hashes") {
  const auto c = tree_corpus(1, 4);
  CHECK(c.graphs.size() == 5);
  std::string lines;
  for (const auto& g : c.graphs) lines += graph6_encode(g) + "\n";
  CHECK(c.hash == fnv1a(lines));
  CHECK(open_corpus("trees:4").graphs.size() == 2);
  CHECK(open_corpus("trees:1..4").hash == c.hash);
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_hex(0xabc) == "0000000000000abc");
}

TEST_CASE("graph6 file corpus hash covers the file bytes") {
  const std::string path = ZFL_TEST_DATA_DIR "/connected_n1-8.g6";
  const auto c = load_graph6_file(path);
  CHECK(c.graphs.size() == 12113);
  std::ifstream in(path, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  CHECK(c.hash == fnv1a(bytes.str()));
}

TEST_CASE("graph6 file errors name the line") {
  const auto path = std::filesystem::temp_directory_path() / "zfl_bad_corpus.g6";
  {
    std::ofstream out(path);
    out << "Bw\n\nBg\nB!\n";
  }
  try {
    load_graph6_file(path.string());
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find(":4") != std::string::npos);
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_graph6_file("/nonexistent/corpus.g6"), Error);
}

TEST_CASE("random corpus is reproducible") {
  const auto a = random_corpus(10, 200, 5);
  const auto b = random_corpus(10, 200, 5);
  const auto c = random_corpus(10, 200, 6);
  CHECK(a.hash == b.hash);
  CHECK(a.hash != c.hash);
  CHECK(a.graphs.size() == 200);
  for (const auto& g : a.graphs) CHECK((g.order() >= 2 && g.order() <= 10));
  CHECK(open_corpus("random:10:200", 5).hash == a.hash);
}

TEST_CASE("probability grids") {
  const auto d = default_grid();
  CHECK(d.size() == 19);
  CHECK(d.front() == Rational(1, 20));
  CHECK(parse_grid("1/20:19/20:1/20") == d);
  CHECK(parse_grid("0.5,1/4,0.25") == std::vector<Rational>{Rational(1, 4), Rational(1, 2)});
  CHECK(grid_to_string(parse_grid("0.1,0.2")) == "1/10,1/5");
  CHECK_THROWS_AS(parse_grid("1.5"), Error);
  CHECK_THROWS_AS(parse_grid("x"), Error);
}
