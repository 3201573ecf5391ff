#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

struct Corpus {
  std::string descriptor;
  std::vector<Graph> graphs;
  std::uint64_t hash = 0;  // FNV-1a over the graph6 lines, newline-terminated
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Graphs from a graph6 file, one per line. Blank lines are skipped.
Corpus load_graph6_file(const std::string& path);

/// All free trees with lo <= n <= hi, ordered by n.
Corpus tree_corpus(std::size_t lo, std::size_t hi);

/// `count` seeded random graphs with 2..max_n vertices, mixing sparse and
/// dense edge probabilities so that pendant trees and nontrivial 2-cores
/// both occur.
Corpus random_corpus(std::size_t max_n, std::size_t count, std::uint64_t seed);

/// Descriptors: "trees:N", "trees:A..B", "random:N:COUNT" (uses `seed`),
/// a graph6 file path, or a single family descriptor such as "cycle:6".
Corpus open_corpus(std::string_view descriptor, std::uint64_t seed = 1);

std::string hash_hex(std::uint64_t h);

}  // namespace zfl
