#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

// Vertex numbering used by every generator:
//   path, cycle      0..n-1 in path order (cycle closes n-1 ~ 0)
//   wheel W_n        cycle on 0..n-2, hub n-1
//   rgraph R_n       path 0..n-1 plus the chord (0, 2)
//   grid m x n       row-major, vertex (r, c) = r * n + c
//   hypercube Q_d    vertex = bit string, neighbors differ in one bit
//   bintree          heap order, parent(i) = (i - 1) / 2
//   multipartite     parts laid out consecutively
//   star             center 0
//   cliquepath k,L   clique on 0..k-1; clique vertex i carries a pendant
//                    path of L further vertices
enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Empty,
  Multipartite,
  Wheel,
  RGraph,
  Grid,
  Hypercube,
  BinaryTree,
  Star,
  CliquePaths,
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<std::size_t> params;

  std::string to_string() const;
  std::size_t order() const;
};

/// Parses descriptors such as `path:16`, `grid:4x4`, `hypercube:8`,
/// `wheel:10`, `rgraph:5`, `nk1:3`, `multipartite:2,3,4`, `cliquepath:4,6`.
FamilySpec parse_family(std::string_view descriptor);
std::optional<FamilySpec> try_parse_family(std::string_view descriptor);

Graph family(const FamilySpec& spec);
inline Graph family(std::string_view descriptor) { return family(parse_family(descriptor)); }

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
Graph wheel_graph(std::size_t n);
Graph r_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph hypercube_graph(std::size_t dim);
Graph binary_tree(std::size_t n);
Graph star_graph(std::size_t n);
Graph clique_paths(std::size_t clique, std::size_t path_len);

}  // namespace zfl
