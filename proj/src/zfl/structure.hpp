#pragma once

#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

/// Path v1..vk (k >= 2) with d(v1) = 1, d(vi) = 2 inside, d(vk) > 2.
struct PendantPath {
  std::vector<Vertex> vertices;
  Vertex pendant() const { return vertices.front(); }
  Vertex anchor() const { return vertices.back(); }
};

/// Maximal induced tree meeting the 2-core in exactly its anchor.
struct PendantTree {
  VertexSet vertices;  // includes the anchor
  Vertex anchor;
};

struct CoreProjection {
  Graph core;                        // C2(G); order 0 for forests
  VertexSet core_vertices;           // in G indexing
  std::vector<Vertex> to_original;   // core vertex i is G vertex to_original[i]
  VertexSet projected_set;           // C2(B, G) in core indexing
};

/// Deletion fixpoint of vertices with degree <= 1. `projected_set` is empty.
CoreProjection two_core(const Graph& g);

struct PendantScan {
  std::vector<PendantPath> paths;
  // Leaf-to-leaf walks through degree-2 vertices: whole path components
  // (including isolated edges), which have no anchor and so no pendant path.
  std::vector<std::vector<Vertex>> path_components;
};

PendantScan scan_pendants(const Graph& g);
inline std::vector<PendantPath> pendant_paths(const Graph& g) { return scan_pendants(g).paths; }

/// Vertices that anchor at least two pendant paths.
std::vector<Vertex> double_pendant_anchors(const Graph& g);

/// Pendant trees ordered by anchor; empty when the 2-core is empty.
std::vector<PendantTree> pendant_trees(const Graph& g);

/// Components of g that are trees (isolated vertices included).
std::vector<std::vector<Vertex>> tree_components(const Graph& g);

/// The 2-core together with C2(B, G): core members of B plus every anchor
/// whose pendant tree T has B restricted to T zero forcing in T.
CoreProjection core_project_set(const Graph& g, const VertexSet& b);

/// Adds every edge among `leaves`; each must have degree 1 in g.
Graph add_leaf_clique(const Graph& g, const VertexSet& leaves);

bool is_cut_vertex(const Graph& g, Vertex w);

struct CutSplit {
  Graph first;
  Graph second;
  std::vector<Vertex> first_vertices;   // G index of each vertex of `first`
  std::vector<Vertex> second_vertices;
};

/// G[W1 + w] and G[W2 + w], where W1 is the component of G - w holding the
/// lowest vertex index and W2 is everything else.
CutSplit split_at_cut_vertex(const Graph& g, Vertex w);

}  // namespace zfl
