#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zfl/vertex_set.hpp"

namespace zfl {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph.
///
/// Adjacency is held twice: as dense bit rows (one `VertexSet`-shaped row per
/// vertex, used by the word-parallel forcing kernels) and as a CSR neighbor
/// list for sparse traversals. Both are built once in `make_graph`.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {nbrs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degrees() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet neighborhood(Vertex v) const;

  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  // Vertex-by-vertex identity; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend Graph make_graph(std::size_t, std::span<const Edge>);
  friend Graph make_graph_unchecked(std::size_t, std::vector<std::uint64_t>);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::string label_;
};

/// Builds a graph on `n >= 1` vertices. Duplicate edges are merged; loops and
/// out-of-range endpoints are rejected.
Graph make_graph(std::size_t n, std::span<const Edge> edges);

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Builds from already symmetric, loop-free bit rows (n * words_for(n)).
/// Permits n == 0, which the 2-core uses for forests.
Graph make_graph_unchecked(std::size_t n, std::vector<std::uint64_t> rows);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Component id per vertex, numbered by lowest member index.
std::vector<std::size_t> component_ids(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool has_isolated_vertex(const Graph& g);

}  // namespace zfl
