#include "zfl/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zfl {

Graph make_graph_unchecked(std::size_t n, std::vector<std::uint64_t> rows) {
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_ = std::move(rows);
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t d = 0;
    for (std::size_t w = 0; w < g.words_; ++w)
      d += static_cast<std::size_t>(std::popcount(g.rows_[v * g.words_ + w]));
    g.offsets_[v + 1] = g.offsets_[v] + d;
  }
  g.nbrs_.resize(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t at = g.offsets_[v];
    for (std::size_t w = 0; w < g.words_; ++w) {
      std::uint64_t bits = g.rows_[v * g.words_ + w];
      while (bits) {
        g.nbrs_[at++] =
            static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
  g.m_ = g.offsets_[n] / 2;
  return g;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "graph must have at least one vertex");
  const std::size_t words = words_for(n);
  std::vector<std::uint64_t> rows(n * words, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      fail(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," +
                                      std::to_string(v) +
                                      ") has an endpoint >= " + std::to_string(n));
    if (u == v)
      fail(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    rows[u * words + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    rows[v * words + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  }
  return make_graph_unchecked(n, std::move(rows));
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t d = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighborhood(Vertex v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return make_graph(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
  return make_graph(g1.order() + g2.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  const std::size_t words = words_for(k);
  std::vector<std::uint64_t> rows(k * words, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (vertices[i] >= g.order())
      fail(ErrorCode::OutOfRange, "induced subgraph vertex out of range");
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && g.adjacent(vertices[i], vertices[j]))
        rows[i * words + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  }
  return make_graph_unchecked(k, std::move(rows));
}

std::vector<std::size_t> component_ids(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(n, unset);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (id[s] != unset) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (id[w] == unset) {
          id[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return id;
}

std::size_t component_count(const Graph& g) {
  auto ids = component_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_forest(const Graph& g) {
  return g.edge_count() + component_count(g) == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace zfl
