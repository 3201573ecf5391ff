#include "zfl/structure.hpp"

#include <algorithm>
#include <map>

#include "zfl/forcing.hpp"

namespace zfl {
namespace {

std::vector<bool> core_membership(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg = g.degrees();
  std::vector<bool> alive(n, true);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] <= 1) stack.push_back(v);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && --deg[w] == 1) stack.push_back(w);
  }
  return alive;
}

CoreProjection core_from_membership(const Graph& g, const std::vector<bool>& alive) {
  CoreProjection out;
  out.core_vertices = VertexSet(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (alive[v]) {
      out.core_vertices.set(v);
      out.to_original.push_back(v);
    }
  out.core = induced_subgraph(g, out.to_original);
  out.projected_set = VertexSet(out.to_original.size());
  return out;
}

// Non-core vertices hanging off each anchor, grouped by anchor.
std::map<Vertex, std::vector<Vertex>> hanging_vertices(const Graph& g,
                                                       const std::vector<bool>& in_core) {
  std::map<Vertex, std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!in_core[w]) continue;
    for (Vertex start : g.neighbors(w)) {
      if (in_core[start] || seen[start]) continue;
      seen[start] = true;
      stack.push_back(start);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        out[w].push_back(u);
        for (Vertex x : g.neighbors(u))
          if (!in_core[x] && !seen[x]) {
            seen[x] = true;
            stack.push_back(x);
          }
      }
    }
  }
  return out;
}

}  // namespace

CoreProjection two_core(const Graph& g) { return core_from_membership(g, core_membership(g)); }

PendantScan scan_pendants(const Graph& g) {
  PendantScan scan;
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    std::vector<Vertex> walk{leaf};
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      walk.push_back(cur);
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    walk.push_back(cur);
    if (g.degree(cur) > 2) {
      scan.paths.push_back({std::move(walk)});
    } else if (leaf < cur) {
      scan.path_components.push_back(std::move(walk));
    }
  }
  return scan;
}

std::vector<Vertex> double_pendant_anchors(const Graph& g) {
  std::map<Vertex, std::size_t> count;
  for (const auto& path : pendant_paths(g)) ++count[path.anchor()];
  std::vector<Vertex> out;
  for (auto [anchor, c] : count)
    if (c >= 2) out.push_back(anchor);
  return out;
}

std::vector<PendantTree> pendant_trees(const Graph& g) {
  const auto in_core = core_membership(g);
  std::vector<PendantTree> out;
  for (auto& [anchor, members] : hanging_vertices(g, in_core)) {
    PendantTree tree{VertexSet(g.order()), anchor};
    tree.vertices.set(anchor);
    for (Vertex v : members) tree.vertices.set(v);
    out.push_back(std::move(tree));
  }
  return out;
}

std::vector<std::vector<Vertex>> tree_components(const Graph& g) {
  const auto ids = component_ids(g);
  const std::size_t count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<Vertex>> members(count);
  std::vector<std::size_t> degree_sum(count, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    members[ids[v]].push_back(v);
    degree_sum[ids[v]] += g.degree(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (std::size_t c = 0; c < count; ++c)
    if (degree_sum[c] / 2 + 1 == members[c].size()) out.push_back(std::move(members[c]));
  return out;
}

CoreProjection core_project_set(const Graph& g, const VertexSet& b) {
  if (b.universe() != g.order())
    fail(ErrorCode::InvalidArgument, "vertex set universe does not match graph order");
  const auto in_core = core_membership(g);
  CoreProjection out = core_from_membership(g, in_core);
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    if (b.test(out.to_original[i])) out.projected_set.set(static_cast<Vertex>(i));

  for (auto& [anchor, members] : hanging_vertices(g, in_core)) {
    std::vector<Vertex> tree_vertices = members;
    tree_vertices.push_back(anchor);
    std::sort(tree_vertices.begin(), tree_vertices.end());
    const Graph tree = induced_subgraph(g, tree_vertices);
    VertexSet restricted(tree_vertices.size());
    for (std::size_t i = 0; i < tree_vertices.size(); ++i)
      if (b.test(tree_vertices[i])) restricted.set(static_cast<Vertex>(i));
    if (is_zfs(tree, restricted)) {
      const auto at = std::lower_bound(out.to_original.begin(), out.to_original.end(), anchor);
      out.projected_set.set(static_cast<Vertex>(at - out.to_original.begin()));
    }
  }
  return out;
}

Graph add_leaf_clique(const Graph& g, const VertexSet& leaves) {
  if (leaves.universe() != g.order())
    fail(ErrorCode::InvalidArgument, "vertex set universe does not match graph order");
  const auto members = leaves.indices();
  for (Vertex v : members)
    if (g.degree(v) != 1)
      fail(ErrorCode::Precondition, "vertex " + std::to_string(v) + " is not a leaf");
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  return make_graph(g.order(), edges);
}

namespace {

// Component ids of g - w (w itself gets id -1), numbered by lowest member.
std::vector<long> components_without(const Graph& g, Vertex w, long& count) {
  std::vector<long> id(g.order(), -2);
  id[w] = -1;
  std::vector<Vertex> stack;
  count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (id[s] != -2) continue;
    id[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex x : g.neighbors(u))
        if (id[x] == -2) {
          id[x] = count;
          stack.push_back(x);
        }
    }
    ++count;
  }
  return id;
}

}  // namespace

bool is_cut_vertex(const Graph& g, Vertex w) {
  if (w >= g.order()) fail(ErrorCode::OutOfRange, "vertex out of range");
  long without = 0;
  components_without(g, w, without);
  return static_cast<std::size_t>(without) > component_count(g);
}

CutSplit split_at_cut_vertex(const Graph& g, Vertex w) {
  if (!is_cut_vertex(g, w))
    fail(ErrorCode::Precondition, "vertex " + std::to_string(w) + " is not a cut vertex");
  long count = 0;
  const auto id = components_without(g, w, count);
  CutSplit out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == w) {
      out.first_vertices.push_back(v);
      out.second_vertices.push_back(v);
    } else if (id[v] == 0) {
      out.first_vertices.push_back(v);
    } else {
      out.second_vertices.push_back(v);
    }
  }
  out.first = induced_subgraph(g, out.first_vertices);
  out.second = induced_subgraph(g, out.second_vertices);
  return out;
}

}  // namespace zfl
