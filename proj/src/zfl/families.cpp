#include "zfl/families.hpp"

#include <charconv>

namespace zfl {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

struct NameEntry {
  std::string_view name;
  FamilyKind kind;
};

constexpr NameEntry kNames[] = {
    {"path", FamilyKind::Path},         {"cycle", FamilyKind::Cycle},
    {"complete", FamilyKind::Complete}, {"clique", FamilyKind::Complete},
    {"empty", FamilyKind::Empty},       {"nk1", FamilyKind::Empty},
    {"multipartite", FamilyKind::Multipartite},
    {"wheel", FamilyKind::Wheel},       {"rgraph", FamilyKind::RGraph},
    {"grid", FamilyKind::Grid},         {"hypercube", FamilyKind::Hypercube},
    {"bintree", FamilyKind::BinaryTree}, {"star", FamilyKind::Star},
    {"cliquepath", FamilyKind::CliquePaths},
};

std::string_view canonical_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Empty: return "nk1";
    case FamilyKind::Multipartite: return "multipartite";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::RGraph: return "rgraph";
    case FamilyKind::Grid: return "grid";
    case FamilyKind::Hypercube: return "hypercube";
    case FamilyKind::BinaryTree: return "bintree";
    case FamilyKind::Star: return "star";
    case FamilyKind::CliquePaths: return "cliquepath";
  }
  return "?";
}

std::optional<std::vector<std::size_t>> parse_numbers(std::string_view s) {
  std::vector<std::size_t> out;
  while (true) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data()) return std::nullopt;
    out.push_back(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (s.empty()) return out;
    if (s.front() != ',' && s.front() != 'x') return std::nullopt;
    s.remove_prefix(1);
  }
}

std::size_t arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Grid:
    case FamilyKind::CliquePaths: return 2;
    case FamilyKind::Multipartite: return 0;
    default: return 1;
  }
}

}  // namespace

std::optional<FamilySpec> try_parse_family(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto name = descriptor.substr(0, colon);
  for (const auto& entry : kNames) {
    if (entry.name != name) continue;
    auto numbers = parse_numbers(descriptor.substr(colon + 1));
    if (!numbers) return std::nullopt;
    const std::size_t want = arity(entry.kind);
    if (want != 0 && numbers->size() != want) return std::nullopt;
    return FamilySpec{entry.kind, std::move(*numbers)};
  }
  return std::nullopt;
}

FamilySpec parse_family(std::string_view descriptor) {
  auto spec = try_parse_family(descriptor);
  if (!spec)
    fail(ErrorCode::Parse, "unrecognized family descriptor '" + std::string(descriptor) + "'");
  return *spec;
}

std::string FamilySpec::to_string() const {
  std::string out(canonical_name(kind));
  out += ':';
  const char sep = kind == FamilyKind::Grid ? 'x' : ',';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(params[i]);
  }
  return out;
}

std::size_t FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::Grid: return params[0] * params[1];
    case FamilyKind::Hypercube: return std::size_t{1} << params[0];
    case FamilyKind::CliquePaths: return params[0] * (params[1] + 1);
    case FamilyKind::Multipartite: {
      std::size_t n = 0;
      for (auto p : params) n += p;
      return n;
    }
    default: return params[0];
  }
}

Graph family(const FamilySpec& spec) {
  const auto& p = spec.params;
  Graph g;
  switch (spec.kind) {
    case FamilyKind::Path: g = path_graph(p[0]); break;
    case FamilyKind::Cycle: g = cycle_graph(p[0]); break;
    case FamilyKind::Complete: g = complete_graph(p[0]); break;
    case FamilyKind::Empty: g = empty_graph(p[0]); break;
    case FamilyKind::Multipartite: g = complete_multipartite(p); break;
    case FamilyKind::Wheel: g = wheel_graph(p[0]); break;
    case FamilyKind::RGraph: g = r_graph(p[0]); break;
    case FamilyKind::Grid: g = grid_graph(p[0], p[1]); break;
    case FamilyKind::Hypercube: g = hypercube_graph(p[0]); break;
    case FamilyKind::BinaryTree: g = binary_tree(p[0]); break;
    case FamilyKind::Star: g = star_graph(p[0]); break;
    case FamilyKind::CliquePaths: g = clique_paths(p[0], p[1]); break;
  }
  return g.with_label(spec.to_string());
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return make_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph empty_graph(std::size_t n) {
  require(n >= 1, "empty graph needs n >= 1");
  return make_graph(n, std::span<const Edge>{});
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  require(!parts.empty(), "multipartite graph needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 1, "multipartite parts must be nonempty");
    part_of.insert(part_of.end(), parts[i], i);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return make_graph(part_of.size(), edges);
}

Graph wheel_graph(std::size_t n) {
  require(n >= 4, "wheel needs n >= 4");
  return join(cycle_graph(n - 1), empty_graph(1));
}

Graph r_graph(std::size_t n) {
  require(n >= 3, "rgraph needs n >= 3");
  std::vector<Edge> edges{{0, 2}};
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  return make_graph(rows * cols, edges);
}

Graph hypercube_graph(std::size_t dim) {
  require(dim >= 1 && dim <= 20, "hypercube dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t u = v ^ (std::size_t{1} << b);
      if (v < u) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(u));
    }
  return make_graph(n, edges);
}

Graph binary_tree(std::size_t n) {
  require(n >= 1, "binary tree needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return make_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return make_graph(n, edges);
}

Graph clique_paths(std::size_t clique, std::size_t path_len) {
  require(clique >= 1, "cliquepath needs a clique of size >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  auto next = static_cast<Vertex>(clique);
  for (Vertex c = 0; c < clique; ++c) {
    Vertex prev = c;
    for (std::size_t i = 0; i < path_len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_graph(clique * (path_len + 1), edges);
}

}  // namespace zfl
