#include "zfl/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include <fmt/format.h>

#include "zfl/bounds.hpp"
#include "zfl/forcing.hpp"
#include "zfl/graph6.hpp"
#include "zfl/grid.hpp"
#include "zfl/parallel.hpp"
#include "zfl/sampling.hpp"
#include "zfl/structure.hpp"
#include "zfl/threshold.hpp"

namespace zfl {

const std::string* VerificationReport::note(std::string_view key) const {
  for (const auto& [k, v] : notes)
    if (k == key) return &v;
  return nullptr;
}

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> list = {
      {"path-count", "z(G;k) <= z(P_n;k) for every k"},
      {"tree-path-dominance", "Pr(T,p) < Pr(P_n,p) for trees T != P_n and grid p in (0,1)"},
      {"large-p-tree", "tree-path-dominance restricted to grid p > 24/n"},
      {"degree-bounds", "all of min-degree, degree-sum, few-low-degree, degree-count, "
                        "path-count-lower and tree-count"},
      {"min-degree", "Pr <= delta n p^delta for minimum degree delta >= 1"},
      {"degree-sum", "Pr <= sum_v d(v) p^d(v) for graphs with an edge"},
      {"few-low-degree", "Pr <= 4pN + d n p^d under its degree-count hypotheses"},
      {"degree-count", "z(G;k) <= sum_v d(v) C(n-d(v), k-d(v)) for k < n"},
      {"path-count-lower", "k^2/(n+k^2) C(n,k) <= z(P_n;k) on the paths of the corpus"},
      {"tree-count", "z(T;k) <= 13 k^4 / n^2 C(n,k) for trees T != P_n"},
      {"double-pendant", "Pr <= 4p + n p^2 when a vertex anchors two pendant paths"},
      {"leaf-clique", "Pr(G) <= Pr(G + clique on its leaves) + pM"},
      {"core-projection", "B zero forcing in G implies C2(B,G) zero forcing in C2(G)"},
      {"min-threshold-path", "p(G) >= p(P_n) for graphs without isolated vertices"},
  };
  return list;
}

bool is_claim(std::string_view id) {
  return std::any_of(claims().begin(), claims().end(), [&](const auto& c) { return c.id == id; });
}

ZfPolynomial zf_polynomial_serial(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min(max_n, kHardEnumerationCap);
  if (n > cap)
    fail(ErrorCode::CapExceeded, fmt::format("exact enumeration capped at {} vertices, graph has {}",
                                             cap, n));
  std::vector<std::uint64_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.row(v)[0];
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s <= full; ++s)
    if (closure_mask(rows.data(), s, full) == full) ++counts[std::popcount(s)];
  ZfPolynomial poly{n, std::vector<u128>(n + 1)};
  for (std::size_t k = 0; k <= n; ++k) poly.coeffs[k] = counts[k];
  return poly;
}

namespace {

constexpr std::size_t kGraphChunks = 64;

struct GridPoint {
  Rational p;
  BigInt a;
  BigInt b;
  double value;
  std::string text;
};

std::vector<GridPoint> make_points(const std::vector<Rational>& grid) {
  std::vector<GridPoint> out;
  for (const auto& p : grid)
    out.push_back({p, numerator(p), denominator(p), to_double(p), to_string(p)});
  return out;
}

struct Partial {
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t cx_total = 0;
  std::vector<Counterexample> cx;
  std::optional<Rational> min_margin;
  std::string margin_text;
  std::string margin_graph;
  std::string margin_at;
  std::map<std::string, std::uint64_t> counters;
  std::size_t max_listed = 50;

  void counterexample(std::string g6, std::string at, std::string lhs, std::string rhs) {
    ++cx_total;
    if (cx.size() < max_listed) cx.push_back({std::move(g6), std::move(at), std::move(lhs), std::move(rhs)});
  }

  void margin(const Rational& m, const std::string& text, const std::string& g6,
              const std::string& at) {
    if (!min_margin || m < *min_margin) {
      min_margin = m;
      margin_text = text;
      margin_graph = g6;
      margin_at = at;
    }
  }

  void merge(Partial&& o) {
    instances += o.instances;
    skipped += o.skipped;
    comparisons += o.comparisons;
    cx_total += o.cx_total;
    for (auto& c : o.cx)
      if (cx.size() < max_listed) cx.push_back(std::move(c));
    if (o.min_margin) margin(*o.min_margin, o.margin_text, o.margin_graph, o.margin_at);
    for (auto& [k, v] : o.counters) counters[k] += v;
  }
};

bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

std::string exact_ratio(const BigInt& scaled, const BigInt& denom) {
  return to_string(Rational(scaled, denom));
}

// Shared state for the graph-by-graph claims.
struct Context {
  const VerifyOptions& options;
  std::vector<GridPoint> points;
  std::map<std::size_t, std::vector<BigInt>> path_scaled;  // b^n Pr(P_n, p) per grid point
  std::map<std::size_t, double> path_threshold;
};

// Per-graph data computed once and shared by every check on that graph.
struct Instance {
  const Graph& g;
  std::string g6;
  ZfPolynomial poly;
  std::vector<BigInt> scaled;  // b^n Pr(G, p) per grid point
  std::vector<BigInt> b_pow;   // b^n per grid point
};

using Check = std::function<void(const Context&, const Instance&, Partial&)>;

void check_path_count(const Context&, const Instance& in, Partial& out) {
  const std::size_t n = in.g.order();
  ++out.instances;
  for (std::size_t k = 0; k <= n; ++k) {
    ++out.comparisons;
    const u128 path = zf_path_closed_form(n, k);
    if (in.poly.coeffs[k] > path)
      out.counterexample(in.g6, fmt::format("k={}", k), to_decimal(in.poly.coeffs[k]),
                         to_decimal(path));
  }
}

void check_tree_dominance(const Context& ctx, const Instance& in, Partial& out,
                          bool large_p_only) {
  if (!is_tree(in.g)) {
    ++out.skipped;
    return;
  }
  const std::size_t n = in.g.order();
  const bool is_path = is_path_graph(in.g);
  const auto& path = ctx.path_scaled.at(n);
  const Rational large_p_floor(24, static_cast<long long>(n));
  bool applied = false;
  for (std::size_t j = 0; j < ctx.points.size(); ++j) {
    const auto& pt = ctx.points[j];
    if (large_p_only && pt.p <= large_p_floor) continue;
    applied = true;
    ++out.comparisons;
    const BigInt& tree = in.scaled[j];
    const bool endpoint = pt.p == 0 || pt.p == 1;
    if (is_path || endpoint) {
      if (tree != path[j])
        out.counterexample(in.g6, "p=" + pt.text + " (equality expected)",
                           exact_ratio(tree, in.b_pow[j]), exact_ratio(path[j], in.b_pow[j]));
      continue;
    }
    if (tree >= path[j]) {
      out.counterexample(in.g6, "p=" + pt.text, exact_ratio(tree, in.b_pow[j]),
                         exact_ratio(path[j], in.b_pow[j]));
    }
    const Rational gap(path[j] - tree, in.b_pow[j]);
    out.margin(gap, to_string(gap), in.g6, "p=" + pt.text);
  }
  if (applied) ++out.instances;
  else {
    ++out.skipped;
    ++out.counters["vacuous"];
  }
}

// Compares b^n Pr(G, p) against a scaled bound at each grid point where
// `bound` returns a value.
void check_probability_bound(
    const Context& ctx, const Instance& in, Partial& out, const std::string& name,
    const std::function<std::optional<BigInt>(const GridPoint&)>& bound) {
  for (std::size_t j = 0; j < ctx.points.size(); ++j) {
    const auto rhs = bound(ctx.points[j]);
    if (!rhs) continue;
    ++out.comparisons;
    if (in.scaled[j] > *rhs)
      out.counterexample(in.g6, name + " p=" + ctx.points[j].text,
                         exact_ratio(in.scaled[j], in.b_pow[j]), exact_ratio(*rhs, in.b_pow[j]));
  }
}

void check_min_degree(const Context& ctx, const Instance& in, Partial& out) {
  if (in.g.min_degree() == 0) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  check_probability_bound(ctx, in, out, "min-degree", [&](const GridPoint& pt) {
    return std::optional<BigInt>(min_degree_bound_scaled(in.g, pt.a, pt.b));
  });
}

void check_degree_sum(const Context& ctx, const Instance& in, Partial& out) {
  if (in.g.edge_count() == 0) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  check_probability_bound(ctx, in, out, "degree-sum", [&](const GridPoint& pt) {
    return std::optional<BigInt>(degree_sum_bound_scaled(in.g, pt.a, pt.b));
  });
}

// Smallest N with N^k >= count.
std::size_t root_ceiling(std::size_t count, std::size_t k) {
  if (count == 0) return 0;
  auto reaches = [&](std::size_t N) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
      acc *= N;
      if (acc >= count) return true;
    }
    return acc >= count;
  };
  std::size_t N = static_cast<std::size_t>(
      std::max(1.0, std::floor(std::pow(static_cast<double>(count), 1.0 / static_cast<double>(k))) - 1));
  while (!reaches(N)) ++N;
  return N;
}

void check_few_low_degree(const Context& ctx, const Instance& in, Partial& out) {
  const std::size_t n = in.g.order();
  if (has_isolated_vertex(in.g)) {
    ++out.skipped;
    return;
  }
  std::vector<std::size_t> count(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++count[in.g.degree(v)];
  const std::size_t d_max = std::min(n, in.g.max_degree() + 1);
  ++out.instances;
  for (std::size_t d = 1; d <= d_max; ++d) {
    std::size_t N = 0;
    for (std::size_t k = 1; k < d; ++k) N = std::max(N, root_ceiling(count[k], k));
    const std::string name = fmt::format("few-low-degree d={} N={}", d, N);
    check_probability_bound(ctx, in, out, name, [&](const GridPoint& pt) -> std::optional<BigInt> {
      if (!few_low_degree_violation(in.g, pt.value, d, N).empty()) return std::nullopt;
      return few_low_degree_bound_scaled(in.g, pt.a, pt.b, d, N);
    });
  }
}

void check_degree_count(const Context&, const Instance& in, Partial& out) {
  if (in.g.edge_count() == 0) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  for (std::size_t k = 0; k < in.g.order(); ++k) {
    ++out.comparisons;
    const BigInt bound = degree_count_bound(in.g, k);
    const BigInt z = to_big(in.poly.coeffs[k]);
    if (z > bound)
      out.counterexample(in.g6, fmt::format("degree-count k={}", k), z.str(), bound.str());
  }
}

void check_path_count_lower(const Context&, const Instance& in, Partial& out) {
  if (!is_path_graph(in.g)) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  const std::size_t n = in.g.order();
  for (std::size_t k = 0; k <= n; ++k) {
    ++out.comparisons;
    const Rational lower = path_count_lower_bound(n, k);
    const Rational z(to_big(in.poly.coeffs[k]));
    if (lower > z)
      out.counterexample(in.g6, fmt::format("path-count-lower k={}", k), to_string(lower),
                         to_string(z));
  }
}

void check_tree_count(const Context&, const Instance& in, Partial& out) {
  if (!is_tree(in.g) || is_path_graph(in.g)) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  const std::size_t n = in.g.order();
  for (std::size_t k = 0; k <= n; ++k) {
    ++out.comparisons;
    const Rational bound = tree_count_bound(n, k);
    const Rational z(to_big(in.poly.coeffs[k]));
    if (z > bound)
      out.counterexample(in.g6, fmt::format("tree-count k={}", k), to_string(z), to_string(bound));
  }
}

void check_degree_bounds(const Context& ctx, const Instance& in, Partial& out) {
  // Each sub-check counts its own applicability; the aggregate counts graphs.
  Partial sub;
  sub.max_listed = out.max_listed;
  check_min_degree(ctx, in, sub);
  check_degree_sum(ctx, in, sub);
  check_few_low_degree(ctx, in, sub);
  check_degree_count(ctx, in, sub);
  check_path_count_lower(ctx, in, sub);
  check_tree_count(ctx, in, sub);
  ++out.instances;
  out.comparisons += sub.comparisons;
  out.cx_total += sub.cx_total;
  for (auto& c : sub.cx)
    if (out.cx.size() < out.max_listed) out.cx.push_back(std::move(c));
  out.counters["bound-applications"] += sub.instances;
}

void check_double_pendant(const Context& ctx, const Instance& in, Partial& out) {
  if (double_pendant_anchors(in.g).empty()) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  const std::size_t n = in.g.order();
  check_probability_bound(ctx, in, out, "double-pendant", [&](const GridPoint& pt) {
    return std::optional<BigInt>(double_pendant_bound_scaled(n, pt.a, pt.b));
  });
}

void check_leaf_clique(const Context& ctx, const Instance& in, Partial& out) {
  const std::size_t n = in.g.order();
  VertexSet leaves(n);
  for (Vertex v = 0; v < n; ++v)
    if (in.g.degree(v) == 1) leaves.set(v);
  if (leaves.count() < 2) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  const Graph lifted = add_leaf_clique(in.g, leaves);
  const ZfPolynomial lifted_poly = zf_polynomial_serial(lifted, ctx.options.max_n);
  const std::size_t M = leaves.count();
  check_probability_bound(ctx, in, out, fmt::format("leaf-clique M={}", M), [&](const GridPoint& pt) {
    return std::optional<BigInt>(scaled_probability(lifted_poly, pt.a, pt.b) +
                                 BigInt(M) * pt.a * ipow(pt.b, n - 1));
  });
}

void check_min_threshold(const Context& ctx, const Instance& in, Partial& out) {
  const std::size_t n = in.g.order();
  if (n < 2 || has_isolated_vertex(in.g)) {
    ++out.skipped;
    return;
  }
  ++out.instances;
  ++out.comparisons;
  if (is_path_graph(in.g)) return;
  const double mine = threshold_exact(in.poly, 1e-13).p_hat;
  const double path = ctx.path_threshold.at(n);
  const double gap = mine - path;
  if (gap < -1e-9)
    out.counterexample(in.g6, fmt::format("n={}", n), fmt::format("{:.12f}", mine),
                       fmt::format("{:.12f}", path));
  out.margin(Rational(gap), fmt::format("{:.12g}", gap), in.g6, fmt::format("n={}", n));
}

Check check_for(std::string_view claim) {
  if (claim == "path-count") return check_path_count;
  if (claim == "tree-path-dominance")
    return [](const Context& c, const Instance& i, Partial& p) { check_tree_dominance(c, i, p, false); };
  if (claim == "large-p-tree")
    return [](const Context& c, const Instance& i, Partial& p) { check_tree_dominance(c, i, p, true); };
  if (claim == "degree-bounds") return check_degree_bounds;
  if (claim == "min-degree") return check_min_degree;
  if (claim == "degree-sum") return check_degree_sum;
  if (claim == "few-low-degree") return check_few_low_degree;
  if (claim == "degree-count") return check_degree_count;
  if (claim == "path-count-lower") return check_path_count_lower;
  if (claim == "tree-count") return check_tree_count;
  if (claim == "double-pendant") return check_double_pendant;
  if (claim == "leaf-clique") return check_leaf_clique;
  if (claim == "min-threshold-path") return check_min_threshold;
  return nullptr;
}

std::string set_text(const VertexSet& b) {
  std::string out = "B={";
  bool first = true;
  b.for_each([&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

Partial run_core_projection(const Corpus& corpus, const VerifyOptions& options) {
  if (corpus.graphs.empty()) return {};
  constexpr std::uint64_t kStream = 0x636f726532ULL;
  std::vector<Partial> parts(kGraphChunks);
  parallel_chunks(options.samples, kGraphChunks, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
    Partial& out = parts[c];
    out.max_listed = options.max_listed;
    std::vector<double> u;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t key = sample_key(options.seed, kStream, i);
      const Graph& g = corpus.graphs[mix64(key) % corpus.graphs.size()];
      const std::size_t n = g.order();
      // Condition on B being zero forcing by rejection over a fresh density
      // each try; fall back to B = V(G) after 64 tries.
      VertexSet b = VertexSet::full(n);
      for (std::uint64_t t = 0; t < 64; ++t) {
        const std::uint64_t tk = mix64(key + 0x9e3779b97f4a7c15ULL * (t + 1));
        const double p = static_cast<double>(mix64(tk) >> 11) * 0x1.0p-53;
        sample_uniforms(mix64(tk ^ 0x5bd1e995ULL), n, u);
        VertexSet trial(n);
        for (Vertex v = 0; v < n; ++v)
          if (u[v] < p) trial.set(v);
        if (is_zfs(g, trial)) {
          b = std::move(trial);
          break;
        }
      }
      ++out.instances;
      const CoreProjection proj = core_project_set(g, b);
      if (proj.core.order() == 0) {
        ++out.counters["vacuous"];
        continue;
      }
      ++out.comparisons;
      if (!is_zfs(proj.core, proj.projected_set))
        out.counterexample(graph6_encode(g), set_text(b),
                           "C2(B)=" + set_text(proj.projected_set).substr(2), "not zero forcing");
    }
  });
  Partial total;
  total.max_listed = options.max_listed;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

}  // namespace

VerificationReport verify_claim(std::string_view claim, const Corpus& corpus,
                                const VerifyOptions& options) {
  if (!is_claim(claim)) fail(ErrorCode::InvalidArgument, "unknown claim '" + std::string(claim) + "'");
  const auto started = std::chrono::steady_clock::now();

  VerificationReport report;
  report.claim = std::string(claim);
  report.corpus = corpus.descriptor;
  report.corpus_hash = corpus.hash;
  report.version = ZFL_VERSION_STRING;
  report.seed = options.seed;
  report.grid = options.grid.empty() ? default_grid() : options.grid;

  Partial total;
  total.max_listed = options.max_listed;

  if (claim == "core-projection") {
    total = run_core_projection(corpus, options);
    report.grid.clear();
  } else {
    Context ctx{options, make_points(report.grid), {}, {}};
    for (const auto& g : corpus.graphs) {
      const std::size_t n = g.order();
      if (ctx.path_scaled.count(n)) continue;
      const ZfPolynomial path = path_polynomial(n);
      auto& scaled = ctx.path_scaled[n];
      for (const auto& pt : ctx.points) scaled.push_back(scaled_probability(path, pt.a, pt.b));
      if (n >= 2) ctx.path_threshold[n] = threshold_exact(path, 1e-13).p_hat;
    }
    const Check check = check_for(claim);
    std::vector<Partial> parts(kGraphChunks);
    parallel_chunks(corpus.graphs.size(), kGraphChunks,
                    [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
                      Partial& out = parts[c];
                      out.max_listed = options.max_listed;
                      for (std::uint64_t i = begin; i < end; ++i) {
                        const Graph& g = corpus.graphs[i];
                        Instance in{g, graph6_encode(g), zf_polynomial_serial(g, options.max_n), {}, {}};
                        for (const auto& pt : ctx.points) {
                          in.scaled.push_back(scaled_probability(in.poly, pt.a, pt.b));
                          in.b_pow.push_back(ipow(pt.b, g.order()));
                        }
                        check(ctx, in, out);
                      }
                    });
    for (auto& p : parts) total.merge(std::move(p));
  }

  report.instances = total.instances;
  report.skipped = total.skipped;
  report.comparisons = total.comparisons;
  report.counterexample_total = total.cx_total;
  report.counterexamples = std::move(total.cx);
  if (total.min_margin) {
    report.notes.emplace_back("min_margin", total.margin_text);
    report.notes.emplace_back("min_margin_decimal", fmt::format("{:.6e}", to_double(*total.min_margin)));
    report.notes.emplace_back("min_margin_graph6", total.margin_graph);
    report.notes.emplace_back("min_margin_at", total.margin_at);
  }
  for (const auto& [k, v] : total.counters) report.notes.emplace_back(k, std::to_string(v));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace zfl
