#include "zfl/zfl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "zfl/corpus.hpp"
#include "zfl/experiments.hpp"
#include "zfl/families.hpp"
#include "zfl/forcing.hpp"
#include "zfl/graph6.hpp"
#include "zfl/grid.hpp"
#include "zfl/parallel.hpp"
#include "zfl/serialize.hpp"

struct zfl_graph {
  zfl::Graph g;
};

struct zfl_poly {
  zfl::ZfPolynomial poly;
};

namespace {

thread_local std::string last_error;

zfl_status status_for(zfl::ErrorCode code) {
  switch (code) {
    case zfl::ErrorCode::InvalidArgument: return ZFL_ERR_INVALID;
    case zfl::ErrorCode::OutOfRange: return ZFL_ERR_RANGE;
    case zfl::ErrorCode::CapExceeded: return ZFL_ERR_CAP;
    case zfl::ErrorCode::Parse: return ZFL_ERR_PARSE;
    case zfl::ErrorCode::Io: return ZFL_ERR_IO;
    case zfl::ErrorCode::Precondition: return ZFL_ERR_PRECONDITION;
  }
  return ZFL_ERR_INTERNAL;
}

template <class F>
zfl_status guarded(F&& body) {
  try {
    body();
    return ZFL_OK;
  } catch (const zfl::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return ZFL_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) zfl::fail(zfl::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

zfl::VertexSet make_set(const zfl::Graph& g, const std::uint32_t* set, std::size_t size) {
  if (size > 0) require(set, "set");
  return zfl::VertexSet::from_indices(g.order(), std::span<const std::uint32_t>(set, size));
}

void fill(const zfl::ThresholdEstimate& t, zfl_threshold_result* out) {
  out->p_hat = t.p_hat;
  out->lo = t.bracket.lo;
  out->hi = t.bracket.hi;
  out->tolerance = t.tolerance;
  out->evaluations = t.evaluations;
  out->samples = t.samples_used;
  out->seed = t.seed.value_or(0);
  out->method = t.method == zfl::ThresholdMethod::MonteCarlo ? ZFL_THRESHOLD_MC : ZFL_THRESHOLD_EXACT;
  out->inconclusive = t.inconclusive ? 1 : 0;
}

std::vector<std::size_t> parse_sizes(const char* text) {
  std::vector<std::size_t> out;
  if (!text || !*text) return out;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string term = s.substr(pos, comma - pos);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(term.c_str(), &end, 10);
    if (term.empty() || *end != '\0') zfl::fail(zfl::ErrorCode::Parse, "bad size '" + term + "'");
    out.push_back(static_cast<std::size_t>(v));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* zfl_version(void) { return ZFL_VERSION_STRING; }

const char* zfl_status_name(zfl_status status) {
  switch (status) {
    case ZFL_OK: return "ok";
    case ZFL_ERR_INVALID: return "invalid argument";
    case ZFL_ERR_RANGE: return "out of range";
    case ZFL_ERR_CAP: return "cap exceeded";
    case ZFL_ERR_PARSE: return "parse error";
    case ZFL_ERR_IO: return "i/o error";
    case ZFL_ERR_PRECONDITION: return "precondition violated";
    case ZFL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* zfl_last_error(void) { return last_error.c_str(); }

void zfl_string_free(char* s) { std::free(s); }

zfl_status zfl_set_threads(size_t n) {
  return guarded([&] { zfl::set_thread_count(n); });
}

zfl_status zfl_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count, zfl_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) require(edges, "edges");
    std::vector<zfl::Edge> list;
    list.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new zfl_graph{zfl::make_graph(n, list)};
  });
}

zfl_status zfl_graph_from_graph6(const char* text, zfl_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new zfl_graph{zfl::graph6_decode(text)};
  });
}

zfl_status zfl_graph_from_family(const char* descriptor, zfl_graph** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    *out = new zfl_graph{zfl::family(std::string_view(descriptor))};
  });
}

zfl_status zfl_graph_union(const zfl_graph* a, const zfl_graph* b, zfl_graph** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new zfl_graph{zfl::disjoint_union(a->g, b->g)};
  });
}

zfl_status zfl_graph_join(const zfl_graph* a, const zfl_graph* b, zfl_graph** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new zfl_graph{zfl::join(a->g, b->g)};
  });
}

void zfl_graph_free(zfl_graph* g) { delete g; }

size_t zfl_graph_order(const zfl_graph* g) { return g ? g->g.order() : 0; }

size_t zfl_graph_edge_count(const zfl_graph* g) { return g ? g->g.edge_count() : 0; }

zfl_status zfl_graph_degree(const zfl_graph* g, uint32_t v, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (v >= g->g.order()) zfl::fail(zfl::ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside graph of order " +
                                                std::to_string(g->g.order()));
    *out = g->g.degree(v);
  });
}

zfl_status zfl_graph_to_graph6(const zfl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(zfl::graph6_encode(g->g));
  });
}

zfl_status zfl_corpus_graph6(const char* descriptor, uint64_t seed, char** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    const zfl::Corpus corpus = zfl::open_corpus(descriptor, seed);
    std::string text;
    for (const auto& g : corpus.graphs) text += zfl::graph6_encode(g) + "\n";
    *out = duplicate(text);
  });
}

zfl_status zfl_is_zfs(const zfl_graph* g, const uint32_t* set, size_t set_size, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = zfl::is_zfs(g->g, make_set(g->g, set, set_size)) ? 1 : 0;
  });
}

zfl_status zfl_closure_json(const zfl_graph* g, const uint32_t* set, size_t set_size, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto rec = zfl::closure(g->g, make_set(g->g, set, set_size));
    auto json = zfl::to_json(rec);
    json["chains"] = zfl::chains_to_json(zfl::maximal_forcing_chains(rec));
    json["zero_forcing"] = rec.final_blue.is_full();
    *out = duplicate(json.dump());
  });
}

zfl_status zfl_zero_forcing_number(const zfl_graph* g, size_t cap, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = zfl::zero_forcing_number(g->g, cap == 0 ? 32 : cap);
  });
}

zfl_status zfl_poly_compute(const zfl_graph* g, size_t max_n, zfl_poly** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new zfl_poly{zfl::zf_polynomial_exact(g->g, max_n == 0 ? zfl::kDefaultEnumerationCap : max_n)};
  });
}

zfl_status zfl_poly_from_family(const char* descriptor, size_t max_n, zfl_poly** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    const auto spec = zfl::parse_family(descriptor);
    const std::size_t n = spec.order();
    switch (spec.kind) {
      case zfl::FamilyKind::Path: *out = new zfl_poly{zfl::path_polynomial(n)}; return;
      case zfl::FamilyKind::Complete: *out = new zfl_poly{zfl::clique_polynomial(n)}; return;
      case zfl::FamilyKind::Empty: *out = new zfl_poly{zfl::empty_graph_polynomial(n)}; return;
      default: break;
    }
    *out = new zfl_poly{zfl::zf_polynomial_exact(zfl::family(spec),
                                                 max_n == 0 ? zfl::kDefaultEnumerationCap : max_n)};
  });
}

void zfl_poly_free(zfl_poly* poly) { delete poly; }

size_t zfl_poly_order(const zfl_poly* poly) { return poly ? poly->poly.n : 0; }

zfl_status zfl_poly_coeff(const zfl_poly* poly, size_t k, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    if (k > poly->poly.n) zfl::fail(zfl::ErrorCode::OutOfRange, "k exceeds n");
    *out = duplicate(zfl::to_decimal(poly->poly.coeffs[k]));
  });
}

zfl_status zfl_poly_json(const zfl_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = duplicate(zfl::to_json(poly->poly).dump());
  });
}

zfl_status zfl_poly_csv(const zfl_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = duplicate(zfl::polynomial_csv(poly->poly));
  });
}

zfl_status zfl_poly_prob(const zfl_poly* poly, double p, double* out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = zfl::prob_zfs_exact(poly->poly, p);
  });
}

zfl_status zfl_poly_prob_rational(const zfl_poly* poly, const char* p, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(p, "p");
    require(out, "out");
    const zfl::Rational value = zfl::parse_rational(p);
    if (value < 0 || value > 1) zfl::fail(zfl::ErrorCode::OutOfRange, "p must lie in [0, 1]");
    *out = duplicate(zfl::to_string(zfl::prob_zfs_rational(poly->poly, value)));
  });
}

zfl_status zfl_mc_prob(const zfl_graph* g, double p, uint64_t samples, uint64_t seed, double alpha,
                       int wilson, zfl_mc_result* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    zfl::SampleConfig cfg;
    cfg.p = p;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.alpha = alpha;
    cfg.wilson = wilson != 0;
    const auto e = zfl::mc_prob(g->g, cfg);
    *out = {e.p, e.estimate, e.ci.lo, e.ci.hi, e.successes, e.samples, e.seed};
  });
}

zfl_status zfl_threshold_exact(const zfl_poly* poly, double tol, zfl_threshold_result* out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    fill(zfl::threshold_exact(poly->poly, tol), out);
  });
}

zfl_status zfl_threshold_exact_family(const char* descriptor, double tol, size_t max_n,
                                      zfl_threshold_result* out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    fill(zfl::threshold_exact_family(zfl::parse_family(descriptor), tol,
                                     max_n == 0 ? zfl::kDefaultEnumerationCap : max_n),
         out);
  });
}

void zfl_mc_threshold_options_init(zfl_mc_threshold_options* options) {
  if (!options) return;
  const zfl::McThresholdConfig d;
  *options = {d.budget, d.probe_cap, d.batch, d.seed, d.tol, d.alpha, d.wilson ? 1 : 0};
}

zfl_status zfl_threshold_mc(const zfl_graph* g, const zfl_mc_threshold_options* options,
                            zfl_threshold_result* out) {
  return guarded([&] {
    require(g, "graph");
    require(options, "options");
    require(out, "out");
    zfl::McThresholdConfig cfg;
    cfg.budget = options->budget;
    cfg.probe_cap = options->probe_cap;
    cfg.batch = options->batch;
    cfg.seed = options->seed;
    cfg.tol = options->tol;
    cfg.alpha = options->alpha;
    cfg.wilson = options->wilson != 0;
    fill(zfl::threshold_mc(g->g, cfg), out);
  });
}

zfl_status zfl_threshold_bounds_kn(size_t n, double* lo, double* hi) {
  return guarded([&] {
    require(lo, "lo");
    require(hi, "hi");
    const auto b = zfl::threshold_bounds_kn(n);
    *lo = b.lo;
    *hi = b.hi;
  });
}

zfl_status zfl_core2_json(const zfl_graph* g, const uint32_t* set, size_t set_size, int with_set,
                          char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const zfl::CoreProjection proj = with_set ? zfl::core_project_set(g->g, make_set(g->g, set, set_size))
                                              : zfl::two_core(g->g);
    *out = duplicate(zfl::to_json(proj, with_set != 0).dump());
  });
}

zfl_status zfl_pendants_json(const zfl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(zfl::pendants_to_json(g->g).dump());
  });
}

void zfl_verify_options_init(zfl_verify_options* options) {
  if (!options) return;
  const zfl::VerifyOptions d;
  *options = {nullptr, nullptr, nullptr, d.seed, d.max_n, d.samples, d.max_listed, 0};
}

zfl_status zfl_verify(const zfl_verify_options* options, char** report_json, uint64_t* counterexamples) {
  return guarded([&] {
    require(options, "options");
    require(options->claim, "claim");
    require(options->corpus, "corpus");
    require(report_json, "report_json");
    zfl::VerifyOptions opts;
    if (options->grid && *options->grid) opts.grid = zfl::parse_grid(options->grid);
    opts.seed = options->seed;
    opts.max_n = options->max_n == 0 ? zfl::kDefaultEnumerationCap : options->max_n;
    opts.samples = options->samples;
    opts.max_listed = options->max_listed;
    if (!zfl::is_claim(options->claim))
      zfl::fail(zfl::ErrorCode::InvalidArgument, std::string("unknown claim '") + options->claim + "'");
    const zfl::Corpus corpus = zfl::open_corpus(options->corpus, options->seed);
    const auto report = zfl::verify_claim(options->claim, corpus, opts);
    *report_json = duplicate(zfl::to_json(report, options->timing != 0).dump(2));
    if (counterexamples) *counterexamples = report.counterexample_total;
  });
}

zfl_status zfl_claims_json(char** out) {
  return guarded([&] {
    require(out, "out");
    zfl::Json list = zfl::Json::array();
    for (const auto& c : zfl::claims()) list.push_back({{"id", c.id}, {"summary", c.summary}});
    *out = duplicate(list.dump(2));
  });
}

void zfl_experiment_options_init(zfl_experiment_options* options) {
  if (!options) return;
  *options = {};
  options->samples = 10000;
  options->budget = 200000;
  options->seed = 1;
  options->alpha = 0.01;
  options->tol = 0.0;
  options->include_mc = 1;
  options->path_len = 8;
}

zfl_status zfl_experiment(const zfl_experiment_options* options, char** csv, char** summary_json) {
  return guarded([&] {
    require(options, "options");
    require(options->name, "experiment name");
    require(csv, "csv");
    const std::string name = options->name;
    zfl::Json summary = zfl::Json::object();
    std::string table;
    if (name == "figure2") {
      zfl::Figure2Options f;
      if (options->grid && *options->grid) f.grid = zfl::parse_grid(options->grid);
      f.samples = options->samples;
      f.seed = options->seed;
      f.alpha = options->alpha;
      f.wilson = options->wilson != 0;
      f.include_mc = options->include_mc != 0;
      const auto result = zfl::experiment_figure2(f);
      table = result.curves.to_csv();
      zfl::Json crossings = zfl::Json::array();
      for (const auto& c : result.crossing_list) {
        zfl::Json row = {{"graph", c.graph}, {"n", c.n}, {"method", c.method},
                         {"crossing", c.crossing}, {"ci", {c.ci.lo, c.ci.hi}}};
        if (c.bisection) row["bisection"] = *c.bisection;
        crossings.push_back(std::move(row));
      }
      summary["crossings"] = std::move(crossings);
      summary["monotone_within_ci"] = result.monotone_within_ci;
    } else if (name == "orders") {
      zfl::OrdersOptions o;
      if (options->family && *options->family) o.family = options->family;
      if (auto sizes = parse_sizes(options->sizes); !sizes.empty()) o.sizes = sizes;
      if (options->method && *options->method) o.method = options->method;
      o.budget = options->budget;
      o.seed = options->seed;
      o.alpha = options->alpha;
      if (options->tol > 0) o.rel_tol = options->tol;
      const auto result = zfl::experiment_threshold_orders(o);
      table = result.table.to_csv();
      summary["family"] = o.family;
      summary["all_in_band"] = result.all_in_band;
    } else if (name == "hypercube" || name == "clique-paths") {
      zfl::McExperimentOptions m;
      m.budget = options->budget;
      m.seed = options->seed;
      m.alpha = options->alpha;
      if (options->tol > 0) m.tol = options->tol;
      auto sizes = parse_sizes(options->sizes);
      if (name == "hypercube") {
        if (sizes.empty()) sizes = {2, 3, 4, 5, 6, 7, 8};
        table = zfl::experiment_hypercube(sizes, m).to_csv();
      } else {
        if (sizes.empty()) sizes = {2, 4, 8, 16};
        table = zfl::experiment_clique_paths(sizes, options->path_len, m).to_csv();
      }
    } else {
      zfl::fail(zfl::ErrorCode::InvalidArgument, "unknown experiment '" + name + "'");
    }
    *csv = duplicate(table);
    if (summary_json) *summary_json = duplicate(summary.dump(2));
  });
}

}  // extern "C"
