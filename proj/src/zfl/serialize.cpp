#include "zfl/serialize.hpp"

#include "zfl/corpus.hpp"
#include "zfl/experiments.hpp"
#include "zfl/graph6.hpp"
#include "zfl/grid.hpp"

namespace zfl {

Json to_json(const VertexSet& s) { return Json(s.indices()); }

Json to_json(const ForcingRecord& rec) {
  Json forces = Json::array();
  for (const auto& f : rec.forces) forces.push_back({f.forcer, f.forced});
  return {{"forces", std::move(forces)}, {"blue", to_json(rec.final_blue)},
          {"reversal", to_json(rec.reversal)}};
}

Json chains_to_json(const std::vector<std::vector<Vertex>>& chains) { return Json(chains); }

Json to_json(const ZfPolynomial& poly) {
  Json z = Json::array();
  for (u128 c : poly.coeffs) z.push_back(to_decimal(c));
  return {{"n", poly.n}, {"z", std::move(z)}};
}

std::string polynomial_csv(const ZfPolynomial& poly) {
  std::string out = "k,z\n";
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k)
    out += std::to_string(k) + "," + to_decimal(poly.coeffs[k]) + "\n";
  return out;
}

Json to_json(const McEstimate& e) {
  return {{"p", e.p},           {"estimate", e.estimate}, {"ci_lo", e.ci.lo},
          {"ci_hi", e.ci.hi},   {"successes", e.successes}, {"samples", e.samples},
          {"seed", e.seed}};
}

std::string mc_csv_header() { return "p,estimate,ci_lo,ci_hi,samples,seed\n"; }

std::string mc_csv_row(const McEstimate& e) {
  return format_number(e.p) + "," + format_number(e.estimate) + "," + format_number(e.ci.lo) + "," +
         format_number(e.ci.hi) + "," + std::to_string(e.samples) + "," + std::to_string(e.seed) +
         "\n";
}

Json to_json(const ThresholdEstimate& t) {
  Json out = {{"p_hat", t.p_hat},
              {"method", to_string(t.method)},
              {"tolerance", t.tolerance},
              {"bracket", {t.bracket.lo, t.bracket.hi}},
              {"evaluations", t.evaluations}};
  if (t.seed) out["seed"] = *t.seed;
  if (t.method == ThresholdMethod::MonteCarlo) {
    out["samples"] = t.samples_used;
    out["inconclusive"] = t.inconclusive;
  }
  return out;
}

Json to_json(const CoreProjection& proj, bool with_projection) {
  Json out = {{"order", proj.core.order()},
              {"graph6", proj.core.order() ? graph6_encode(proj.core) : ""},
              {"vertex_map", proj.to_original}};
  if (with_projection) {
    std::vector<Vertex> original;
    proj.projected_set.for_each([&](Vertex v) { original.push_back(proj.to_original[v]); });
    out["projected"] = to_json(proj.projected_set);
    out["projected_original"] = original;
  }
  return out;
}

Json pendants_to_json(const Graph& g) {
  const PendantScan scan = scan_pendants(g);
  Json paths = Json::array();
  for (const auto& p : scan.paths)
    paths.push_back({{"vertices", p.vertices}, {"pendant", p.pendant()}, {"anchor", p.anchor()}});
  Json trees = Json::array();
  for (const auto& t : pendant_trees(g))
    trees.push_back({{"vertices", to_json(t.vertices)}, {"anchor", t.anchor}});
  return {{"pendant_paths", std::move(paths)},
          {"pendant_trees", std::move(trees)},
          {"path_components", scan.path_components},
          {"tree_components", tree_components(g)}};
}

Json to_json(const VerificationReport& report, bool with_timing) {
  Json cx = Json::array();
  for (const auto& c : report.counterexamples)
    cx.push_back({{"graph6", c.graph6}, {"at", c.at}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  Json notes = Json::object();
  for (const auto& [k, v] : report.notes) notes[k] = v;
  Json out = {{"claim", report.claim},
              {"pass", report.pass()},
              {"version", report.version},
              {"corpus", report.corpus},
              {"corpus_hash", hash_hex(report.corpus_hash)},
              {"seed", report.seed},
              {"grid", grid_to_string(report.grid)},
              {"instances", report.instances},
              {"skipped", report.skipped},
              {"comparisons", report.comparisons},
              {"counterexample_total", report.counterexample_total},
              {"counterexamples", std::move(cx)},
              {"notes", std::move(notes)}};
  if (with_timing) out["wall_seconds"] = report.wall_seconds;
  return out;
}

}  // namespace zfl
