#include "zfl/experiments.hpp"

#include <cmath>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/grid.hpp"
#include "zfl/polynomial.hpp"
#include "zfl/threshold.hpp"

namespace zfl {

std::string CsvTable::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

std::string format_number(double x) { return fmt::format("{}", x); }

namespace {

double exact_crossing(const ZfPolynomial& poly) {
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      [&](double p) { return prob_zfs_exact(poly, p) - 0.5; }, 0.0, 1.0, -0.5, 0.5,
      boost::math::tools::eps_tolerance<double>(52), iterations);
  return 0.5 * (lo + hi);
}

// Linear interpolation of the first upward crossing of 1/2.
double interpolated_crossing(const std::vector<McEstimate>& curve) {
  for (std::size_t j = 0; j < curve.size(); ++j) {
    if (curve[j].estimate < 0.5) continue;
    if (j == 0) return curve[0].p;
    const auto& a = curve[j - 1];
    const auto& b = curve[j];
    return a.p + (0.5 - a.estimate) / (b.estimate - a.estimate) * (b.p - a.p);
  }
  return curve.empty() ? 1.0 : curve.back().p;
}

Interval crossing_interval(const std::vector<McEstimate>& curve) {
  Interval out{0.0, 1.0};
  for (const auto& e : curve) {
    if (e.ci.hi < 0.5) out.lo = e.p;
    if (e.ci.lo > 0.5 && e.p < out.hi) out.hi = e.p;
  }
  return out;
}

std::vector<std::string> curve_row(const std::string& graph, std::size_t n, const char* method,
                                   double p, double est, Interval ci, std::uint64_t samples,
                                   const std::string& seed) {
  return {graph, std::to_string(n), method, format_number(p), format_number(est),
          format_number(ci.lo), format_number(ci.hi), std::to_string(samples), seed};
}

}  // namespace

Figure2Result experiment_figure2(const Figure2Options& options) {
  const auto rational_grid = options.grid.empty() ? default_grid() : options.grid;
  const auto grid = grid_to_double(rational_grid);
  Figure2Result result;
  result.curves.header = {"graph", "n", "method", "p", "estimate", "ci_lo", "ci_hi", "samples", "seed"};
  result.crossings.header = {"graph", "n", "method", "crossing", "ci_lo", "ci_hi", "bisection"};

  for (const char* name : {"path:16", "grid:4x4", "hypercube:4", "bintree:16"}) {
    const Graph g = family(name);
    const ZfPolynomial poly = zf_polynomial_exact(g);
    double prev = 0.0;
    for (double p : grid) {
      const double v = prob_zfs_exact(poly, p);
      if (v < prev) result.monotone_within_ci = false;
      prev = v;
      result.curves.rows.push_back(curve_row(name, g.order(), "exact", p, v, {v, v}, 0, ""));
    }
    Crossing c;
    c.graph = name;
    c.n = g.order();
    c.method = "exact";
    c.crossing = exact_crossing(poly);
    c.ci = {c.crossing, c.crossing};
    c.bisection = threshold_exact(poly, 1e-12).p_hat;
    result.crossing_list.push_back(c);
  }

  if (options.include_mc) {
    std::uint64_t stream = 0;
    for (const char* name : {"path:256", "grid:16x16", "hypercube:8", "bintree:256"}) {
      const Graph g = family(name);
      SampleConfig cfg;
      cfg.samples = options.samples;
      cfg.seed = options.seed;
      cfg.alpha = options.alpha;
      cfg.wilson = options.wilson;
      cfg.stream = stream++;
      const auto curve = mc_curve(g, grid, cfg);
      for (std::size_t j = 0; j < curve.size(); ++j) {
        const auto& e = curve[j];
        if (j > 0) {
          const auto& d = curve[j - 1];
          const double slack = (d.ci.hi - d.estimate) + (e.estimate - e.ci.lo);
          if (e.estimate < d.estimate - slack) result.monotone_within_ci = false;
        }
        result.curves.rows.push_back(curve_row(name, g.order(), "monte-carlo", e.p, e.estimate,
                                               e.ci, e.samples, std::to_string(e.seed)));
      }
      Crossing c;
      c.graph = name;
      c.n = g.order();
      c.method = "monte-carlo";
      c.crossing = interpolated_crossing(curve);
      c.ci = crossing_interval(curve);
      result.crossing_list.push_back(c);
    }
  }

  for (const auto& c : result.crossing_list)
    result.crossings.rows.push_back({c.graph, std::to_string(c.n), c.method, format_number(c.crossing),
                                     format_number(c.ci.lo), format_number(c.ci.hi),
                                     c.bisection ? format_number(*c.bisection) : ""});
  return result;
}

OrderStatistic default_order_statistic(const std::string& family) {
  if (family == "path" || family == "cycle") return {0.5, false, Interval{0.2, 5.0}};
  if (family == "wheel") return {1.0 / 3.0, false, Interval{0.5, 1.6}};
  if (family == "complete") return {1.0, true, Interval{0.5, 5.0}};
  if (family == "grid2") return {0.25, false, std::nullopt};
  if (family == "nk1") return {1.0, true, std::nullopt};
  fail(ErrorCode::InvalidArgument, "no threshold-order experiment for family '" + family + "'");
}

namespace {

Graph order_family_graph(const std::string& family, std::size_t n) {
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "wheel") return wheel_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "grid2") return grid_graph(2, n);
  if (family == "nk1") return empty_graph(n);
  fail(ErrorCode::InvalidArgument, "no threshold-order experiment for family '" + family + "'");
}

std::string order_graph_name(const std::string& family, std::size_t n) {
  if (family == "grid2") return fmt::format("grid:2x{}", n);
  return fmt::format("{}:{}", family, n);
}

}  // namespace

OrdersResult experiment_threshold_orders(const OrdersOptions& options) {
  OrderStatistic stat = default_order_statistic(options.family);
  if (options.band) stat.band = options.band;
  if (options.method != "mc" && options.method != "exact")
    fail(ErrorCode::InvalidArgument, "method must be mc or exact");

  OrdersResult result;
  result.table.header = {"family", "graph", "n", "method", "p_hat", "ci_lo", "ci_hi", "gamma",
                         "statistic", "stat_lo", "stat_hi", "band_lo", "band_hi", "in_band",
                         "inconclusive", "samples", "seed"};
  for (std::size_t n : options.sizes) {
    const double scale = std::pow(static_cast<double>(n), stat.gamma);
    OrderRow row;
    row.graph = order_graph_name(options.family, n);
    row.n = n;
    std::string method;
    if (options.method == "exact") {
      method = "exact-bisection";
      ThresholdEstimate t;
      if (options.family == "path")
        t = threshold_bisect([n](double p) { return prob_path_closed_form(n, p); });
      else if (options.family == "complete")
        t = threshold_bisect([n](double p) { return prob_kn_closed_form(n, p); });
      else if (options.family == "nk1")
        t = threshold_exact_family({FamilyKind::Empty, {n}});
      else
        fail(ErrorCode::Precondition, "no closed form for family '" + options.family + "'");
      row.p_hat = t.p_hat;
      row.ci = {t.p_hat, t.p_hat};
    } else {
      method = "monte-carlo";
      McThresholdConfig cfg;
      cfg.budget = options.budget;
      cfg.seed = options.seed;
      cfg.stream = n;
      cfg.alpha = options.alpha;
      cfg.tol = options.rel_tol / scale;
      const auto t = threshold_mc(order_family_graph(options.family, n), cfg);
      row.p_hat = t.p_hat;
      row.ci = t.bracket;
      row.inconclusive = t.inconclusive;
      row.samples = t.samples_used;
    }
    if (stat.complement) {
      row.statistic = (1.0 - row.p_hat) * scale;
      row.statistic_ci = {(1.0 - row.ci.hi) * scale, (1.0 - row.ci.lo) * scale};
    } else {
      row.statistic = row.p_hat * scale;
      row.statistic_ci = {row.ci.lo * scale, row.ci.hi * scale};
    }
    row.in_band = !stat.band || stat.band->contains(row.statistic);
    result.all_in_band = result.all_in_band && row.in_band && !row.inconclusive;
    result.table.rows.push_back(
        {options.family, row.graph, std::to_string(n), method, format_number(row.p_hat),
         format_number(row.ci.lo), format_number(row.ci.hi), format_number(stat.gamma),
         format_number(row.statistic), format_number(row.statistic_ci.lo),
         format_number(row.statistic_ci.hi), stat.band ? format_number(stat.band->lo) : "",
         stat.band ? format_number(stat.band->hi) : "", row.in_band ? "true" : "false",
         row.inconclusive ? "true" : "false", std::to_string(row.samples),
         options.method == "mc" ? std::to_string(options.seed) : ""});
    result.rows.push_back(row);
  }
  return result;
}

CsvTable experiment_hypercube(const std::vector<std::size_t>& dims, const McExperimentOptions& options) {
  CsvTable table;
  table.header = {"graph", "d", "n", "p_hat", "ci_lo", "ci_hi", "exact", "inconclusive", "samples", "seed"};
  for (std::size_t d : dims) {
    const Graph g = hypercube_graph(d);
    McThresholdConfig cfg;
    cfg.budget = options.budget;
    cfg.seed = options.seed;
    cfg.stream = d;
    cfg.alpha = options.alpha;
    cfg.tol = options.tol;
    const auto t = threshold_mc(g, cfg);
    std::string exact;
    if (g.order() <= kDefaultEnumerationCap)
      exact = format_number(threshold_exact(zf_polynomial_exact(g)).p_hat);
    table.rows.push_back({fmt::format("hypercube:{}", d), std::to_string(d), std::to_string(g.order()),
                          format_number(t.p_hat), format_number(t.bracket.lo),
                          format_number(t.bracket.hi), exact, t.inconclusive ? "true" : "false",
                          std::to_string(t.samples_used), std::to_string(options.seed)});
  }
  return table;
}

CsvTable experiment_clique_paths(const std::vector<std::size_t>& ks, std::size_t path_len,
                                 const McExperimentOptions& options) {
  CsvTable table;
  table.header = {"graph", "k", "n", "p_hat", "ci_lo", "ci_hi", "p_over_sqrt_k_n",
                  "p_over_sqrt_klogk_n", "inconclusive", "samples", "seed"};
  for (std::size_t k : ks) {
    const Graph g = clique_paths(k, path_len);
    const double n = static_cast<double>(g.order());
    McThresholdConfig cfg;
    cfg.budget = options.budget;
    cfg.seed = options.seed;
    cfg.stream = k;
    cfg.alpha = options.alpha;
    cfg.tol = options.tol;
    const auto t = threshold_mc(g, cfg);
    const double kd = static_cast<double>(k);
    const double plain = t.p_hat / std::sqrt(kd / n);
    const std::string log_corrected =
        k >= 2 ? format_number(t.p_hat / std::sqrt(kd * std::log(kd) / n)) : "";
    table.rows.push_back({fmt::format("cliquepath:{},{}", k, path_len), std::to_string(k),
                          std::to_string(g.order()), format_number(t.p_hat),
                          format_number(t.bracket.lo), format_number(t.bracket.hi),
                          format_number(plain), log_corrected, t.inconclusive ? "true" : "false",
                          std::to_string(t.samples_used), std::to_string(options.seed)});
  }
  return table;
}

}  // namespace zfl
