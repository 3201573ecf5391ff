#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zfl/exact.hpp"
#include "zfl/sampling.hpp"

namespace zfl {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_csv() const;
};

/// Locale-independent shortest round-trip form of a double.
std::string format_number(double x);

// ---- Pr curves on 16 and 256 vertices ----

struct Figure2Options {
  std::vector<Rational> grid;  // empty means j/20, j = 1..19
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  double alpha = 0.01;
  bool wilson = false;
  bool include_mc = true;  // the 256-vertex Monte Carlo half
};

struct Crossing {
  std::string graph;
  std::size_t n = 0;
  std::string method;           // "exact" or "monte-carlo"
  double crossing = 0.0;        // root of Pr = 1/2 (exact) or interpolated (MC)
  Interval ci;                  // MC: grid points whose intervals exclude 1/2
  std::optional<double> bisection;  // exact: threshold_exact on the same polynomial
};

struct Figure2Result {
  CsvTable curves;     // graph,n,method,p,estimate,ci_lo,ci_hi,samples,seed
  CsvTable crossings;  // graph,n,method,crossing,ci_lo,ci_hi,bisection
  std::vector<Crossing> crossing_list;
  bool monotone_within_ci = true;
};

Figure2Result experiment_figure2(const Figure2Options& options);

// ---- Threshold orders across growing n ----

struct OrdersOptions {
  std::string family = "path";  // path, cycle, wheel, complete, grid2, nk1
  std::vector<std::size_t> sizes{64, 256, 1024};
  std::string method = "mc";    // "mc" or "exact" (closed-form families only)
  std::uint64_t budget = 200000;
  std::uint64_t seed = 1;
  double alpha = 0.01;
  double rel_tol = 0.02;  // bracket width relative to the expected scale n^-gamma
  std::optional<Interval> band;  // overrides default_band
};

struct OrderStatistic {
  double gamma;           // exponent of the expected order n^-gamma
  bool complement;        // statistic is (1 - p) n^gamma instead of p n^gamma
  std::optional<Interval> band;
};

/// Expected order and pinned acceptance band for a family.
OrderStatistic default_order_statistic(const std::string& family);

struct OrderRow {
  std::string graph;
  std::size_t n = 0;  // family size parameter
  double p_hat = 0.0;
  Interval ci;
  double statistic = 0.0;
  Interval statistic_ci;
  bool in_band = true;
  bool inconclusive = false;
  std::uint64_t samples = 0;
};

struct OrdersResult {
  CsvTable table;
  std::vector<OrderRow> rows;
  bool all_in_band = true;
};

OrdersResult experiment_threshold_orders(const OrdersOptions& options);

// ---- Open problems: hypercube constant and cliques with pendant paths ----

struct McExperimentOptions {
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
  double alpha = 0.01;
  double tol = 0.005;
};

/// Q_d thresholds for each d in `dims`.
CsvTable experiment_hypercube(const std::vector<std::size_t>& dims, const McExperimentOptions& options);

/// Clique K_k with a pendant path of `path_len` vertices on each clique
/// vertex; reports p_hat / sqrt(k/n) and the log-corrected
/// p_hat / sqrt(k log k / n), which is logged but not asserted.
CsvTable experiment_clique_paths(const std::vector<std::size_t>& ks, std::size_t path_len,
                                 const McExperimentOptions& options);

}  // namespace zfl
