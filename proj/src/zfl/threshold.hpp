#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "zfl/families.hpp"
#include "zfl/polynomial.hpp"
#include "zfl/sampling.hpp"

namespace zfl {

enum class ThresholdMethod { ExactBisection, MonteCarlo };
std::string to_string(ThresholdMethod m);

struct ThresholdEstimate {
  double p_hat = 0.0;
  ThresholdMethod method = ThresholdMethod::ExactBisection;
  double tolerance = 0.0;  // on |Pr(p_hat) - 1/2| (exact) or bracket width (MC)
  Interval bracket;        // exact: final bisection bracket; MC: confidence bracket
  std::optional<std::uint64_t> seed;
  std::uint64_t evaluations = 0;  // function evaluations (exact) or probes (MC)
  std::uint64_t samples_used = 0;
  bool inconclusive = false;
};

inline constexpr double kDefaultExactTolerance = 1e-9;

/// Bisection on an increasing f with f(0) = 0 and f(1) = 1 until
/// |f(p) - 1/2| <= tol.
ThresholdEstimate threshold_bisect(const std::function<double(double)>& f,
                                   double tol = kDefaultExactTolerance);

ThresholdEstimate threshold_exact(const ZfPolynomial& poly, double tol = kDefaultExactTolerance);

/// Uses the path, clique and empty-graph closed forms where they exist and
/// exact enumeration (up to `max_n`) for every other family.
ThresholdEstimate threshold_exact_family(const FamilySpec& spec,
                                         double tol = kDefaultExactTolerance,
                                         std::size_t max_n = kDefaultEnumerationCap);

struct McThresholdConfig {
  std::uint64_t budget = 200000;  // total closures across all probes
  std::uint64_t probe_cap = 0;    // 0 means budget / 4
  std::uint64_t batch = 256;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  double tol = 1e-3;    // stop once the bracket is this narrow
  double alpha = 0.01;  // per-probe miscoverage
  bool wilson = false;
};

/// Stochastic bisection. Each probe draws batches from one shared, coupled
/// sample stream until its interval for Pr(p) excludes 1/2. A probe that hits
/// its cap while still straddling 1/2 ends the search with p_hat at that
/// probe; running out of total budget sets `inconclusive`.
ThresholdEstimate threshold_mc(const Graph& g, const McThresholdConfig& cfg);

/// (1 - 5/n, 1 - 1/(2n)), which contains p(K_n) for n >= 5.
Interval threshold_bounds_kn(std::size_t n);

}  // namespace zfl
