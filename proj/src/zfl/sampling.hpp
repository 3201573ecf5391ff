#pragma once

#include <cstdint>
#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Key of sample `index` in `stream` under `seed`. Samples are addressed by
/// key, never by generator position, so results do not depend on how the
/// index range is split across workers.
constexpr std::uint64_t sample_key(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index) noexcept {
  return mix64(mix64(seed ^ mix64(stream)) + index);
}

/// Per-vertex uniforms in [0, 1) for one sample. Vertex v belongs to B_p
/// iff u[v] < p, which couples all p: B_p1 is a subset of B_p2 for p1 < p2.
void sample_uniforms(std::uint64_t key, std::size_t n, std::vector<double>& out);

struct SampleConfig {
  double p = 0.5;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  double alpha = 0.01;  // miscoverage; the interval has level 1 - alpha
  bool wilson = false;
  std::uint64_t stream = 0;
};

void validate(const SampleConfig& cfg);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Two-sided Hoeffding half-width sqrt(ln(2/alpha) / (2m)).
double hoeffding_half_width(std::uint64_t m, double alpha);
Interval hoeffding_interval(std::uint64_t successes, std::uint64_t m, double alpha);
Interval wilson_interval(std::uint64_t successes, std::uint64_t m, double alpha);

struct McEstimate {
  double p = 0.0;
  double estimate = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  Interval ci;
  std::uint64_t seed = 0;
};

/// One realization of B_p(G) for sample `index` of `stream`.
VertexSet sample_bp(const Graph& g, double p, std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t index);

McEstimate mc_prob(const Graph& g, const SampleConfig& cfg);

/// Estimates on an increasing p grid from one shared set of samples; each
/// sample is located by binary search over the grid, so the estimated curve
/// is nondecreasing. `cfg.p` is ignored.
std::vector<McEstimate> mc_curve(const Graph& g, const std::vector<double>& grid,
                                 const SampleConfig& cfg);

}  // namespace zfl
