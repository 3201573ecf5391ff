#include "zfl/sampling.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "zfl/error.hpp"
#include "zfl/forcing.hpp"
#include "zfl/parallel.hpp"

namespace zfl {
namespace {

// Fixed so that per-chunk partial sums, and therefore all outputs, are the
// same for every worker count.
constexpr std::size_t kSampleChunks = 64;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::OutOfRange, "alpha must lie in (0, 1)");
}

}  // namespace

void sample_uniforms(std::uint64_t key, std::size_t n, std::vector<double>& out) {
  out.resize(n);
  std::uint64_t state = key;
  for (std::size_t v = 0; v < n; ++v) {
    state += 0x9e3779b97f4a7c15ULL;
    out[v] = static_cast<double>(mix64(state) >> 11) * 0x1.0p-53;
  }
}

void validate(const SampleConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) fail(ErrorCode::OutOfRange, "p must lie in [0, 1]");
  if (cfg.samples == 0) fail(ErrorCode::InvalidArgument, "samples must be at least 1");
  check_alpha(cfg.alpha);
}

double hoeffding_half_width(std::uint64_t m, double alpha) {
  check_alpha(alpha);
  if (m == 0) return 1.0;
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(m)));
}

Interval hoeffding_interval(std::uint64_t successes, std::uint64_t m, double alpha) {
  if (m == 0) return {0.0, 1.0};
  const double est = static_cast<double>(successes) / static_cast<double>(m);
  const double h = hoeffding_half_width(m, alpha);
  return {std::max(0.0, est - h), std::min(1.0, est + h)};
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t m, double alpha) {
  check_alpha(alpha);
  if (m == 0) return {0.0, 1.0};
  const double z = boost::math::quantile(boost::math::normal(), 1.0 - alpha / 2.0);
  const double mm = static_cast<double>(m);
  const double phat = static_cast<double>(successes) / mm;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2.0 * mm)) / (1.0 + z2 / mm);
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / mm + z2 / (4.0 * mm * mm)) / (1.0 + z2 / mm);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

VertexSet sample_bp(const Graph& g, double p, std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t index) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::OutOfRange, "p must lie in [0, 1]");
  std::vector<double> u;
  sample_uniforms(sample_key(seed, stream, index), g.order(), u);
  VertexSet b(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (u[v] < p) b.set(v);
  return b;
}

McEstimate mc_prob(const Graph& g, const SampleConfig& cfg) {
  validate(cfg);
  std::vector<std::uint64_t> hits(kSampleChunks, 0);
  parallel_chunks(cfg.samples, kSampleChunks,
                  [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
                    ForcingKernel kernel(g);
                    std::vector<double> u;
                    std::vector<std::uint8_t> blue(g.order());
                    std::uint64_t count = 0;
                    for (std::uint64_t i = begin; i < end; ++i) {
                      sample_uniforms(sample_key(cfg.seed, cfg.stream, i), g.order(), u);
                      for (std::size_t v = 0; v < u.size(); ++v) blue[v] = u[v] < cfg.p;
                      count += kernel.is_zfs(blue);
                    }
                    hits[c] = count;
                  });
  McEstimate out;
  out.p = cfg.p;
  out.samples = cfg.samples;
  for (auto h : hits) out.successes += h;
  out.estimate = static_cast<double>(out.successes) / static_cast<double>(cfg.samples);
  out.ci = cfg.wilson ? wilson_interval(out.successes, cfg.samples, cfg.alpha)
                      : hoeffding_interval(out.successes, cfg.samples, cfg.alpha);
  out.seed = cfg.seed;
  return out;
}

std::vector<McEstimate> mc_curve(const Graph& g, const std::vector<double>& grid,
                                 const SampleConfig& cfg) {
  if (cfg.samples == 0) fail(ErrorCode::InvalidArgument, "samples must be at least 1");
  check_alpha(cfg.alpha);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!(grid[j] >= 0.0 && grid[j] <= 1.0)) fail(ErrorCode::OutOfRange, "p must lie in [0, 1]");
    if (j > 0 && !(grid[j - 1] < grid[j]))
      fail(ErrorCode::InvalidArgument, "p grid must be strictly increasing");
  }
  const std::size_t steps = grid.size();
  // first_hit[c][j]: samples of chunk c whose lowest zero forcing grid index is j;
  // index `steps` means not zero forcing anywhere on the grid.
  std::vector<std::vector<std::uint64_t>> first_hit(kSampleChunks,
                                                    std::vector<std::uint64_t>(steps + 1, 0));
  parallel_chunks(cfg.samples, kSampleChunks,
                  [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
                    ForcingKernel kernel(g);
                    std::vector<double> u;
                    std::vector<std::uint8_t> blue(g.order());
                    auto forcing_at = [&](std::size_t j) {
                      for (std::size_t v = 0; v < u.size(); ++v) blue[v] = u[v] < grid[j];
                      return kernel.is_zfs(blue);
                    };
                    for (std::uint64_t i = begin; i < end; ++i) {
                      sample_uniforms(sample_key(cfg.seed, cfg.stream, i), g.order(), u);
                      std::size_t lo = 0;
                      std::size_t hi = steps;
                      while (lo < hi) {
                        const std::size_t mid = (lo + hi) / 2;
                        if (forcing_at(mid)) hi = mid;
                        else lo = mid + 1;
                      }
                      ++first_hit[c][lo];
                    }
                  });
  std::vector<McEstimate> out(steps);
  std::uint64_t cumulative = 0;
  for (std::size_t j = 0; j < steps; ++j) {
    for (std::size_t c = 0; c < kSampleChunks; ++c) cumulative += first_hit[c][j];
    McEstimate& e = out[j];
    e.p = grid[j];
    e.samples = cfg.samples;
    e.successes = cumulative;
    e.estimate = static_cast<double>(cumulative) / static_cast<double>(cfg.samples);
    e.ci = cfg.wilson ? wilson_interval(cumulative, cfg.samples, cfg.alpha)
                      : hoeffding_interval(cumulative, cfg.samples, cfg.alpha);
    e.seed = cfg.seed;
  }
  return out;
}

}  // namespace zfl
