#include "zfl/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "zfl/error.hpp"
#include "zfl/forcing.hpp"
#include "zfl/parallel.hpp"

namespace zfl {

std::string to_string(ThresholdMethod m) {
  return m == ThresholdMethod::ExactBisection ? "exact-bisection" : "monte-carlo";
}

ThresholdEstimate threshold_bisect(const std::function<double(double)>& f, double tol) {
  if (!(tol > 0.0 && tol < 0.5)) fail(ErrorCode::OutOfRange, "tolerance must lie in (0, 0.5)");
  ThresholdEstimate out;
  out.method = ThresholdMethod::ExactBisection;
  out.tolerance = tol;
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  // 200 halvings exhaust double precision long before the loop bound.
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double v = f(mid);
    ++out.evaluations;
    if (std::fabs(v - 0.5) <= tol) break;
    if (v < 0.5) lo = mid;
    else hi = mid;
    const double next = 0.5 * (lo + hi);
    if (next <= lo || next >= hi) break;
  }
  out.p_hat = mid;
  out.bracket = {lo, hi};
  return out;
}

ThresholdEstimate threshold_exact(const ZfPolynomial& poly, double tol) {
  return threshold_bisect([&](double p) { return prob_zfs_exact(poly, p); }, tol);
}

ThresholdEstimate threshold_exact_family(const FamilySpec& spec, double tol, std::size_t max_n) {
  const std::size_t n = spec.order();
  switch (spec.kind) {
    case FamilyKind::Path:
      return threshold_bisect([n](double p) { return prob_path_closed_form(n, p); }, tol);
    case FamilyKind::Complete:
      if (n >= 2)
        return threshold_bisect([n](double p) { return prob_kn_closed_form(n, p); }, tol);
      break;
    case FamilyKind::Empty: {
      ThresholdEstimate out;
      out.p_hat = std::pow(2.0, -1.0 / static_cast<double>(n));
      out.tolerance = 0.0;
      out.bracket = {out.p_hat, out.p_hat};
      return out;
    }
    default:
      break;
  }
  return threshold_exact(zf_polynomial_exact(family(spec), max_n), tol);
}

ThresholdEstimate threshold_mc(const Graph& g, const McThresholdConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) fail(ErrorCode::OutOfRange, "alpha must lie in (0, 1)");
  if (!(cfg.tol > 0.0)) fail(ErrorCode::OutOfRange, "tolerance must be positive");
  if (cfg.batch == 0) fail(ErrorCode::InvalidArgument, "batch must be at least 1");
  if (cfg.budget < cfg.batch)
    fail(ErrorCode::Precondition, "budget must cover at least one batch of " +
                                      std::to_string(cfg.batch) + " samples");
  const std::uint64_t probe_cap = std::max(cfg.batch, cfg.probe_cap ? cfg.probe_cap : cfg.budget / 4);
  const std::size_t n = g.order();
  constexpr std::size_t kChunks = 16;

  ThresholdEstimate out;
  out.method = ThresholdMethod::MonteCarlo;
  out.tolerance = cfg.tol;
  out.seed = cfg.seed;

  // Counts successes at p over samples [begin, end) of the shared stream.
  auto count_at = [&](double p, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hits(kChunks, 0);
    parallel_chunks(end - begin, kChunks, [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
      ForcingKernel kernel(g);
      std::vector<double> u;
      std::vector<std::uint8_t> blue(n);
      std::uint64_t count = 0;
      for (std::uint64_t i = begin + b; i < begin + e; ++i) {
        sample_uniforms(sample_key(cfg.seed, cfg.stream, i), n, u);
        for (std::size_t v = 0; v < n; ++v) blue[v] = u[v] < p;
        count += kernel.is_zfs(blue);
      }
      hits[c] = count;
    });
    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    return total;
  };

  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t used = 0;
  bool stopped_at_probe = false;
  double mid = 0.5;
  while (hi - lo > cfg.tol) {
    mid = 0.5 * (lo + hi);
    ++out.evaluations;
    std::uint64_t m = 0;
    std::uint64_t hits = 0;
    int side = 0;  // -1: Pr(mid) < 1/2, +1: Pr(mid) > 1/2
    while (side == 0 && m < probe_cap && used < cfg.budget) {
      const std::uint64_t take = std::min({cfg.batch, probe_cap - m, cfg.budget - used});
      hits += count_at(mid, m, m + take);
      m += take;
      used += take;
      const Interval ci = cfg.wilson ? wilson_interval(hits, m, cfg.alpha)
                                     : hoeffding_interval(hits, m, cfg.alpha);
      if (ci.hi < 0.5) side = -1;
      else if (ci.lo > 0.5) side = 1;
    }
    if (side < 0) {
      lo = mid;
    } else if (side > 0) {
      hi = mid;
    } else {
      if (m < probe_cap) out.inconclusive = true;  // total budget ran out first
      stopped_at_probe = true;
      break;
    }
  }
  out.p_hat = stopped_at_probe ? mid : 0.5 * (lo + hi);
  out.bracket = {lo, hi};
  out.samples_used = used;
  return out;
}

Interval threshold_bounds_kn(std::size_t n) {
  if (n < 5) fail(ErrorCode::Precondition, "clique threshold bounds need n >= 5");
  const double nd = static_cast<double>(n);
  return {1.0 - 5.0 / nd, 1.0 - 1.0 / (2.0 * nd)};
}

}  // namespace zfl
