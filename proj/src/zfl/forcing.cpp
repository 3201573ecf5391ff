#include "zfl/forcing.hpp"

#include <algorithm>

namespace zfl {
namespace {

std::vector<std::uint64_t> single_word_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Number of white neighbors of v, and the lowest one.
std::pair<std::size_t, Vertex> white_neighbors(const Graph& g, const VertexSet& blue,
                                               Vertex v) {
  const auto row = g.row(v);
  const auto words = blue.words();
  std::size_t count = 0;
  Vertex first = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::uint64_t white = row[i] & ~words[i];
    if (white && count == 0)
      first = static_cast<Vertex>(i * kWordBits + std::countr_zero(white));
    count += static_cast<std::size_t>(std::popcount(white));
    if (count > 1) break;
  }
  return {count, first};
}

}  // namespace

ForcingRecord closure(const Graph& g, const VertexSet& b) {
  if (b.universe() != g.order())
    fail(ErrorCode::InvalidArgument, "vertex set universe does not match graph order");
  ForcingRecord rec;
  VertexSet blue = b;
  VertexSet forced_out(g.order());
  // A forcer never forces twice, so at most n - |b| steps, each a scan from 0.
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!blue.test(v) || forced_out.test(v)) continue;
      auto [count, target] = white_neighbors(g, blue, v);
      if (count != 1) continue;
      blue.set(target);
      forced_out.set(v);
      rec.forces.push_back({v, target});
      progress = true;
      break;
    }
  }
  rec.reversal = blue - forced_out;
  rec.final_blue = std::move(blue);
  return rec;
}

ForcingKernel::ForcingKernel(const Graph& g) : g_(&g), white_(g.order()) {
  if (g.order() <= 64) small_rows_ = single_word_rows(g);
  queue_.reserve(g.order());
}

std::size_t ForcingKernel::close(std::vector<std::uint8_t>& blue) {
  const Graph& g = *g_;
  const std::size_t n = g.order();
  if (n <= 64) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (blue[v]) mask |= std::uint64_t{1} << v;
    mask = closure_mask(small_rows_.data(), mask, full_mask(n));
    for (std::size_t v = 0; v < n; ++v) blue[v] = (mask >> v) & 1u;
    return static_cast<std::size_t>(std::popcount(mask));
  }

  // white_[v] = number of white neighbors of v. Worklist of blue vertices
  // whose count dropped to one; O(n + m) per closure.
  std::size_t blue_count = 0;
  for (Vertex v = 0; v < n; ++v) white_[v] = static_cast<std::uint32_t>(g.degree(v));
  for (Vertex v = 0; v < n; ++v) {
    if (!blue[v]) continue;
    ++blue_count;
    for (Vertex w : g.neighbors(v)) --white_[w];
  }
  queue_.clear();
  for (Vertex v = 0; v < n; ++v)
    if (blue[v] && white_[v] == 1) queue_.push_back(v);

  while (!queue_.empty()) {
    const Vertex v = queue_.back();
    queue_.pop_back();
    if (white_[v] != 1) continue;
    Vertex target = v;
    for (Vertex w : g.neighbors(v))
      if (!blue[w]) {
        target = w;
        break;
      }
    blue[target] = 1;
    ++blue_count;
    for (Vertex w : g.neighbors(target)) {
      if (--white_[w] == 1 && blue[w]) queue_.push_back(w);
    }
    if (white_[target] == 1) queue_.push_back(target);
  }
  return blue_count;
}

VertexSet closure_set(const Graph& g, const VertexSet& b) {
  if (b.universe() != g.order())
    fail(ErrorCode::InvalidArgument, "vertex set universe does not match graph order");
  const std::size_t n = g.order();
  if (n <= 64) {
    auto rows = single_word_rows(g);
    return VertexSet::from_mask(n, closure_mask(rows.data(), b.mask(), full_mask(n)));
  }
  std::vector<std::uint8_t> blue(n, 0);
  b.for_each([&](Vertex v) { blue[v] = 1; });
  ForcingKernel kernel(g);
  kernel.close(blue);
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v)
    if (blue[v]) out.set(v);
  return out;
}

bool is_zfs(const Graph& g, const VertexSet& b) { return closure_set(g, b).is_full(); }

std::size_t zero_forcing_number(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n == 0) fail(ErrorCode::InvalidArgument, "zero forcing number of the empty graph");
  if (cap > 64) cap = 64;
  if (n > cap)
    fail(ErrorCode::CapExceeded, "zero forcing number search capped at " +
                                     std::to_string(cap) + " vertices, graph has " +
                                     std::to_string(n));
  const auto rows = single_word_rows(g);
  const std::uint64_t full = full_mask(n);
  // Every (n-1)-subset forces when no vertex is isolated.
  const std::size_t last = has_isolated_vertex(g) ? n : n - 1;
  for (std::size_t k = 0; k < last; ++k) {
    if (k == 0) {
      if (closure_mask(rows.data(), 0, full) == full) return 0;
      continue;
    }
    // Gosper's hack over all k-subsets of n bits.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (true) {
      if (closure_mask(rows.data(), s, full) == full) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0 || (n < 64 && (r >> n) != 0)) break;
      s = (((r ^ s) >> 2) / c) | r;
      if (n < 64 && (s >> n) != 0) break;
    }
  }
  return last;
}

std::vector<std::vector<Vertex>> maximal_forcing_chains(const ForcingRecord& rec) {
  const std::size_t n = rec.final_blue.universe();
  constexpr Vertex none = static_cast<Vertex>(-1);
  std::vector<Vertex> next(n, none);
  VertexSet was_forced(n);
  for (const auto& f : rec.forces) {
    next[f.forcer] = f.forced;
    was_forced.set(f.forced);
  }
  std::vector<std::vector<Vertex>> chains;
  rec.final_blue.for_each([&](Vertex start) {
    if (was_forced.test(start)) return;
    std::vector<Vertex> chain{start};
    for (Vertex v = next[start]; v != none; v = next[v]) chain.push_back(v);
    chains.push_back(std::move(chain));
  });
  return chains;
}

}  // namespace zfl
