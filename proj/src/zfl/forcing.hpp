#pragma once

#include <cstdint>
#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

struct Force {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Chronological list of forces produced from an initial blue set.
struct ForcingRecord {
  std::vector<Force> forces;
  VertexSet final_blue;
  VertexSet reversal;  // final-blue vertices that never force
};

/// Runs the color change rule to its fixpoint. Each step applies the force of
/// the lowest-index blue vertex that has exactly one white neighbor, so the
/// record is canonical for a given (g, b).
ForcingRecord closure(const Graph& g, const VertexSet& b);

/// Final blue set only; the order-free fast path.
VertexSet closure_set(const Graph& g, const VertexSet& b);

bool is_zfs(const Graph& g, const VertexSet& b);

/// Closure of `blue` for graphs with at most 64 vertices, one row per vertex.
inline std::uint64_t closure_mask(const std::uint64_t* rows, std::uint64_t blue,
                                  std::uint64_t full) noexcept {
  // `live` holds blue vertices that may still force; a vertex leaves it once
  // all its neighbors are blue.
  std::uint64_t live = blue;
  bool changed = true;
  while (changed && blue != full) {
    changed = false;
    std::uint64_t scan = live;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const std::uint64_t white = rows[v] & ~blue;
      if (white == 0) {
        live &= ~(std::uint64_t{1} << v);
      } else if ((white & (white - 1)) == 0) {
        blue |= white;
        live = (live & ~(std::uint64_t{1} << v)) | white;
        changed = true;
      }
    }
  }
  return blue;
}

/// Reusable scratch for repeated closures on one graph (Monte Carlo loops).
/// Not thread-safe; use one per worker.
class ForcingKernel {
 public:
  explicit ForcingKernel(const Graph& g);

  const Graph& graph() const noexcept { return *g_; }

  /// Closes `blue` in place (a byte per vertex, nonzero = blue) and returns
  /// the number of blue vertices afterwards.
  std::size_t close(std::vector<std::uint8_t>& blue);
  bool is_zfs(std::vector<std::uint8_t>& blue) { return close(blue) == g_->order(); }

 private:
  const Graph* g_;
  std::vector<std::uint64_t> small_rows_;  // set when order() <= 64
  std::vector<std::uint32_t> white_;
  std::vector<Vertex> queue_;
};

/// Minimum zero forcing set size by exhaustive search over increasing
/// cardinality. Throws `Error(CapExceeded)` when order() > cap (cap <= 64).
std::size_t zero_forcing_number(const Graph& g, std::size_t cap = 32);

/// Maximal forcing chains of a record: one chain per initially blue vertex,
/// following forcer -> forced links, so the chains partition final_blue.
std::vector<std::vector<Vertex>> maximal_forcing_chains(const ForcingRecord& rec);

}  // namespace zfl
