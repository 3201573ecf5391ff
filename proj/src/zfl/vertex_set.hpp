#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zfl/error.hpp"

namespace zfl {

using Vertex = std::uint32_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

/// Dense bit vector over the vertex indices `0..universe()-1`.
///
/// Bits at positions `>= universe()` are always zero, so word-level
/// comparisons and popcounts need no masking.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : n_(universe), words_(words_for(universe), 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet from_indices(std::size_t universe,
                                std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) {
      if (v >= universe)
        fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) +
                                        " outside graph of order " +
                                        std::to_string(universe));
      s.set(v);
    }
    return s;
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool test(Vertex v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
  }
  void set(Vertex v) noexcept {
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }
  void reset(Vertex v) noexcept {
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const noexcept { return count() == n_; }

  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  // Only meaningful for universes of at most 64 vertices.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Vertex>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> indices() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() noexcept {
    if (n_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zfl
