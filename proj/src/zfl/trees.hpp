#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zfl/graph.hpp"

namespace zfl {

inline constexpr std::size_t kMaxTreeOrder = 16;

/// Calls `visit` once per isomorphism class of free trees on n vertices
/// (1 <= n <= kMaxTreeOrder), using the Wright-Richmond-Odlyzko-McKay level
/// sequence successor. The path is always emitted first.
void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_free_trees(std::size_t n);

}  // namespace zfl
