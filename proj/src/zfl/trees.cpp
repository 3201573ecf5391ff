#include "zfl/trees.hpp"

#include <algorithm>
#include <optional>

#include "zfl/error.hpp"

namespace zfl {
namespace {

using Layout = std::vector<int>;  // level sequence, root at level 0

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = {}) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Left subtree of the root (levels shifted up by one) and the remainder.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_tree(const Layout& candidate) {
  const auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    const auto split = split_tree(*next);
    const int new_left_height = *std::max_element(split.first.begin(), split.first.end());
    const std::size_t suffix = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < suffix; ++i)
      (*next)[next->size() - suffix + i] = static_cast<int>(i) + 1;
  }
  return next;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return make_graph(layout.size(), edges);
}

}  // namespace

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "trees need n >= 1");
  if (n > kMaxTreeOrder)
    fail(ErrorCode::CapExceeded, "free-tree enumeration capped at " +
                                     std::to_string(kMaxTreeOrder) + " vertices");
  if (n == 1) {
    visit(make_graph(1, {}));
    return;
  }
  // Start from the path rooted at its centre.
  Layout layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<int>(i));
  std::optional<Layout> current = layout;
  while (current) {
    current = next_tree(*current);
    if (!current) break;
    visit(layout_to_graph(*current));
    current = next_rooted_tree(*current);
  }
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

}  // namespace zfl
