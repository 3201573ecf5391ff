#include "zfl/corpus.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "zfl/error.hpp"
#include "zfl/families.hpp"
#include "zfl/graph6.hpp"
#include "zfl/sampling.hpp"
#include "zfl/trees.hpp"

namespace zfl {
namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    fail(ErrorCode::Parse, fmt::format("bad {} '{}'", what, text));
  return value;
}

void rehash(Corpus& c) {
  std::uint64_t h = fnv1a("");
  for (const auto& g : c.graphs) {
    h = fnv1a(graph6_encode(g), h);
    h = fnv1a("\n", h);
  }
  c.hash = h;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) { return fmt::format("{:016x}", h); }

Corpus load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open corpus file '" + path + "'");
  Corpus c;
  c.descriptor = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      c.graphs.push_back(graph6_decode(line));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, fmt::format("{}:{}: {}", path, line_no, e.what()));
    }
  }
  rehash(c);
  return c;
}

Corpus tree_corpus(std::size_t lo, std::size_t hi) {
  if (lo == 0 || lo > hi) fail(ErrorCode::InvalidArgument, "tree corpus needs 1 <= lo <= hi");
  Corpus c;
  c.descriptor = lo == hi ? fmt::format("trees:{}", lo) : fmt::format("trees:{}..{}", lo, hi);
  for (std::size_t n = lo; n <= hi; ++n)
    for_each_free_tree(n, [&](const Graph& t) { c.graphs.push_back(t); });
  rehash(c);
  return c;
}

Corpus random_corpus(std::size_t max_n, std::size_t count, std::uint64_t seed) {
  if (max_n < 2) fail(ErrorCode::InvalidArgument, "random corpus needs max_n >= 2");
  if (max_n > 64) fail(ErrorCode::CapExceeded, "random corpus capped at 64 vertices");
  Corpus c;
  c.descriptor = fmt::format("random:{}:{}", max_n, count);
  std::vector<double> u;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t key = sample_key(seed, 0x636f72707573ULL, i);
    const std::size_t n = 2 + mix64(key) % (max_n - 1);
    // Edge probability between 1/n and 0.6: sparse draws give forests with
    // a few cycles, dense draws give large cores.
    const double shape = static_cast<double>(mix64(key ^ 1) >> 11) * 0x1.0p-53;
    const double q = 1.0 / static_cast<double>(n) + shape * (0.6 - 1.0 / static_cast<double>(n));
    sample_uniforms(mix64(key ^ 2), n * (n - 1) / 2, u);
    std::vector<Edge> edges;
    std::size_t slot = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (u[slot++] < q) edges.emplace_back(a, b);
    c.graphs.push_back(make_graph(n, edges));
  }
  rehash(c);
  return c;
}

Corpus open_corpus(std::string_view descriptor, std::uint64_t seed) {
  if (descriptor.starts_with("trees:")) {
    const auto body = descriptor.substr(6);
    const auto dots = body.find("..");
    if (dots == std::string_view::npos) {
      const auto n = parse_count(body, "tree order");
      return tree_corpus(n, n);
    }
    return tree_corpus(parse_count(body.substr(0, dots), "tree order"),
                       parse_count(body.substr(dots + 2), "tree order"));
  }
  if (descriptor.starts_with("random:")) {
    const auto body = descriptor.substr(7);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      fail(ErrorCode::Parse, "random corpus descriptor is random:MAX_N:COUNT");
    return random_corpus(parse_count(body.substr(0, colon), "vertex bound"),
                         parse_count(body.substr(colon + 1), "graph count"), seed);
  }
  const std::string path(descriptor);
  if (std::filesystem::is_regular_file(path)) return load_graph6_file(path);
  if (auto spec = try_parse_family(descriptor)) {
    Corpus c;
    c.descriptor = spec->to_string();
    c.graphs.push_back(family(*spec));
    rehash(c);
    return c;
  }
  fail(ErrorCode::Io, "corpus '" + path + "' is neither a file nor a known descriptor");
}

}  // namespace zfl
