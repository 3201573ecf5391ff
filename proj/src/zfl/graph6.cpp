#include "zfl/graph6.hpp"

#include <vector>

namespace zfl {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63)
    fail(ErrorCode::Parse, std::string("graph6: byte '") + c + "' outside 63..126");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) fail(ErrorCode::Parse, "graph6: empty line");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) fail(ErrorCode::Parse, "graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    if (n < 63) fail(ErrorCode::Parse, "graph6: non-canonical long size header");
    pos = 4;
  } else {
    if (text.size() < 8) fail(ErrorCode::Parse, "graph6: truncated size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    if (n < 258048) fail(ErrorCode::Parse, "graph6: non-canonical long size header");
    pos = 8;
  }
  if (n == 0) fail(ErrorCode::Parse, "graph6: graph with zero vertices");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) fail(ErrorCode::Parse, "graph6: truncated bit payload");
  if (text.size() - pos > bytes) fail(ErrorCode::Parse, "graph6: trailing bytes after payload");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  // Padding bits must be zero in a canonical encoding.
  if (bytes > 0 && bits % 6 != 0) {
    const int last = sextet(text[pos + bytes - 1]);
    if (last & ((1 << (6 - bits % 6)) - 1))
      fail(ErrorCode::Parse, "graph6: nonzero padding bits");
  }
  return make_graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace zfl
