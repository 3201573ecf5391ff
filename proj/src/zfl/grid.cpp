#include "zfl/grid.hpp"

#include <algorithm>

namespace zfl {

std::vector<Rational> default_grid() {
  std::vector<Rational> grid;
  for (int j = 1; j <= 19; ++j) grid.emplace_back(j, 20);
  return grid;
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view term = text.substr(pos, comma - pos);
    if (term.empty()) fail(ErrorCode::Parse, "empty term in p grid");
    const std::size_t c1 = term.find(':');
    if (c1 == std::string_view::npos) {
      grid.push_back(parse_rational(term));
    } else {
      const std::size_t c2 = term.find(':', c1 + 1);
      if (c2 == std::string_view::npos)
        fail(ErrorCode::Parse, "range must be start:stop:step");
      const Rational start = parse_rational(term.substr(0, c1));
      const Rational stop = parse_rational(term.substr(c1 + 1, c2 - c1 - 1));
      const Rational step = parse_rational(term.substr(c2 + 1));
      if (step <= 0) fail(ErrorCode::Parse, "range step must be positive");
      if ((stop - start) / step > 100000) fail(ErrorCode::CapExceeded, "p grid too large");
      for (Rational p = start; p <= stop; p += step) grid.push_back(p);
    }
    pos = comma + 1;
  }
  for (const auto& p : grid)
    if (p < 0 || p > 1) fail(ErrorCode::OutOfRange, "grid value " + to_string(p) + " outside [0, 1]");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<double> grid_to_double(const std::vector<Rational>& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (const auto& p : grid) out.push_back(to_double(p));
  return out;
}

std::string grid_to_string(const std::vector<Rational>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ',';
    out += to_string(grid[i]);
  }
  return out;
}

}  // namespace zfl
