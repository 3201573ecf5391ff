#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zfl/exact.hpp"

namespace zfl {

/// j/20 for j = 1..19.
std::vector<Rational> default_grid();

/// Comma-separated terms, each either a probability ("1/8", "0.3") or an
/// inclusive range "start:stop:step". Values stay exact, are sorted and
/// deduplicated, and must lie in [0, 1].
std::vector<Rational> parse_grid(std::string_view text);

std::vector<double> grid_to_double(const std::vector<Rational>& grid);
std::string grid_to_string(const std::vector<Rational>& grid);

}  // namespace zfl
