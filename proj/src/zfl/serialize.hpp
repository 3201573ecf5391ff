#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zfl/forcing.hpp"
#include "zfl/polynomial.hpp"
#include "zfl/sampling.hpp"
#include "zfl/structure.hpp"
#include "zfl/threshold.hpp"
#include "zfl/verify.hpp"

namespace zfl {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const ForcingRecord& rec);
Json chains_to_json(const std::vector<std::vector<Vertex>>& chains);

/// {"n": n, "z": ["0", "2", ...]}; coefficients as decimal strings.
Json to_json(const ZfPolynomial& poly);
std::string polynomial_csv(const ZfPolynomial& poly);

Json to_json(const McEstimate& e);
std::string mc_csv_header();
std::string mc_csv_row(const McEstimate& e);

Json to_json(const ThresholdEstimate& t);

/// {"graph6": ..., "order": ..., "vertex_map": [...], "projected": [...]}.
Json to_json(const CoreProjection& proj, bool with_projection);
Json pendants_to_json(const Graph& g);

/// Wall time appears only when `with_timing` is set, so that repeated runs
/// print identical bytes.
Json to_json(const VerificationReport& report, bool with_timing);

}  // namespace zfl
