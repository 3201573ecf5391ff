#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zfl/corpus.hpp"
#include "zfl/exact.hpp"
#include "zfl/polynomial.hpp"

namespace zfl {

struct Counterexample {
  std::string graph6;
  std::string at;   // "k=3", "p=1/20", "B={0,4}", possibly prefixed by a bound name
  std::string lhs;  // quantity claimed to be smaller
  std::string rhs;
};

struct VerificationReport {
  std::string claim;
  std::string corpus;
  std::uint64_t corpus_hash = 0;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<Rational> grid;
  std::uint64_t instances = 0;    // graphs (or samples) the claim applied to
  std::uint64_t skipped = 0;      // graphs outside the claim's hypotheses
  std::uint64_t comparisons = 0;  // individual inequalities checked
  std::uint64_t counterexample_total = 0;
  std::vector<Counterexample> counterexamples;  // first `max_listed` of them
  std::vector<std::pair<std::string, std::string>> notes;
  double wall_seconds = 0.0;

  bool pass() const { return counterexample_total == 0; }
  const std::string* note(std::string_view key) const;
};

struct VerifyOptions {
  std::vector<Rational> grid;  // empty means default_grid()
  std::uint64_t seed = 1;
  std::size_t max_n = kDefaultEnumerationCap;
  std::uint64_t samples = 100000;  // for sampled property claims
  std::size_t max_listed = 50;
};

struct ClaimInfo {
  std::string id;
  std::string summary;
};

const std::vector<ClaimInfo>& claims();
bool is_claim(std::string_view id);

/// Runs one claim over a corpus. Throws `Error(InvalidArgument)` for an
/// unknown claim and `Error(CapExceeded)` when a graph needing enumeration
/// is larger than `max_n`.
VerificationReport verify_claim(std::string_view claim, const Corpus& corpus,
                                const VerifyOptions& options = {});

/// Exact counterpart of zf_polynomial_exact without internal threading, for
/// callers that already parallelize over graphs.
ZfPolynomial zf_polynomial_serial(const Graph& g, std::size_t max_n = kDefaultEnumerationCap);

}  // namespace zfl
