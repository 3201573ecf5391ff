#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zfl/exit_codes.hpp"
#include "zfl/zfl.h"

namespace {

using Json = nlohmann::ordered_json;
using GraphPtr = std::unique_ptr<zfl_graph, decltype(&zfl_graph_free)>;
using PolyPtr = std::unique_ptr<zfl_poly, decltype(&zfl_poly_free)>;

struct ApiError {
  zfl_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(zfl_status status) {
  if (status != ZFL_OK) throw ApiError{status, zfl_last_error()};
}

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  zfl_string_free(s);
  return out;
}

std::string num(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string read_first_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open '" + path + "'"};
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  throw UsageError{"'" + path + "' contains no graph"};
}

// "N:a-b,c-d" with 0-based endpoints.
GraphPtr graph_from_edge_text(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError{"edge list must look like N:0-1,1-2"};
  const std::size_t n = std::stoul(text.substr(0, colon));
  std::vector<std::uint32_t> flat;
  std::stringstream body(text.substr(colon + 1));
  std::string pair;
  while (std::getline(body, pair, ',')) {
    if (pair.empty()) continue;
    const auto dash = pair.find('-');
    if (dash == std::string::npos) throw UsageError{"bad edge '" + pair + "'"};
    flat.push_back(static_cast<std::uint32_t>(std::stoul(pair.substr(0, dash))));
    flat.push_back(static_cast<std::uint32_t>(std::stoul(pair.substr(dash + 1))));
  }
  zfl_graph* g = nullptr;
  check(zfl_graph_from_edges(n, flat.data(), flat.size() / 2, &g));
  return GraphPtr(g, zfl_graph_free);
}

struct LoadedGraph {
  GraphPtr graph{nullptr, zfl_graph_free};
  std::optional<std::string> family;  // set when the input was a family descriptor
};

// One token is auto-detected (family descriptor, file, graph6 string); two
// tokens name the kind explicitly: family|graph6|file|edges VALUE.
LoadedGraph load_graph(const std::vector<std::string>& tokens) {
  LoadedGraph out;
  zfl_graph* g = nullptr;
  if (tokens.size() == 2) {
    const auto& kind = tokens[0];
    const auto& value = tokens[1];
    if (kind == "family") {
      check(zfl_graph_from_family(value.c_str(), &g));
      out.family = value;
    } else if (kind == "graph6") {
      check(zfl_graph_from_graph6(value.c_str(), &g));
    } else if (kind == "file") {
      check(zfl_graph_from_graph6(read_first_line(value).c_str(), &g));
    } else if (kind == "edges") {
      out.graph = graph_from_edge_text(value);
      return out;
    } else {
      throw UsageError{"input kind must be family, graph6, file or edges"};
    }
  } else if (tokens.size() == 1) {
    const auto& t = tokens[0];
    // ':' never occurs in graph6, so it marks a family descriptor.
    if (t.find(':') != std::string::npos && zfl_graph_from_family(t.c_str(), &g) == ZFL_OK) {
      out.family = t;
    } else if (std::filesystem::is_regular_file(t)) {
      check(zfl_graph_from_graph6(read_first_line(t).c_str(), &g));
    } else if (t.find(':') != std::string::npos) {
      check(zfl_graph_from_family(t.c_str(), &g));
    } else {
      check(zfl_graph_from_graph6(t.c_str(), &g));
    }
  } else {
    throw UsageError{"expected one input, or an input kind followed by a value"};
  }
  out.graph = GraphPtr(g, zfl_graph_free);
  return out;
}

std::vector<std::uint32_t> parse_set(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::uint32_t v = 0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc{} || r.ptr != item.data() + item.size())
      throw UsageError{"bad vertex index '" + item + "'"};
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

PolyPtr polynomial_for(const LoadedGraph& in, std::size_t max_n) {
  zfl_poly* poly = nullptr;
  if (in.family) check(zfl_poly_from_family(in.family->c_str(), max_n, &poly));
  else check(zfl_poly_compute(in.graph.get(), max_n, &poly));
  return PolyPtr(poly, zfl_poly_free);
}

Json threshold_json(const zfl_threshold_result& t) {
  Json out = {{"p_hat", t.p_hat},
              {"method", t.method == ZFL_THRESHOLD_MC ? "monte-carlo" : "exact-bisection"},
              {"tolerance", t.tolerance},
              {"bracket", {t.lo, t.hi}},
              {"evaluations", t.evaluations}};
  if (t.method == ZFL_THRESHOLD_MC) {
    out["seed"] = t.seed;
    out["samples"] = t.samples;
    out["inconclusive"] = t.inconclusive != 0;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-set zero forcing: polynomials, probabilities, thresholds and verification"};
  app.set_version_flag("--version", std::string(zfl_version()));
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::size_t threads = 0;
  std::string output_path;
  app.add_option("--threads", threads, "Worker threads (default: ZFL_THREADS or all cores)");
  app.add_option("-o,--output", output_path, "Write results to FILE instead of stdout");

  std::vector<std::string> input;
  const char* input_help = "Graph: family descriptor, graph6 string or file, or KIND VALUE";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, input_help)->required()->expected(1, 2);
  };

  // gen
  std::string gen_descriptor;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Print graph6 lines for a family, trees:N, trees:A..B or random:N:COUNT");
  gen->add_option("descriptor", gen_descriptor)->required();
  gen->add_option("--seed", seed, "Seed for random corpora");

  // zfs
  std::string zfs_mode;
  std::string set_text;
  auto* zfs = app.add_subcommand("zfs", "Zero forcing test, closure record or forcing chains");
  zfs->add_option("mode", zfs_mode, "check | closure | chains")
      ->required()
      ->check(CLI::IsMember({"check", "closure", "chains"}));
  zfs->add_option("--set", set_text, "Initial blue set, comma-separated 0-based indices")->required();
  add_input(zfs);

  // zfnum
  std::size_t zfnum_cap = 32;
  auto* zfnum = app.add_subcommand("zfnum", "Zero forcing number by exhaustive search");
  zfnum->add_option("--cap", zfnum_cap, "Largest order searched");
  add_input(zfnum);

  // poly
  std::size_t max_n = 24;
  bool rational = false;
  bool as_json = false;
  std::string at_text;
  auto* poly = app.add_subcommand("poly", "Zero forcing polynomial coefficients z(G;k)");
  poly->add_option("--max-n", max_n, "Enumeration cap (up to 30)");
  poly->add_option("--at", at_text, "Also evaluate Pr at these p (grid syntax)");
  poly->add_flag("--rational", rational, "Exact fractions for --at");
  poly->add_flag("--json", as_json, "JSON instead of CSV");
  add_input(poly);

  // prob
  std::string p_text;
  auto* prob = app.add_subcommand("prob", "Exact Pr[B_p is zero forcing]");
  prob->add_option("--p", p_text, "Comma-separated probabilities")->required();
  prob->add_option("--max-n", max_n, "Enumeration cap (up to 30)");
  prob->add_flag("--rational", rational, "Exact fractions");
  add_input(prob);

  // mc
  double p_value = 0.5;
  std::uint64_t samples = 100000;
  double alpha = 0.01;
  bool wilson = false;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of Pr with a confidence interval");
  mc->add_option("--p", p_value, "Inclusion probability")->required();
  mc->add_option("--samples", samples, "Number of samples");
  mc->add_option("--seed", seed, "Random seed")->required();
  mc->add_option("--alpha", alpha, "Miscoverage level of the interval");
  mc->add_flag("--wilson", wilson, "Wilson interval instead of Hoeffding");
  add_input(mc);

  // threshold
  std::string method = "exact";
  double tol = 0.0;
  std::uint64_t budget = 200000;
  auto* threshold = app.add_subcommand("threshold", "Threshold probability p(G) where Pr = 1/2");
  auto* threshold_seed = threshold->add_option("--seed", seed, "Random seed (required for mc)");
  threshold->add_option("--method", method, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
  threshold->add_option("--tol", tol, "exact: |Pr - 1/2| tolerance; mc: bracket width");
  threshold->add_option("--budget", budget, "mc: total samples");
  threshold->add_option("--alpha", alpha, "mc: per-probe miscoverage");
  threshold->add_option("--max-n", max_n, "Enumeration cap (up to 30)");
  threshold->add_flag("--wilson", wilson, "mc: Wilson intervals");
  add_input(threshold);

  // core2
  std::string core_set;
  auto* core2 = app.add_subcommand("core2", "2-core as graph6 with its vertex map");
  core2->add_option("--set", core_set, "Also project this blue set onto the core");
  add_input(core2);

  // pendants
  auto* pendants = app.add_subcommand("pendants", "Pendant paths, pendant trees and tree components");
  add_input(pendants);

  // verify
  std::string claim;
  std::string corpus;
  std::string grid_text;
  bool list_claims = false;
  bool timing = false;
  std::size_t max_listed = 50;
  auto* verify = app.add_subcommand("verify", "Check a claim over a corpus; exit 3 on counterexamples");
  verify->add_option("claim", claim, "Claim id (see --list)");
  verify->add_option("--corpus", corpus, "trees:N, trees:A..B, random:N:COUNT, graph6 file or family");
  verify->add_option("--grid", grid_text, "p grid, e.g. 1/20:19/20:1/20 (default j/20)");
  auto* verify_seed = verify->add_option("--seed", seed, "Seed for sampled claims and random corpora");
  verify->add_option("--max-n", max_n, "Enumeration cap (up to 30)");
  verify->add_option("--samples", samples, "Samples for core-projection");
  verify->add_option("--max-listed", max_listed, "Counterexamples listed in the report");
  verify->add_flag("--list", list_claims, "List claim ids and exit");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  // experiment
  std::string experiment_name;
  std::string family_name;
  std::string sizes;
  std::string summary_path;
  bool no_mc = false;
  std::size_t path_len = 8;
  samples = 100000;
  std::uint64_t experiment_samples = 10000;
  auto* experiment = app.add_subcommand("experiment", "Reproducible experiment runs emitting CSV");
  experiment->add_option("name", experiment_name, "figure2 | orders | hypercube | clique-paths")
      ->required()
      ->check(CLI::IsMember({"figure2", "orders", "hypercube", "clique-paths"}));
  experiment->add_option("--seed", seed, "Random seed")->required();
  experiment->add_option("--family", family_name, "orders: path, cycle, wheel, complete, grid2, nk1");
  experiment->add_option("--sizes", sizes, "Comma-separated sizes (orders), dimensions (hypercube) or k (clique-paths)");
  experiment->add_option("--grid", grid_text, "figure2: p grid");
  experiment->add_option("--method", method, "orders: mc | exact");
  experiment->add_option("--samples", experiment_samples, "figure2: samples per grid point");
  experiment->add_option("--budget", budget, "Threshold search budget per size");
  experiment->add_option("--alpha", alpha, "Miscoverage level");
  experiment->add_option("--tol", tol, "orders: relative bracket width; others: absolute");
  experiment->add_option("--path-len", path_len, "clique-paths: pendant path length");
  experiment->add_option("--summary", summary_path, "Write the summary JSON here instead of stderr");
  experiment->add_flag("--no-mc", no_mc, "figure2: exact curves only");
  experiment->add_flag("--wilson", wilson, "Wilson intervals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? zfl_cli::kExitOk : zfl_cli::kExitUsage;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return zfl_cli::kExitUsage;
    }
    out = &file_out;
  }

  try {
    if (threads) check(zfl_set_threads(threads));

    if (*gen) {
      char* text = nullptr;
      check(zfl_corpus_graph6(gen_descriptor.c_str(), seed, &text));
      *out << take(text);
    } else if (*zfs) {
      const auto g = load_graph(input);
      const auto set = parse_set(set_text);
      char* text = nullptr;
      check(zfl_closure_json(g.graph.get(), set.data(), set.size(), &text));
      const Json record = Json::parse(take(text));
      if (zfs_mode == "check") {
        *out << (record["zero_forcing"].get<bool>() ? "true" : "false") << '\n';
        Json body = record;
        body.erase("chains");
        *out << body.dump() << '\n';
      } else if (zfs_mode == "closure") {
        Json body = record;
        body.erase("chains");
        *out << body.dump() << '\n';
      } else {
        *out << record["chains"].dump() << '\n';
      }
    } else if (*zfnum) {
      const auto g = load_graph(input);
      std::size_t z = 0;
      check(zfl_zero_forcing_number(g.graph.get(), zfnum_cap, &z));
      *out << z << '\n';
    } else if (*poly) {
      const auto g = load_graph(input);
      const auto p = polynomial_for(g, max_n);
      char* text = nullptr;
      if (as_json) {
        check(zfl_poly_json(p.get(), &text));
        *out << take(text) << '\n';
      } else {
        check(zfl_poly_csv(p.get(), &text));
        *out << take(text);
      }
      if (!at_text.empty()) {
        *out << "p,probability\n";
        for (const auto& item : split_commas(at_text)) {
          if (rational) {
            check(zfl_poly_prob_rational(p.get(), item.c_str(), &text));
            *out << item << ',' << take(text) << '\n';
          } else {
            double v = 0;
            check(zfl_poly_prob(p.get(), std::stod(item), &v));
            *out << item << ',' << num(v) << '\n';
          }
        }
      }
    } else if (*prob) {
      const auto g = load_graph(input);
      const auto p = polynomial_for(g, max_n);
      *out << "p,probability\n";
      for (const auto& item : split_commas(p_text)) {
        if (rational) {
          char* text = nullptr;
          check(zfl_poly_prob_rational(p.get(), item.c_str(), &text));
          *out << item << ',' << take(text) << '\n';
        } else {
          double v = 0;
          check(zfl_poly_prob(p.get(), std::stod(item), &v));
          *out << item << ',' << num(v) << '\n';
        }
      }
    } else if (*mc) {
      const auto g = load_graph(input);
      zfl_mc_result r{};
      check(zfl_mc_prob(g.graph.get(), p_value, samples, seed, alpha, wilson, &r));
      *out << "p,estimate,ci_lo,ci_hi,samples,seed\n"
           << num(r.p) << ',' << num(r.estimate) << ',' << num(r.ci_lo) << ',' << num(r.ci_hi) << ','
           << r.samples << ',' << r.seed << '\n';
    } else if (*threshold) {
      const auto g = load_graph(input);
      zfl_threshold_result r{};
      if (method == "exact") {
        const double t = tol > 0 ? tol : 1e-9;
        if (g.family) {
          check(zfl_threshold_exact_family(g.family->c_str(), t, max_n, &r));
        } else {
          const auto p = polynomial_for(g, max_n);
          check(zfl_threshold_exact(p.get(), t, &r));
        }
      } else {
        if (threshold_seed->count() == 0) throw UsageError{"--seed is required for --method mc"};
        zfl_mc_threshold_options opts;
        zfl_mc_threshold_options_init(&opts);
        opts.budget = budget;
        opts.seed = seed;
        opts.alpha = alpha;
        opts.wilson = wilson;
        if (tol > 0) opts.tol = tol;
        check(zfl_threshold_mc(g.graph.get(), &opts, &r));
      }
      *out << threshold_json(r).dump(2) << '\n';
    } else if (*core2) {
      const auto g = load_graph(input);
      const bool with_set = core2->count("--set") > 0;
      const auto set = parse_set(core_set);
      char* text = nullptr;
      check(zfl_core2_json(g.graph.get(), set.data(), set.size(), with_set, &text));
      *out << Json::parse(take(text)).dump(2) << '\n';
    } else if (*pendants) {
      const auto g = load_graph(input);
      char* text = nullptr;
      check(zfl_pendants_json(g.graph.get(), &text));
      *out << Json::parse(take(text)).dump(2) << '\n';
    } else if (*verify) {
      if (list_claims) {
        char* text = nullptr;
        check(zfl_claims_json(&text));
        *out << take(text) << '\n';
        return zfl_cli::kExitOk;
      }
      if (claim.empty()) throw UsageError{"verify needs a claim id (see --list)"};
      if (corpus.empty()) throw UsageError{"verify needs --corpus"};
      if (claim == "core-projection" && verify_seed->count() == 0)
        throw UsageError{"--seed is required for the sampled claim core-projection"};
      zfl_verify_options opts;
      zfl_verify_options_init(&opts);
      opts.claim = claim.c_str();
      opts.corpus = corpus.c_str();
      opts.grid = grid_text.c_str();
      opts.seed = seed;
      opts.max_n = max_n;
      if (verify->count("--samples")) opts.samples = samples;
      opts.max_listed = max_listed;
      opts.timing = timing;
      char* report = nullptr;
      std::uint64_t counterexamples = 0;
      const zfl_status status = zfl_verify(&opts, &report, &counterexamples);
      check(status);
      *out << take(report) << '\n';
      return zfl_cli::exit_code_for(status, counterexamples);
    } else if (*experiment) {
      zfl_experiment_options opts;
      zfl_experiment_options_init(&opts);
      opts.name = experiment_name.c_str();
      opts.family = family_name.c_str();
      opts.sizes = sizes.c_str();
      opts.grid = grid_text.c_str();
      opts.method = experiment->count("--method") ? method.c_str() : "mc";
      opts.samples = experiment_samples;
      opts.budget = budget;
      opts.seed = seed;
      opts.alpha = alpha;
      opts.tol = tol;
      opts.wilson = wilson;
      opts.include_mc = !no_mc;
      opts.path_len = path_len;
      char* csv = nullptr;
      char* summary = nullptr;
      check(zfl_experiment(&opts, &csv, &summary));
      *out << take(csv);
      const std::string summary_text = take(summary);
      if (summary_path.empty()) {
        std::cerr << summary_text << '\n';
      } else {
        std::ofstream s(summary_path);
        s << summary_text << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return zfl_cli::kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error (" << zfl_status_name(e.status) << "): " << e.message << '\n';
    return zfl_cli::exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zfl_cli::kExitUsage;
  }
  return zfl_cli::kExitOk;
}
