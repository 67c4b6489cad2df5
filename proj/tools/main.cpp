// cubeforge: Hilbert cubes in squares and AP-free sets.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource error.
// Data goes to stdout, diagnostics to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubeforge/bounds.hpp"
#include "cubeforge/growth.hpp"
#include "cubeforge/io.hpp"
#include "cubeforge/search.hpp"
#include "cubeforge/sumset.hpp"
#include "cubeforge/transform.hpp"

using namespace cubeforge;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Outcome {
  json payload;
  // Printed instead of the JSON payload when set.
  std::optional<std::string> text;
  int code = kOk;
};

// A JSON file path, or the JSON text itself when it starts with '{'.
HilbertCube load_cube(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return cube_from_json(json::parse(arg));
  return cube_from_json(load_json(arg));
}

std::string format_bounds_table(const BoundReport& r) {
  std::ostringstream out;
  char line[128];
  out << "N = " << r.n << " (natural log)\n";
  for (const auto& [name, value] : r.values) {
    std::snprintf(line, sizeof line, "%-15s %.6f\n", name.c_str(), value);
    out << line;
  }
  std::snprintf(line, sizeof line, "%-15s %.6f (c = %s)\n", "sharp_constant", r.sharp_constant,
                r.c_squares.to_string().c_str());
  out << line;
  if (r.below_validated_regime) out << "note: N < 10^6\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert cubes in the squares and in AP-free sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string record_path;
  app.add_option("--record", record_path, "Also write an experiment record (JSON) to this path");

  // verify
  std::string cube_arg, oracle_spec = "squares", quad_arg, out_path, csv_path, format = "table";
  u64 max_n = 0;
  bool zero = false;
  auto* verify = app.add_subcommand("verify", "Check that a cube lies in oracle ∩ [1, N]");
  verify->add_option("--cube", cube_arg, "Cube JSON file or inline JSON")->required();
  verify->add_option("--oracle", oracle_spec, "squares | quadratic:a,b,c | explicit:1,2,.. | greedy_apfree:k | file");
  verify->add_option("--max-n", max_n)->required();
  verify->add_flag("--zero", zero, "Admit 0 as an element");

  auto* expand_cmd = app.add_subcommand("expand", "Expand a cube into its layers");
  expand_cmd->add_option("--cube", cube_arg)->required();

  // search
  std::string mode_arg = "distinct";
  std::size_t min_dim = 1, max_results = 0;
  unsigned threads = 1;
  bool ap_prune = false, progress = false;
  u64 node_budget = 0;
  std::optional<std::size_t> mult_cap;
  auto* search = app.add_subcommand("search", "Exhaustive search for cubes inside oracle ∩ [1, N]");
  search->add_option("--oracle", oracle_spec);
  search->add_option("--max-n", max_n)->required();
  search->add_option("--mode", mode_arg)->check(CLI::IsMember({"distinct", "multiset"}));
  search->add_option("--min-dim", min_dim);
  search->add_option("--max-results", max_results, "0 lists every cube");
  search->add_option("--threads", threads);
  search->add_option("--multiplicity-cap", mult_cap);
  search->add_flag("--zero-base", zero, "Admit a0 = 0");
  search->add_flag("--ap-prune", ap_prune);
  search->add_option("--node-budget", node_budget, "0 is unlimited");
  search->add_flag("--progress", progress, "Per-branch progress on stderr");
  search->add_option("--out", out_path, "Also write the report here");

  // certify-growth
  unsigned k = 3;
  std::string c_arg;
  auto* certify = app.add_subcommand("certify-growth", "Layer-ratio certificate or AP witness");
  certify->add_option("--cube", cube_arg)->required();
  certify->add_option("--k", k)->required();
  certify->add_option("--c", c_arg, "Growth constant as p/q")->required();

  // check-4ap
  auto* check4 = app.add_subcommand("check-4ap", "Look for four squares in arithmetic progression");
  check4->add_option("--max-n", max_n)->required();
  check4->add_option("--quad", quad_arg, "Scan the image of a,b,c instead");
  check4->add_option("--threads", threads);
  check4->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  // sumset-sweep
  u64 c_max = 0;
  auto* sweep = app.add_subcommand("sumset-sweep", "min(|C|,|D|) against 8 ln N over two-element C");
  sweep->add_option("--oracle", oracle_spec);
  sweep->add_option("--c-max", c_max)->required();
  sweep->add_option("--max-n", max_n)->required();
  sweep->add_option("--threads", threads);
  sweep->add_option("--csv", csv_path, "Also write the CSV here");

  auto* split = app.add_subcommand("split", "Split a cube into C + D and run the Gyarmati check");
  split->add_option("--cube", cube_arg)->required();
  split->add_option("--max-n", max_n, "Defaults to the cube's largest element");

  auto* transform = app.add_subcommand("transform", "Map a cube in a quadratic image into the squares");
  transform->add_option("--cube", cube_arg)->required();
  transform->add_option("--quad", quad_arg, "a,b,c")->required();
  transform->add_option("--max-n", max_n);

  // bounds
  u64 bound_n = 0;
  std::optional<unsigned> bound_k;
  auto* bounds = app.add_subcommand("bounds", "Closed-form dimension bounds");
  bounds->add_option("--n", bound_n)->required();
  bounds->add_option("--k", bound_k);
  bounds->add_option("--c", c_arg, "p/q");
  bounds->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  std::optional<SetOracle> used_oracle;
  json config;
  try {
    if (verify->parsed()) {
      const HilbertCube cube = load_cube(cube_arg);
      const SetOracle oracle = parse_oracle_spec(oracle_spec, max_n);
      used_oracle = oracle;
      const CubeVerification v = verify_cube(cube, oracle, max_n, zero);
      outcome.payload = {{"cube", to_json(cube)}, {"max_n", max_n}, {"ok", v.ok},
                         {"offender", v.offender ? json(*v.offender) : json(nullptr)}};
      if (!v.ok) {
        std::cerr << "verify: " << cube.to_string() << " has " << *v.offender << " outside "
                  << oracle.describe() << " within [" << (zero ? 0 : 1) << ", " << max_n << "]\n";
        outcome.code = kFailed;
      }
    } else if (expand_cmd->parsed()) {
      const HilbertCube cube = load_cube(cube_arg);
      outcome.payload = to_json(expand(cube), cube);
    } else if (search->parsed()) {
      SearchConfig sc;
      sc.oracle = parse_oracle_spec(oracle_spec, max_n);
      sc.max_n = max_n;
      sc.mode = mode_arg == "multiset" ? SearchMode::Multiset : SearchMode::Distinct;
      sc.min_dim = min_dim;
      sc.max_results = max_results;
      sc.threads = threads;
      sc.allow_zero_base = zero;
      sc.ap_pruning = ap_prune;
      sc.multiplicity_cap = mult_cap;
      sc.node_budget = node_budget;
      if (progress) {
        sc.on_branch_done = [](const BranchProgress& p) {
          std::cerr << "branch a0=" << p.base << " done (" << p.completed << "/" << p.total
                    << "), best " << p.branch_best << ", nodes " << p.branch_nodes << "\n";
        };
      }
      used_oracle = sc.oracle;
      config = {{"max_n", max_n}, {"mode", mode_arg}, {"min_dim", min_dim}, {"max_results", max_results},
                {"zero_base", zero}, {"ap_prune", ap_prune}, {"node_budget", node_budget},
                {"multiplicity_cap", mult_cap ? json(*mult_cap) : json(nullptr)}};
      try {
        const SearchReport report = search_max_cubes(sc);
        outcome.payload = to_json(report, sc.oracle);
        if (report.critical) {
          std::cerr << "CRITICAL: best dimension " << *report.best_dimension << " exceeds the bound for this mode\n";
          outcome.code = kFailed;
        }
      } catch (const SearchBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        json partial = to_json(e.partial(), sc.oracle);
        partial["partial"] = true;
        partial["branches_done"] = e.branches_done();
        std::cout << canonical_dump(partial) << "\n";
        return kResource;
      }
      if (!out_path.empty()) persist_report(outcome.payload, out_path);
    } else if (certify->parsed()) {
      const HilbertCube cube = load_cube(cube_arg);
      const GrowthCertificate cert = certify_growth(cube, k, Rational::parse(c_arg));
      outcome.payload = to_json(cert);
      outcome.payload["cube"] = to_json(cube);
    } else if (check4->parsed()) {
      if (quad_arg.empty()) {
        const SquareApScan scan = scan_squares_4ap(max_n, threads);
        outcome.payload = to_json(scan);
        if (scan.four_term) {
          std::cerr << "four squares in AP found: start " << scan.four_term->start << ", difference "
                    << scan.four_term->difference << "\n";
          outcome.code = kFailed;
        } else if (format == "table") {
          std::ostringstream t;
          t << "none found (squares <= " << max_n << ", " << scan.three_term_count << " three-term APs seen)\n";
          outcome.text = t.str();
        }
      } else {
        const QuadraticForm f = QuadraticForm::parse(quad_arg);
        const auto hit = check_no_4ap_in_quadratic_image(f, max_n);
        outcome.payload = {{"quad", f.to_string()}, {"max_n", max_n},
                           {"four_term", hit ? json{{"in_image", to_json(hit->in_image)},
                                                    {"in_squares", to_json(hit->in_squares)},
                                                    {"squares_confirmed", hit->squares_confirmed}}
                                             : json(nullptr)}};
        if (hit) {
          std::cerr << "four-term AP in the image of " << f.to_string() << "\n";
          outcome.code = kFailed;
        } else if (format == "table") {
          outcome.text = "none found (image of " + f.to_string() + " <= " + std::to_string(max_n) + ")\n";
        }
      }
    } else if (sweep->parsed()) {
      const SetOracle oracle = parse_oracle_spec(oracle_spec, max_n);
      used_oracle = oracle;
      const auto rows = gyarmati_sweep(oracle, c_max, max_n, threads);
      const std::string csv = sweep_csv(rows);
      if (!csv_path.empty()) write_text(csv, csv_path);
      outcome.text = csv;
      std::size_t violations = 0;
      for (const SweepRow& row : rows) violations += row.satisfied ? 0 : 1;
      outcome.payload = {{"rows", rows.size()}, {"violations", violations}, {"csv_sha256", content_hash(json(csv))}};
      if (violations != 0) {
        std::cerr << violations << " rows exceed 8 ln N\n";
        outcome.code = kFailed;
      }
    } else if (split->parsed()) {
      const HilbertCube cube = load_cube(cube_arg);
      const CubeSplit s = split_cube(cube, max_n);
      const GyarmatiReport g = gyarmati_check(s.C, s.D, s.n);
      outcome.payload = to_json(s, g);
      outcome.payload["cube"] = to_json(cube);
      if (!g.contained) std::cerr << "note: C + D is not inside the squares\n";
    } else if (transform->parsed()) {
      const HilbertCube cube = load_cube(cube_arg);
      const QuadraticForm f = QuadraticForm::parse(quad_arg);
      const HilbertCube t = transform_cube(cube, f);
      outcome.payload = {{"quad", f.to_string()}, {"cube", to_json(cube)}, {"transformed", to_json(t)},
                         {"elements", expand_elements(t)}};
      if (max_n != 0) {
        const SetOracle image = SetOracle::quadratic(f);
        const CubeVerification in_image = verify_cube(cube, image, max_n);
        const u64 bound = transformed_bound(f, max_n);
        const CubeVerification in_squares = verify_cube(t, SetOracle::squares(), bound, true);
        outcome.payload["max_n"] = max_n;
        outcome.payload["bound"] = bound;
        outcome.payload["input_in_image"] = in_image.ok;
        outcome.payload["output_in_squares"] = in_squares.ok;
        if (in_image.ok && !in_squares.ok) {
          std::cerr << "transform: " << t.to_string() << " leaves the squares at " << *in_squares.offender << "\n";
          outcome.code = kFailed;
        }
      }
    } else if (bounds->parsed()) {
      std::optional<Rational> c;
      if (!c_arg.empty()) c = Rational::parse(c_arg);
      const BoundReport r = evaluate_bounds(bound_n, bound_k, c);
      outcome.payload = to_json(r);
      if (format == "table") outcome.text = format_bounds_table(r);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kResource;
  } catch (const ContainmentError& e) {
    std::cerr << "containment: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kFailed;
  }

  if (outcome.text) {
    std::cout << *outcome.text;
  } else {
    std::cout << canonical_dump(outcome.payload) << "\n";
  }

  if (!record_path.empty()) {
    ExperimentRecord rec;
    rec.command_line.assign(argv, argv + argc);
    rec.config = config;
    if (used_oracle) rec.oracle = to_json(*used_oracle);
    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    rec.outputs = outcome.payload;
    try {
      persist_report(to_json(rec), record_path);
    } catch (const IoError& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }
  return outcome.code;
}
