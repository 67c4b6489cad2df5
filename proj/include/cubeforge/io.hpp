#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubeforge/bounds.hpp"
#include "cubeforge/cube.hpp"
#include "cubeforge/growth.hpp"
#include "cubeforge/progression.hpp"
#include "cubeforge/search.hpp"
#include "cubeforge/set_oracle.hpp"
#include "cubeforge/sumset.hpp"
#include "cubeforge/transform.hpp"

namespace cubeforge {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.3.0";

// Canonical text: keys sorted, integers bare, reals with 15 significant digits
// (always carrying a '.' or exponent), non-finite reals as null.
std::string canonical_dump(const json& value, int indent = 2);

// Real rounded to 15 significant digits, the precision canonical_dump keeps.
double round_to_15_digits(double v);

json to_json(const HilbertCube& cube);
// Generators keep their order; identity comparisons canonicalize.
HilbertCube cube_from_json(const json& j);

json to_json(const SetOracle& oracle);
// greedy_apfree entries without a "limit" field are generated up to `default_limit`.
SetOracle oracle_from_json(const json& j, u64 default_limit);
// "squares" | "quadratic:a,b,c" | "explicit:1,2,3" | "greedy_apfree:k" | path to a JSON file.
SetOracle parse_oracle_spec(const std::string& spec, u64 default_limit);

json to_json(const APWitness& ap);
APWitness ap_from_json(const json& j);

json to_json(const CubeExpansion& e, const HilbertCube& cube);

json to_json(const GrowthCertificate& cert);
GrowthCertificate certificate_from_json(const json& j);

json to_json(const SearchReport& report, const SetOracle& oracle);
SearchReport search_report_from_json(const json& j);

json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const json& j);

json to_json(const SquareApScan& scan);
SquareApScan square_scan_from_json(const json& j);

json to_json(const CubeSplit& split, const GyarmatiReport& check);

// Columns: c_elements,d_size,n,bound_ln,satisfied. c_elements is space separated.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Lowercase hex SHA-256 of the canonical text.
std::string content_hash(const json& payload);

struct ExperimentRecord {
  std::vector<std::string> command_line;
  json config;
  std::string tool_version = kToolVersion;
  std::optional<json> oracle;
  double elapsed_seconds = 0;
  json outputs;

  // Hash of `outputs` only, so timing and thread count never move it.
  std::string hash() const { return content_hash(outputs); }
};

json to_json(const ExperimentRecord& record);

// Writes canonical JSON followed by a newline. IoError names the path on failure.
void persist_report(const json& report, const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

}  // namespace cubeforge
