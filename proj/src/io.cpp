#include "cubeforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace cubeforge {

namespace {

void dump_real(double v, std::string& out) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string text(buf);
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  out += text;
}

void dump(const json& value, int indent, int level, std::string& out) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {  // std::map: keys sorted
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump(it.value(), indent, level + 1, out);
      }
      newline(level);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; they are mostly element lists.
      const bool flat = std::none_of(value.begin(), value.end(),
                                     [](const json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const json& e : value) {
        if (!first) out += flat ? (indent < 0 ? "," : ", ") : ",";
        first = false;
        if (!flat) newline(level + 1);
        dump(e, indent, level + 1, out);
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      dump_real(value.get<double>(), out);
      return;
    default:
      out += value.dump();
      return;
  }
}

json real(double v) { return std::isfinite(v) ? json(round_to_15_digits(v)) : json(nullptr); }

template <typename T>
json optional_real(const std::optional<T>& v) {
  return v ? real(*v) : json(nullptr);
}

std::optional<double> read_optional_real(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

const char* mode_name(SearchMode m) { return m == SearchMode::Distinct ? "distinct" : "multiset"; }

SearchMode mode_from_name(const std::string& s) {
  if (s == "distinct") return SearchMode::Distinct;
  if (s == "multiset") return SearchMode::Multiset;
  throw DomainError("unknown search mode '" + s + "'");
}

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') throw DomainError("malformed integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

double round_to_15_digits(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string canonical_dump(const json& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  return out;
}

// --- cubes, oracles, witnesses -----------------------------------------

json to_json(const HilbertCube& cube) {
  return json{{"a0", cube.base()}, {"generators", std::vector<u64>(cube.generators().begin(), cube.generators().end())}};
}

HilbertCube cube_from_json(const json& j) {
  try {
    return HilbertCube(j.at("a0").get<u64>(), j.at("generators").get<std::vector<u64>>());
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed cube JSON: ") + e.what());
  }
}

json to_json(const SetOracle& oracle) {
  switch (oracle.kind()) {
    case OracleKind::Squares:
      return json{{"kind", "squares"}};
    case OracleKind::Quadratic: {
      json j{{"kind", "quadratic"}, {"a", oracle.form().a}, {"b", oracle.form().b}, {"c", oracle.form().c}};
      if (oracle.min_argument() != 1) j["min_argument"] = oracle.min_argument();
      return j;
    }
    case OracleKind::Explicit:
      return json{{"kind", "explicit"}, {"elements", oracle.stored_elements()}};
    case OracleKind::GreedyApFree:
      return json{{"kind", "greedy_apfree"}, {"k", oracle.ap_k()}, {"limit", oracle.window()}};
  }
  return json{};
}

SetOracle oracle_from_json(const json& j, u64 default_limit) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "squares") return SetOracle::squares();
    if (kind == "quadratic") {
      const QuadraticForm f{j.at("a").get<i64>(), j.at("b").get<i64>(), j.at("c").get<i64>()};
      return SetOracle::quadratic(f, j.value("min_argument", u64{1}));
    }
    if (kind == "explicit") return SetOracle::explicit_set(j.at("elements").get<IntSet>());
    if (kind == "greedy_apfree") {
      return SetOracle::greedy_apfree(j.at("k").get<unsigned>(), j.value("limit", default_limit));
    }
    throw DomainError("unknown oracle kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed oracle JSON: ") + e.what());
  }
}

SetOracle parse_oracle_spec(const std::string& spec, u64 default_limit) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "squares" && tail.empty()) return SetOracle::squares();
  if (head == "quadratic") return SetOracle::quadratic(QuadraticForm::parse(tail));
  if (head == "explicit") return SetOracle::explicit_set(parse_u64_list(tail));
  if (head == "greedy_apfree" || head == "greedy") {
    const auto k = parse_u64_list(tail);
    if (k.size() != 1) throw DomainError("greedy_apfree oracle needs one k, as greedy_apfree:3");
    return SetOracle::greedy_apfree(static_cast<unsigned>(k[0]), default_limit);
  }
  if (std::filesystem::exists(spec)) return oracle_from_json(load_json(spec), default_limit);
  throw DomainError("unknown oracle '" + spec +
                    "' (expected squares, quadratic:a,b,c, explicit:x,y,..., greedy_apfree:k or a JSON file)");
}

json to_json(const APWitness& ap) {
  return json{{"start", ap.start}, {"difference", ap.difference}, {"length", ap.length}};
}

APWitness ap_from_json(const json& j) {
  return APWitness{j.at("start").get<u64>(), j.at("difference").get<u64>(), j.at("length").get<u64>()};
}

json to_json(const CubeExpansion& e, const HilbertCube& cube) {
  return json{{"cube", to_json(cube)},
              {"distinct_elements", e.distinct_elements},
              {"multiset_size", e.multiset_size},
              {"layers", e.layers},
              {"max_multiplicity", max_multiplicity(cube)}};
}

// --- growth ------------------------------------------------------------

json to_json(const GrowthCertificate& cert) {
  json verdict;
  if (const auto* ok = std::get_if<GrowthCertified>(&cert.verdict)) {
    verdict = json{{"certified", {{"bound", ok->bound.to_string()}}}};
  } else {
    const auto& bad = std::get<GrowthViolation>(cert.verdict);
    verdict = json{{"violation", {{"layer", bad.layer}, {"ap", to_json(bad.ap)}}}};
  }
  return json{{"layer_sizes", cert.layer_sizes}, {"c", cert.c.to_string()}, {"k", cert.k}, {"verdict", verdict}};
}

GrowthCertificate certificate_from_json(const json& j) {
  GrowthCertificate cert;
  cert.layer_sizes = j.at("layer_sizes").get<std::vector<u64>>();
  cert.c = Rational::parse(j.at("c").get<std::string>());
  cert.k = j.at("k").get<unsigned>();
  const json& v = j.at("verdict");
  if (v.contains("certified")) {
    cert.verdict = GrowthCertified{Rational::parse(v.at("certified").at("bound").get<std::string>())};
  } else {
    const json& bad = v.at("violation");
    cert.verdict = GrowthViolation{bad.at("layer").get<std::size_t>(), ap_from_json(bad.at("ap"))};
  }
  return cert;
}

// --- search ------------------------------------------------------------

json to_json(const SearchReport& report, const SetOracle& oracle) {
  json cubes = json::array();
  for (const HilbertCube& cube : report.cubes) {
    json c = to_json(cube);
    c["dimension"] = cube.dimension();
    c["elements"] = expand_elements(cube);
    cubes.push_back(std::move(c));
  }
  json bounds{{"log", "natural"}, {"theorem1", optional_real(report.theorem1_bound)}};
  if (report.mode == SearchMode::Multiset) bounds["multiset"] = optional_real(report.multiset_bound);
  return json{
      {"oracle", to_json(oracle)},
      {"max_n", report.max_n},
      {"mode", mode_name(report.mode)},
      {"min_dim", report.min_dim},
      {"best_dimension", report.best_dimension ? json(*report.best_dimension) : json(nullptr)},
      {"cubes", std::move(cubes)},
      {"cubes_total", report.cubes_total},
      {"nodes_explored", report.nodes_explored},
      {"bounds", std::move(bounds)},
      {"critical", report.critical},
  };
}

SearchReport search_report_from_json(const json& j) {
  SearchReport r;
  r.max_n = j.at("max_n").get<u64>();
  r.mode = mode_from_name(j.at("mode").get<std::string>());
  r.min_dim = j.at("min_dim").get<std::size_t>();
  if (!j.at("best_dimension").is_null()) r.best_dimension = j.at("best_dimension").get<std::size_t>();
  for (const json& c : j.at("cubes")) r.cubes.push_back(cube_from_json(c));
  r.cubes_total = j.at("cubes_total").get<u64>();
  r.nodes_explored = j.at("nodes_explored").get<u64>();
  const json& bounds = j.at("bounds");
  r.theorem1_bound = read_optional_real(bounds, "theorem1");
  r.multiset_bound = read_optional_real(bounds, "multiset");
  r.critical = j.at("critical").get<bool>();
  return r;
}

// --- bounds ------------------------------------------------------------

json to_json(const BoundReport& report) {
  json values = json::object();
  for (const auto& [name, v] : report.values) values[name] = real(v);
  return json{
      {"n", report.n},
      {"k", report.k ? json(*report.k) : json(nullptr)},
      {"c", report.c ? json(report.c->to_string()) : json(nullptr)},
      {"c_squares", report.c_squares.to_string()},
      {"values", std::move(values)},
      {"sharp_constant", real(report.sharp_constant)},
      {"sharp_slack", optional_real(report.sharp_slack)},
      {"below_validated_regime", report.below_validated_regime},
      {"log_convention", report.log_convention},
  };
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.n = j.at("n").get<u64>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<unsigned>();
  if (!j.at("c").is_null()) r.c = Rational::parse(j.at("c").get<std::string>());
  r.c_squares = Rational::parse(j.at("c_squares").get<std::string>());
  for (const auto& [name, v] : j.at("values").items()) r.values[name] = v.get<double>();
  r.sharp_constant = j.at("sharp_constant").get<double>();
  r.sharp_slack = read_optional_real(j, "sharp_slack");
  r.below_validated_regime = j.at("below_validated_regime").get<bool>();
  r.log_convention = j.at("log_convention").get<std::string>();
  return r;
}

// --- progression scans -------------------------------------------------

json to_json(const SquareApScan& scan) {
  return json{
      {"max_n", scan.max_n},
      {"four_term", scan.four_term ? to_json(*scan.four_term) : json(nullptr)},
      {"three_term_count", scan.three_term_count},
      {"first_three_term", scan.first_three_term ? to_json(*scan.first_three_term) : json(nullptr)},
      {"pairs_checked", scan.pairs_checked},
  };
}

SquareApScan square_scan_from_json(const json& j) {
  SquareApScan s;
  s.max_n = j.at("max_n").get<u64>();
  if (!j.at("four_term").is_null()) s.four_term = ap_from_json(j.at("four_term"));
  s.three_term_count = j.at("three_term_count").get<u64>();
  if (!j.at("first_three_term").is_null()) s.first_three_term = ap_from_json(j.at("first_three_term"));
  s.pairs_checked = j.at("pairs_checked").get<u64>();
  return s;
}

json to_json(const CubeSplit& split, const GyarmatiReport& check) {
  return json{
      {"C", split.C},
      {"D", split.D},
      {"n", split.n},
      {"min_size", check.min_size},
      {"contained", check.contained},
      {"within_window", check.within_window},
      {"bound_ln", real(check.bound_ln)},
      {"bound_log2", real(check.bound_log2)},
      {"satisfied", check.satisfied},
  };
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "c_elements,d_size,n,bound_ln,satisfied\n";
  std::string bound;
  for (const SweepRow& row : rows) {
    for (std::size_t i = 0; i < row.c_elements.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(row.c_elements[i]);
    }
    bound.clear();
    dump_real(row.bound_ln, bound);
    out += ',' + std::to_string(row.d_size) + ',' + std::to_string(row.n) + ',' + bound + ',' +
           (row.satisfied ? "true" : "false") + '\n';
  }
  return out;
}

// --- records and files -------------------------------------------------

std::string content_hash(const json& payload) {
  const std::string text = canonical_dump(payload, -1);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

json to_json(const ExperimentRecord& record) {
  return json{
      {"command_line", record.command_line},
      {"config", record.config},
      {"tool_version", record.tool_version},
      {"oracle", record.oracle ? *record.oracle : json(nullptr)},
      {"timing", {{"elapsed_seconds", real(record.elapsed_seconds)}}},
      {"outputs", record.outputs},
      {"content_hash", record.hash()},
  };
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void persist_report(const json& report, const std::filesystem::path& path) {
  write_text(canonical_dump(report) + "\n", path);
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace cubeforge
