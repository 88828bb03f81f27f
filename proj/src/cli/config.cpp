#include "sdf/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sdf/experiments/errors.hpp"

namespace sdf::cli {
namespace {

using nlohmann::json;
using experiments::ConfigError;
using experiments::EstimatorKind;
using experiments::EstimatorSpec;
using experiments::SizeRule;

constexpr const char* kDefaults = R"({
  "schema_version": 1,
  "M": 1000,
  "n": 2000,
  "parent": "paper-quintic",
  "estimators": [
    {"kind": "natural"},
    {"kind": "grouped", "group_size": 50},
    {"kind": "kernel", "kernel": "box", "bandwidth": 50}
  ],
  "replicates": 20,
  "seed": 20020815,
  "eval_grid": [],
  "designated_replicate": 0,
  "coupling": false,
  "diagnostic_replicates": 0,
  "threads": 0,
  "out_dir": "out",
  "verbosity": "normal",
  "scales": [1]
}
)";

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

Count get_count(const json& v, const std::string& field, Count min) {
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  const Count c = v.get<Count>();
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ConfigError(field, "integer too large");
  }
  if (c < min) throw ConfigError(field, "must be at least " + std::to_string(min));
  return c;
}

SizeRule get_size(const json& v, const std::string& field) {
  if (v.is_number_integer()) return {SizeRule::Mode::fixed, get_count(v, field, 1)};
  if (v.is_string() && v.get<std::string>() == "sqrt") return {SizeRule::Mode::sqrt, 1};
  if (v.is_object()) {
    check_keys(v, field, {"divisor"});
    if (!v.contains("divisor")) throw ConfigError(field + ".divisor", "missing");
    return {SizeRule::Mode::divisor, get_count(v.at("divisor"), field + ".divisor", 1)};
  }
  throw ConfigError(field, R"(expected a positive integer, "sqrt" or {"divisor": d})");
}

EstimatorSpec get_estimator(const json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigError(field, "expected an object");
  if (!v.contains("kind") || !v.at("kind").is_string()) {
    throw ConfigError(field + ".kind", "expected \"natural\", \"grouped\" or \"kernel\"");
  }
  EstimatorSpec spec;
  const std::string kind = v.at("kind").get<std::string>();
  if (kind == "natural") {
    spec.kind = EstimatorKind::natural;
    check_keys(v, field, {"kind", "label"});
  } else if (kind == "grouped") {
    spec.kind = EstimatorKind::grouped;
    check_keys(v, field, {"kind", "label", "group_size", "breaks"});
    if (v.contains("group_size") == v.contains("breaks")) {
      throw ConfigError(field, "grouped estimator needs exactly one of group_size or breaks");
    }
    if (v.contains("group_size")) spec.size = get_size(v.at("group_size"), field + ".group_size");
    if (v.contains("breaks")) {
      const json& b = v.at("breaks");
      if (!b.is_array()) throw ConfigError(field + ".breaks", "expected an array of integers");
      Counts breaks(static_cast<Index>(b.size()));
      for (std::size_t i = 0; i < b.size(); ++i) {
        breaks(static_cast<Index>(i)) =
            get_count(b[i], field + ".breaks[" + std::to_string(i) + "]", 0);
      }
      spec.breaks = std::move(breaks);
    }
  } else if (kind == "kernel") {
    spec.kind = EstimatorKind::kernel;
    check_keys(v, field, {"kind", "label", "kernel", "bandwidth"});
    if (!v.contains("bandwidth")) throw ConfigError(field + ".bandwidth", "missing");
    spec.size = get_size(v.at("bandwidth"), field + ".bandwidth");
    if (v.contains("kernel")) {
      const json& k = v.at("kernel");
      const auto type = k.is_string() ? parse_kernel(k.get<std::string>()) : std::nullopt;
      if (!type) {
        throw ConfigError(field + ".kernel", "expected \"box\", \"triangular\" or \"epanechnikov\"");
      }
      spec.kernel = *type;
    }
  } else {
    throw ConfigError(field + ".kind", "unknown estimator kind '" + kind + "'");
  }
  if (v.contains("label")) {
    if (!v.at("label").is_string()) throw ConfigError(field + ".label", "expected a string");
    spec.label = v.at("label").get<std::string>();
  }
  return spec;
}

experiments::Parent get_parent(const json& v, const std::filesystem::path& base_dir) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (name == "paper-quintic") return experiments::Parent::paper_quintic();
    if (name == "uniform") return experiments::Parent::uniform();
    throw ConfigError("parent", "unknown parent '" + name + "'");
  }
  if (v.is_object()) {
    check_keys(v, "parent", {"tabulated"});
    if (!v.contains("tabulated") || !v.at("tabulated").is_string()) {
      throw ConfigError("parent.tabulated", "expected a CSV path");
    }
    const std::filesystem::path p = base_dir / v.at("tabulated").get<std::string>();
    try {
      return experiments::Parent::from_csv(p);
    } catch (const experiments::IoError& e) {
      throw ConfigError("parent.tabulated", e.what());
    }
  }
  throw ConfigError("parent", R"(expected "paper-quintic", "uniform" or {"tabulated": path})");
}

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string defaults_json() { return kDefaults; }

CliConfig parse_config(const std::string& text, ConfigMode mode,
                       const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", "JSON syntax error at " + locate(text, e.byte));
  }
  if (!doc.is_object()) throw ConfigError("", "top level must be a JSON object");

  std::set<std::string> allowed = {"schema_version", "M", "n", "parent", "estimators",
                                   "replicates", "seed", "eval_grid", "designated_replicate",
                                   "coupling", "diagnostic_replicates", "threads", "out_dir",
                                   "verbosity"};
  if (mode == ConfigMode::sweep) allowed.insert("scales");
  check_keys(doc, "", allowed);

  if (!doc.contains("schema_version")) throw ConfigError("schema_version", "missing");
  if (get_count(doc.at("schema_version"), "schema_version", 0) != kSchemaVersion) {
    throw ConfigError("schema_version", "unsupported version (expected " +
                                            std::to_string(kSchemaVersion) + ")");
  }

  CliConfig cfg;
  auto& sc = cfg.scenario;
  sc.estimators = {
      EstimatorSpec{EstimatorKind::natural, std::nullopt, std::nullopt, KernelType::box, ""},
      EstimatorSpec{EstimatorKind::grouped, SizeRule{SizeRule::Mode::fixed, 50}, std::nullopt,
                    KernelType::box, ""},
      EstimatorSpec{EstimatorKind::kernel, SizeRule{SizeRule::Mode::fixed, 50}, std::nullopt,
                    KernelType::box, ""}};
  sc.seed = 20020815;
  cfg.scales = {1};

  if (doc.contains("M")) sc.cells = get_count(doc.at("M"), "M", 1);
  if (doc.contains("n")) sc.n = get_count(doc.at("n"), "n", 1);
  if (doc.contains("parent")) sc.parent = get_parent(doc.at("parent"), base_dir);
  if (doc.contains("estimators")) {
    const json& e = doc.at("estimators");
    if (!e.is_array() || e.empty()) throw ConfigError("estimators", "expected a non-empty array");
    sc.estimators.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
      sc.estimators.push_back(get_estimator(e[i], "estimators[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("replicates")) sc.replicates = get_count(doc.at("replicates"), "replicates", 1);
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<Count>() < 0)) {
      throw ConfigError("seed", "expected an unsigned 64-bit integer");
    }
    sc.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("eval_grid")) {
    const json& g = doc.at("eval_grid");
    if (!g.is_array()) throw ConfigError("eval_grid", "expected an array of numbers");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_number()) {
        throw ConfigError("eval_grid[" + std::to_string(i) + "]", "expected a number");
      }
      sc.eval_grid.push_back(g[i].get<double>());
    }
  }
  if (doc.contains("designated_replicate")) {
    sc.designated_replicate = get_count(doc.at("designated_replicate"), "designated_replicate", 0);
  }
  if (doc.contains("coupling")) {
    if (!doc.at("coupling").is_boolean()) throw ConfigError("coupling", "expected true or false");
    sc.coupling = doc.at("coupling").get<bool>();
  }
  if (doc.contains("diagnostic_replicates")) {
    sc.diagnostic_replicates =
        get_count(doc.at("diagnostic_replicates"), "diagnostic_replicates", 0);
  }
  if (doc.contains("threads")) {
    sc.threads = static_cast<unsigned>(get_count(doc.at("threads"), "threads", 0));
  }
  if (doc.contains("out_dir")) {
    if (!doc.at("out_dir").is_string()) throw ConfigError("out_dir", "expected a path string");
    cfg.out_dir = doc.at("out_dir").get<std::string>();
  }
  if (doc.contains("verbosity")) {
    const json& v = doc.at("verbosity");
    if (!v.is_string() || (v.get<std::string>() != "normal" && v.get<std::string>() != "quiet")) {
      throw ConfigError("verbosity", "expected \"normal\" or \"quiet\"");
    }
    cfg.quiet = v.get<std::string>() == "quiet";
  }
  if (doc.contains("scales")) {
    const json& s = doc.at("scales");
    if (!s.is_array() || s.empty()) throw ConfigError("scales", "expected a non-empty array");
    cfg.scales.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      cfg.scales.push_back(get_count(s[i], "scales[" + std::to_string(i) + "]", 1));
    }
  }
  experiments::validate(sc);
  return cfg;
}

CliConfig load_config(const std::filesystem::path& path, ConfigMode mode) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str(), mode, path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(e.field(), path.string() + ": " +
                                     std::string(e.what()).substr(
                                         e.field().empty() ? 0 : e.field().size() + 2));
  }
}

}  // namespace sdf::cli
