#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "haagerup/harness.hpp"

namespace haagerup {

namespace {

std::string trim(std::string const& s) {
  auto const b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto const e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_unsigned(std::string const& key, std::string const& text) {
  std::uint64_t v = 0;
  auto const* first = text.data();
  auto const* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ConfigError("config key '" + key + "': expected a nonnegative integer, got '" + text +
                      "'");
  }
  return v;
}

double parse_positive_double(std::string const& key, std::string const& text) {
  char* end = nullptr;
  double const v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !(v > 0.0)) {
    throw ConfigError("config key '" + key + "': expected a positive number, got '" + text +
                      "'");
  }
  return v;
}

std::vector<Shape> all_shapes(std::size_t max_total) {
  std::vector<Shape> out;
  for (std::size_t t = 0; t <= max_total; ++t) {
    for (std::size_t m = t + 1; m-- > 0;) out.push_back({m, t - m});
  }
  return out;
}

}  // namespace

Shape parse_shape(std::string const& text) {
  auto const comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("shape '" + text + "': expected m,n");
  }
  return {parse_unsigned("shape", trim(text.substr(0, comma))),
          parse_unsigned("shape", trim(text.substr(comma + 1)))};
}

void set_config_value(ExperimentConfig& cfg, std::string const& key, std::string const& raw) {
  std::string const value = trim(raw);
  if (key == "case") {
    try {
      cfg.kind = case_from_string(value);
    } catch (std::exception const& e) {
      throw ConfigError(std::string("config key 'case': ") + e.what());
    }
  } else if (key == "ranks") {
    Shape const r = parse_shape(value);
    if (r.m == 0 || r.n == 0) throw ConfigError("config key 'ranks': ranks must be positive");
    cfg.rank1 = r.m;
    cfg.rank2 = r.n;
  } else if (key == "presentation") {
    cfg.presentation = value;
  } else if (key == "subgroup") {
    cfg.subgroup = value;
  } else if (key == "shape") {
    cfg.shapes.push_back(parse_shape(value));
  } else if (key == "shapes") {
    cfg.shapes.clear();
    std::istringstream is(value);
    std::string item;
    while (is >> item) cfg.shapes.push_back(parse_shape(item));
  } else if (key == "radius") {
    cfg.radius = parse_unsigned(key, value);
  } else if (key == "samples") {
    cfg.samples = parse_unsigned(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(key, value);
  } else if (key == "tol") {
    cfg.tol = parse_positive_double(key, value);
  } else if (key == "max_iters") {
    cfg.max_iters = parse_unsigned(key, value);
  } else if (key == "norm_tol") {
    cfg.norm_tol = parse_positive_double(key, value);
  } else if (key == "functions") {
    if (value != "random" && value != "delta") {
      throw ConfigError("config key 'functions': expected random or delta, got '" + value + "'");
    }
    cfg.functions = value;
  } else if (key == "fold_max") {
    cfg.fold_max = parse_unsigned(key, value);
  } else if (key == "p_max") {
    cfg.p_max = parse_unsigned(key, value);
  } else if (key == "element_cap") {
    cfg.element_cap = parse_unsigned(key, value);
  } else if (key == "out") {
    if (value.empty()) throw ConfigError("config key 'out': empty path");
    cfg.out = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string const line = trim(raw);
    if (line.empty()) continue;
    auto const eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (ConfigError const& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig load_config(std::filesystem::path const& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, std::move(base));
}

ExperimentConfig resolve_config(ExperimentConfig cfg, std::string const& experiment) {
  if (std::find(experiment_names.begin(), experiment_names.end(), experiment) ==
      experiment_names.end()) {
    throw ConfigError("unknown experiment '" + experiment + "'");
  }
  std::size_t radius = 0;
  std::size_t samples = 0;
  std::size_t max_total = 0;
  if (experiment == "spheres" || experiment == "norms" || experiment == "radial") {
    radius = 4;
    max_total = 2;
  } else if (experiment == "haagerup-check") {
    radius = 4;
    samples = 100;
    max_total = 3;
  } else if (experiment == "triangle-check") {
    radius = cfg.p_max;
    samples = 1000;
  } else if (experiment == "groupoid-check") {
    radius = 3;
    samples = 50;
    max_total = 2;
  }
  if (!cfg.radius) cfg.radius = radius;
  if (!cfg.samples) cfg.samples = samples;
  bool const uses_shapes = experiment == "haagerup-check" || experiment == "norms" ||
                           experiment == "radial" || experiment == "groupoid-check";
  if (uses_shapes && cfg.shapes.empty()) cfg.shapes = all_shapes(max_total);
  return cfg;
}

nlohmann::json config_json(ExperimentConfig const& cfg, std::string const& experiment) {
  nlohmann::json shapes = nlohmann::json::array();
  for (auto const& s : cfg.shapes) shapes.push_back({s.m, s.n});
  nlohmann::json j{{"experiment", experiment},
                   {"case", to_string(cfg.kind)},
                   {"seed", cfg.seed},
                   {"shapes", shapes},
                   {"radius", cfg.radius ? nlohmann::json(*cfg.radius) : nlohmann::json()},
                   {"samples", cfg.samples ? nlohmann::json(*cfg.samples) : nlohmann::json()},
                   {"tol", cfg.tol},
                   {"max_iters", cfg.max_iters},
                   {"norm_tol", cfg.norm_tol},
                   {"functions", cfg.functions},
                   {"fold_max", cfg.fold_max},
                   {"p_max", cfg.p_max},
                   {"element_cap", cfg.element_cap}};
  if (cfg.kind == Case::a1xa1) {
    j["ranks"] = {cfg.rank1, cfg.rank2};
  } else {
    j["presentation"] = cfg.presentation.empty() ? "builtin:q2-cyclic" : cfg.presentation;
  }
  j["subgroup"] = cfg.subgroup.empty() ? "builtin" : cfg.subgroup;
  return j;
}

}  // namespace haagerup
