#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "haagerup/ball.hpp"
#include "haagerup/groupoid.hpp"
#include "haagerup/shape.hpp"

namespace haagerup {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything an experiment depends on. Unset optional fields take the
/// experiment's default when the run starts; the resolved values are what
/// the report embeds.
struct ExperimentConfig {
  Case kind = Case::a2;
  std::size_t rank1 = 2;
  std::size_t rank2 = 2;
  std::string presentation;  // empty: built-in q = 2 cyclic presentation
  std::string subgroup;      // empty: Z/2 parity (a1xa1) or Z/3 exponent sum (a2)
  std::vector<Shape> shapes;  // empty: every shape up to the experiment's default total
  std::optional<std::size_t> radius;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::size_t max_iters = 10'000;
  double norm_tol = 1e-13;
  std::string functions = "random";  // haagerup-check: random | delta
  std::size_t fold_max = 6;
  std::size_t p_max = 2;
  std::size_t element_cap = default_element_cap;
  std::string out = "out";
};

inline std::vector<std::string> const experiment_names{
    "validate", "spheres", "haagerup-check", "norms",
    "radial",   "foldings", "triangle-check", "groupoid-check"};

/// Sets one key from its text form. Throws ConfigError for unknown keys and
/// malformed values. "shape" appends; "shapes" replaces with a
/// space-separated list.
void set_config_value(ExperimentConfig& cfg, std::string const& key, std::string const& value);

/// Flat "key = value" lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(std::filesystem::path const& path, ExperimentConfig base = {});

Shape parse_shape(std::string const& text);

/// Fills in per-experiment defaults.
ExperimentConfig resolve_config(ExperimentConfig cfg, std::string const& experiment);
/// Every field except the output directory, so reports written to different
/// directories from one config compare equal byte for byte.
nlohmann::json config_json(ExperimentConfig const& cfg, std::string const& experiment);

struct RunResult {
  bool pass = false;
  std::filesystem::path report;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs one experiment and writes report.json (plus spheres.csv or
/// foldings.json) under cfg.out. Throws ConfigError for bad input files or
/// unknown experiments and ResourceCapError when a ball is too large.
RunResult run_experiment(std::string const& experiment, ExperimentConfig const& cfg,
                         std::ostream& log);

struct AxiomTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

/// Groupoid and action axioms, the Gamma-commutation identity and simple
/// transitivity over every element with |g| <= pair_radius (pairs) and
/// |g| <= triple_radius (associativity triples).
std::vector<AxiomTally> groupoid_axiom_suite(Groupoid const& gpd, SphereIndex const& index,
                                             std::size_t pair_radius,
                                             std::size_t triple_radius);

}  // namespace haagerup
