#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "haagerup/apartment.hpp"
#include "haagerup/convolution.hpp"
#include "haagerup/harness.hpp"
#include "haagerup/report_json.hpp"
#include "haagerup/rng.hpp"

namespace haagerup {

using nlohmann::json;

namespace {

struct Context {
  ExperimentConfig cfg;
  std::string experiment;
  std::filesystem::path out;
  std::ostream& log;
};

std::size_t radius_of(ExperimentConfig const& cfg) { return cfg.radius.value_or(0); }
std::size_t samples_of(ExperimentConfig const& cfg) { return cfg.samples.value_or(0); }

TrianglePresentation presentation_of(ExperimentConfig const& cfg) {
  if (cfg.presentation.empty()) return cyclic_q2_presentation();
  try {
    return load_presentation(cfg.presentation);
  } catch (std::exception const& e) {
    throw ConfigError(std::string("presentation: ") + e.what());
  }
}

GroupModel model_of(ExperimentConfig const& cfg) {
  if (cfg.kind == Case::a1xa1) return make_a1xa1_group(cfg.rank1, cfg.rank2);
  try {
    return make_a2_group(presentation_of(cfg));
  } catch (InvalidPresentation const& e) {
    throw ConfigError(std::string("presentation: ") + e.what());
  }
}

SubgroupSpec subgroup_of(ExperimentConfig const& cfg, GroupModel const& model) {
  if (cfg.subgroup.empty()) {
    return exponent_sum_spec(model.generator_count(), cfg.kind == Case::a1xa1 ? 2 : 3);
  }
  try {
    return load_subgroup_spec(cfg.subgroup, model.generator_count());
  } catch (InvalidSubgroupSpec const& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> random_values(SplitMix64& rng, std::size_t count) {
  std::vector<double> v(count);
  for (auto& x : v) x = rng.uniform01();
  return v;
}

template <class Key>
SupportedFunction<Key> random_function(SplitMix64& rng, std::vector<Key> const& support) {
  SupportedFunction<Key> f;
  for (auto const& k : support) f.set(k, rng.uniform01());
  return f;
}

std::filesystem::path write_json(std::filesystem::path const& path, json const& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + path.string());
  os << j.dump(2) << '\n';
  return path;
}

json shape_row(Shape s) { return json{{"shape_m", s.m}, {"shape_n", s.n}}; }

bool all_pass(json const& rows) {
  return std::all_of(rows.begin(), rows.end(), [](json const& r) { return r.at("pass").get<bool>(); });
}

// --- validate -------------------------------------------------------------

json run_validate(Context& ctx) {
  auto const pres = presentation_of(ctx.cfg);
  auto const report = validate_triangle_presentation(pres);
  json rows = json::array();
  for (auto const& a : report.axioms) {
    rows.push_back({{"axiom", a.name},
                    {"lhs", a.violations},
                    {"rhs", 0},
                    {"pass", a.pass},
                    {"detail", a.detail}});
  }
  ctx.log << "validate: " << (report.pass() ? "pass" : "fail") << " (link graph "
          << report.link.vertex_count << " vertices, girth " << report.link.girth
          << ", diameter " << report.link.diameter << ")\n";
  return json{{"rows", rows},
              {"q", pres.q},
              {"generator_count", pres.generator_count},
              {"triple_count", pres.triples.size()},
              {"link", report.link},
              {"rotations_closed_on_load", report.rotations_closed_on_load}};
}

// --- spheres --------------------------------------------------------------

json run_spheres(Context& ctx, std::vector<std::filesystem::path>& artifacts) {
  auto const model = model_of(ctx.cfg);
  auto const index = ball(model, radius_of(ctx.cfg), ctx.cfg.element_cap);

  std::map<GroupElement, std::size_t> distance;
  for (std::size_t k = 0; k < index.size(); ++k) {
    distance.emplace(index.elements()[k], index.distances()[k]);
  }
  json rows = json::array();
  std::size_t total = 0;
  for (auto const& [s, elems] : index.spheres()) {
    std::size_t const at_distance = static_cast<std::size_t>(std::count_if(
        elems.begin(), elems.end(),
        [&](GroupElement const& x) { return distance.at(x) == s.total(); }));
    json row = shape_row(s);
    row["size"] = elems.size();
    row["lhs"] = elems.size();
    row["rhs"] = at_distance;
    row["pass"] = at_distance == elems.size();
    rows.push_back(row);
    total += elems.size();
  }
  rows.push_back({{"partition", true},
                  {"lhs", total},
                  {"rhs", index.size()},
                  {"pass", total == index.size()}});

  auto const csv = ctx.out / "spheres.csv";
  std::ofstream os(csv, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + csv.string());
  write_sphere_csv(os, index);
  artifacts.push_back(csv);
  ctx.log << "spheres: ball(" << index.radius() << ") has " << index.size() << " elements\n";
  return json{{"rows", rows}, {"ball_size", index.size()}};
}

// --- haagerup-check ---------------------------------------------------------

json run_haagerup(Context& ctx) {
  auto const& cfg = ctx.cfg;
  auto const model = model_of(cfg);
  std::size_t max_total = 0;
  for (auto const& s : cfg.shapes) max_total = std::max(max_total, s.total());
  auto const index = ball(model, std::max(radius_of(cfg), max_total), cfg.element_cap);
  auto const left = index.ball(radius_of(cfg));

  json rows = json::array();
  for (std::size_t si = 0; si < cfg.shapes.size(); ++si) {
    Shape const s = cfg.shapes[si];
    auto const& sphere = index.sphere(s);
    if (sphere.empty()) continue;
    if (cfg.functions == "delta") {
      GroupFunction const f = GroupFunction::delta(model.identity());
      GroupFunction const g = GroupFunction::delta(sphere.front());
      json row = check_inequality(model, cfg.kind, f, g, s, cfg.tol);
      row["sample"] = 0;
      rows.push_back(row);
      continue;
    }
    ConvolutionPlan const plan(model, left, sphere);
    auto rng = SplitMix64::stream(cfg.seed, si);
    std::vector<double> h(plan.outputs().size());
    double worst = 0.0;
    for (std::size_t k = 0; k < samples_of(cfg); ++k) {
      auto const f = random_values(rng, left.size());
      auto const g = random_values(rng, sphere.size());
      plan.apply(f, g, h);
      auto const r = make_check_report(cfg.kind, s, l2_norm(h), l2_norm(f), l2_norm(g), cfg.tol);
      worst = std::max(worst, r.ratio);
      json row = r;
      row["sample"] = k;
      rows.push_back(row);
    }
    ctx.log << "haagerup-check " << s << ": best ratio " << worst << " vs p = "
            << haagerup_bound(cfg.kind, s) << '\n';
  }
  return json{{"rows", rows}};
}

// --- norms / radial ---------------------------------------------------------

json run_norms(Context& ctx) {
  auto const& cfg = ctx.cfg;
  auto const model = model_of(cfg);
  auto const index = ball(model, radius_of(cfg), cfg.element_cap);
  json rows = json::array();
  for (auto const& s : cfg.shapes) {
    if (s.total() > index.radius()) {
      throw ConfigError("norms: shape total exceeds the radius");
    }
    auto const g = GroupFunction::indicator(index.sphere(s));
    double const rhs = haagerup_bound(cfg.kind, s) * g.l2();
    double previous = 0.0;
    for (std::size_t r = 0; r <= index.radius(); ++r) {
      auto const est = truncated_norm(model, index, g, r, cfg.max_iters, cfg.norm_tol);
      bool const monotone = est.lower_bound >= previous * (1.0 - cfg.tol);
      previous = est.lower_bound;
      json row = est;
      row.update(shape_row(s));
      row["lhs"] = est.lower_bound;
      row["rhs"] = rhs;
      row["monotone"] = monotone;
      row["pass"] = monotone && est.lower_bound <= rhs * (1.0 + cfg.tol);
      rows.push_back(row);
    }
    ctx.log << "norms " << s << ": " << previous << " <= " << rhs << '\n';
  }
  return json{{"rows", rows}};
}

json run_radial(Context& ctx) {
  auto const& cfg = ctx.cfg;
  auto const model = model_of(cfg);
  auto const index = ball(model, radius_of(cfg), cfg.element_cap);
  json rows = json::array();
  json trajectories = json::array();
  for (auto const& s : cfg.shapes) {
    if (s.total() > index.radius()) {
      throw ConfigError("radial: shape total exceeds the radius");
    }
    auto const t = radial_experiment(model, index, cfg.kind, s, index.radius(), cfg.max_iters,
                                     cfg.norm_tol);
    for (std::size_t r = 0; r < t.ratios.size(); ++r) {
      json row = shape_row(s);
      row["ball_radius"] = r;
      row["ratio"] = t.ratios[r];
      row["lhs"] = t.ratios[r];
      row["rhs"] = t.bound;
      if (t.conjectured) {
        row["conjectured"] = *t.conjectured;
        row["exceeds_conjecture"] = t.ratios[r] > *t.conjectured * (1.0 + cfg.tol);
      }
      row["pass"] = t.ratios[r] <= t.bound * (1.0 + cfg.tol);
      rows.push_back(row);
    }
    trajectories.push_back(t);
    ctx.log << "radial " << s << ": final ratio " << t.ratios.back() << " vs p = " << t.bound
            << '\n';
  }
  return json{{"rows", rows}, {"trajectories", trajectories}};
}

// --- foldings ----------------------------------------------------------------

json run_foldings(Context& ctx, std::vector<std::filesystem::path>& artifacts) {
  auto const& cfg = ctx.cfg;
  std::vector<Shape> shapes = cfg.shapes;
  if (shapes.empty()) {
    for (std::size_t m = 0; m <= cfg.fold_max; ++m) {
      for (std::size_t n = 0; n <= cfg.fold_max; ++n) shapes.push_back({m, n});
    }
  }
  json rows = json::array();
  json dump = json::array();
  for (auto const& s : shapes) {
    auto const diagrams = enumerate_foldings(cfg.kind, s);
    auto const counts = count_foldings(cfg.kind, s);
    json row = shape_row(s);
    row["total"] = counts.total;
    if (cfg.kind == Case::a1xa1) {
      row["lhs"] = counts.total;
      row["rhs"] = focal_point_count(s);
      row["pass"] = counts.total == focal_point_count(s);
    } else {
      row["coincident"] = counts.coincident;
      row["distinct"] = counts.distinct;
      row["lhs"] = counts.distinct;
      row["rhs"] = distinct_pair_count(s);
      row["pass"] = counts.distinct == distinct_pair_count(s) &&
                    counts.coincident == focal_point_count(s);
    }
    rows.push_back(row);
    dump.push_back({{"m", s.m}, {"n", s.n}, {"diagrams", diagrams}});
  }
  auto const path = write_json(ctx.out / "foldings.json",
                               json{{"case", to_string(cfg.kind)}, {"hulls", dump}});
  artifacts.push_back(path);
  ctx.log << "foldings: " << shapes.size() << " hulls, " << (all_pass(rows) ? "all" : "not all")
          << " counts match\n";
  return json{{"rows", rows}};
}

// --- triangle-check ----------------------------------------------------------

json run_triangles(Context& ctx) {
  auto const& cfg = ctx.cfg;
  auto const model = model_of(cfg);
  auto const index = ball(model, std::max(radius_of(cfg), cfg.p_max), cfg.element_cap);
  json rows = json::array();
  json counts = json::array();
  for (std::size_t p = 0; p <= cfg.p_max; ++p) {
    auto const triangles = enumerate_triangles(model, index, p);
    auto const& sphere = index.sphere({p, 0});
    counts.push_back({{"p", p}, {"triangles", triangles.size()}, {"sphere", sphere.size()}});
    auto rng = SplitMix64::stream(cfg.seed, p);
    for (std::size_t k = 0; k < samples_of(cfg); ++k) {
      auto const f1 = random_function(rng, sphere);
      auto const f2 = random_function(rng, sphere);
      auto const f3 = random_function(rng, sphere);
      auto const r = triangle_sum(triangles, f1, f2, f3, p, cfg.tol);
      json row = r;
      row["sample"] = k;
      row["lhs"] = std::abs(r.value);
      row["rhs"] = r.bound;
      rows.push_back(row);
    }
    ctx.log << "triangle-check p=" << p << ": |T_p| = " << triangles.size() << '\n';
  }
  return json{{"rows", rows}, {"triangle_counts", counts}};
}

// --- groupoid-check -----------------------------------------------------------

json run_groupoid(Context& ctx) {
  auto const& cfg = ctx.cfg;
  auto const model = model_of(cfg);
  Groupoid gpd = [&] {
    try {
      return make_commutant_groupoid(model, subgroup_of(cfg, model));
    } catch (InvalidSubgroupSpec const& e) {
      throw ConfigError(e.what());
    }
  }();
  std::size_t max_total = 0;
  for (auto const& s : cfg.shapes) max_total = std::max(max_total, s.total());
  std::size_t const radius = radius_of(cfg);
  auto const index = ball(model, std::max(radius, max_total), cfg.element_cap);

  json rows = json::array();
  for (auto const& t : groupoid_axiom_suite(gpd, index, radius, std::min<std::size_t>(radius, 2))) {
    rows.push_back({{"axiom", t.name},
                    {"checked", t.checked},
                    {"lhs", t.violations},
                    {"rhs", 0},
                    {"pass", t.violations == 0}});
  }
  auto const vertices = index.ball(radius);
  for (std::size_t si = 0; si < cfg.shapes.size(); ++si) {
    Shape const s = cfg.shapes[si];
    auto const support = gpd.elements_over(index.sphere(s));
    auto rng = SplitMix64::stream(cfg.seed, si);
    for (std::size_t k = 0; k < samples_of(cfg); ++k) {
      auto const f = random_function(rng, vertices);
      auto const g = random_function(rng, support);
      json row = check_groupoid_inequality(gpd, cfg.kind, f, g, s, cfg.tol);
      row["sample"] = k;
      rows.push_back(row);
    }
  }
  ctx.log << "groupoid-check: " << gpd.unit_count() << " units, "
          << (all_pass(rows) ? "all checks pass" : "failures present") << '\n';
  return json{{"rows", rows}, {"units", gpd.unit_count()}};
}

}  // namespace

std::vector<AxiomTally> groupoid_axiom_suite(Groupoid const& gpd, SphereIndex const& index,
                                             std::size_t pair_radius,
                                             std::size_t triple_radius) {
  auto const vertices = index.ball(pair_radius);
  auto const small = index.ball(triple_radius);
  auto const elems = gpd.elements_over(vertices);
  auto const triple_elems = gpd.elements_over(small);

  AxiomTally composition{"range and source of products"};
  AxiomTally domain{"composable iff source equals range"};
  AxiomTally units{"units are their own range and source"};
  AxiomTally unit_laws{"unit laws"};
  AxiomTally assoc{"associativity"};
  AxiomTally inverses{"two-sided inverses"};
  AxiomTally act_source{"action source"};
  AxiomTally act_unit{"action unit"};
  AxiomTally act_assoc{"action associativity"};
  AxiomTally transitive{"simple transitivity"};
  AxiomTally commute{"kernel commutation"};
  auto tally = [](AxiomTally& t, bool ok) {
    ++t.checked;
    if (!ok) ++t.violations;
  };

  for (auto const& u : gpd.units()) tally(units, gpd.range(u) == u && gpd.source(u) == u);

  for (auto const& a : elems) {
    tally(unit_laws, gpd.product(a, gpd.source(a)) == a && gpd.product(gpd.range(a), a) == a);
    auto const inv = gpd.inverse(a);
    tally(inverses, gpd.product(a, inv) == gpd.range(a) && gpd.product(inv, a) == gpd.source(a) &&
                        gpd.inverse(inv) == a);
    for (auto const& b : elems) {
      auto const p = gpd.try_product(a, b);
      tally(domain, p.has_value() == (gpd.source(a) == gpd.range(b)));
      if (p) tally(composition, gpd.range(*p) == gpd.range(a) && gpd.source(*p) == gpd.source(b));
    }
  }

  for (auto const& a : triple_elems) {
    for (auto const& b : triple_elems) {
      auto const ab = gpd.try_product(a, b);
      if (!ab) continue;
      for (auto const& c : triple_elems) {
        auto const ab_c = gpd.try_product(*ab, c);
        if (!ab_c) continue;
        tally(assoc, *ab_c == gpd.product(a, gpd.product(b, c)));
      }
    }
  }

  for (auto const& v : vertices) {
    auto const sv = gpd.unit(gpd.coset_of(v));
    tally(act_unit, gpd.act(v, sv) == v);
    std::set<GroupElement> images;
    std::size_t composable = 0;
    for (auto const& a : elems) {
      auto const w = gpd.try_act(v, a);
      if (!w) continue;
      ++composable;
      images.insert(*w);
      tally(act_source, gpd.unit(gpd.coset_of(*w)) == gpd.source(a));
    }
    // Distinct elements move v to distinct vertices.
    tally(transitive, images.size() == composable);
    for (auto const& w : vertices) tally(transitive, gpd.act(v, gpd.between(v, w)) == w);
  }

  for (auto const& v : small) {
    for (auto const& a : triple_elems) {
      auto const va = gpd.try_act(v, a);
      if (!va) continue;
      for (auto const& b : triple_elems) {
        auto const ab = gpd.try_product(a, b);
        if (!ab) continue;
        tally(act_assoc, gpd.act(v, *ab) == gpd.act(*va, b));
      }
    }
  }

  for (auto const& c : small) {
    if (!gpd.in_kernel(c)) continue;
    for (auto const& v : small) {
      auto const cv = gpd.kernel_act(c, v);
      for (auto const& a : elems) {
        auto const va = gpd.try_act(v, a);
        if (!va) continue;
        auto const cva = gpd.try_act(cv, a);
        tally(commute, cva.has_value() && *cva == gpd.kernel_act(c, *va));
      }
    }
  }

  return {composition, domain, units, unit_laws, assoc, inverses,
          act_source, act_unit, act_assoc, transitive, commute};
}

RunResult run_experiment(std::string const& experiment, ExperimentConfig const& raw,
                         std::ostream& log) {
  ExperimentConfig const cfg = resolve_config(raw, experiment);
  std::filesystem::path const out = cfg.out;
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw ConfigError("cannot create output directory " + out.string());

  Context ctx{cfg, experiment, out, log};
  RunResult result;
  json body;
  if (experiment == "validate") {
    body = run_validate(ctx);
  } else if (experiment == "spheres") {
    body = run_spheres(ctx, result.artifacts);
  } else if (experiment == "haagerup-check") {
    body = run_haagerup(ctx);
  } else if (experiment == "norms") {
    body = run_norms(ctx);
  } else if (experiment == "radial") {
    body = run_radial(ctx);
  } else if (experiment == "foldings") {
    body = run_foldings(ctx, result.artifacts);
  } else if (experiment == "triangle-check") {
    body = run_triangles(ctx);
  } else {
    body = run_groupoid(ctx);
  }

  result.pass = all_pass(body.at("rows"));
  json report{{"experiment", experiment},
              {"config", config_json(cfg, experiment)},
              {"pass", result.pass}};
  report.update(body);
  result.report = write_json(out / "report.json", report);
  return result;
}

}  // namespace haagerup
