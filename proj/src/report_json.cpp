#include "haagerup/report_json.hpp"

namespace haagerup {

using nlohmann::json;

void to_json(json& j, Shape const& s) { j = json{{"m", s.m}, {"n", s.n}}; }

void to_json(json& j, CheckReport const& r) {
  j = json{{"shape_m", r.shape.m}, {"shape_n", r.shape.n}, {"lhs", r.lhs},
           {"rhs", r.rhs},         {"ratio", r.ratio},     {"bound", r.bound},
           {"pass", r.pass}};
}

void to_json(json& j, NormEstimate const& e) {
  j = json{{"ball_radius", e.ball_radius}, {"lower_bound", e.lower_bound},
           {"iterations", e.iterations},   {"residual", e.residual},
           {"converged", e.converged}};
}

void to_json(json& j, RadialTrajectory const& t) {
  j = json{{"shape_m", t.shape.m},
           {"shape_n", t.shape.n},
           {"bound", t.bound},
           {"ratios", t.ratios},
           {"estimates", t.estimates},
           {"exceeds_bound", t.exceeds_bound},
           {"exceeds_conjecture", t.exceeds_conjecture}};
  j["conjectured"] = t.conjectured ? json(*t.conjectured) : json(nullptr);
}

void to_json(json& j, TriangleSumReport const& r) {
  j = json{{"p", r.p}, {"value", r.value}, {"bound", r.bound}, {"pass", r.pass}};
}

void to_json(json& j, LinkGraphStats const& s) {
  j = json{{"vertex_count", s.vertex_count}, {"edge_count", s.edge_count},
           {"regular", s.regular},           {"degree", s.degree},
           {"connected", s.connected},       {"girth", s.girth},
           {"diameter", s.diameter}};
}

void to_json(json& j, AxiomResult const& a) {
  j = json{{"axiom", a.name}, {"violations", a.violations}, {"pass", a.pass},
           {"detail", a.detail}};
}

void to_json(json& j, ValidationReport const& r) {
  j = json{{"pass", r.pass()},
           {"axioms", r.axioms},
           {"link", r.link},
           {"rotations_closed_on_load", r.rotations_closed_on_load}};
}

void to_json(json& j, ApartmentPoint const& p) { j = json::array({p.i, p.j}); }

void to_json(json& j, FoldingDiagram const& d) {
  j = json{{"case", to_string(d.kind)}, {"m", d.hull.m}, {"n", d.hull.n},
           {"focal_points", d.focal}};
  if (d.kind == Case::a2) j["class"] = to_string(classify_folding(d));
}

}  // namespace haagerup
