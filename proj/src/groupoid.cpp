#include "haagerup/groupoid.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace haagerup {

namespace {

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

std::size_t word_image(SubgroupSpec const& spec, std::span<Letter const> word) {
  std::size_t k = spec.order;
  std::size_t acc = 0;
  for (auto a : word) {
    std::size_t const t = spec.image.at(a.generator) % k;
    acc = (acc + (a.inverse ? k - t : t)) % k;
  }
  return acc;
}

}  // namespace

SubgroupSpec parse_subgroup_spec(std::istream& in, std::size_t generator_count) {
  SubgroupSpec spec;
  bool have_header = false;
  std::vector<bool> seen(generator_count, false);
  spec.image.assign(generator_count, 0);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(strip_comment(raw));
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](std::string const& why) {
      throw InvalidSubgroupSpec("subgroup spec line " + std::to_string(line_no) + ": " + why);
    };
    if (!have_header) {
      long long k = 0;
      if (first != "cyclic" || !(ls >> k) || k < 1) fail("expected \"cyclic k\" with k >= 1");
      spec.order = static_cast<std::size_t>(k);
      have_header = true;
      continue;
    }
    long long index = 0;
    long long target = 0;
    std::istringstream fs(first);
    if (!(fs >> index) || !(ls >> target)) fail("expected \"index target\"");
    if (index < 0 || static_cast<std::size_t>(index) >= generator_count) {
      fail("generator index " + std::to_string(index) + " out of range");
    }
    if (target < 0 || static_cast<std::size_t>(target) >= spec.order) {
      fail("target " + std::to_string(target) + " is not an element of Z/" +
           std::to_string(spec.order));
    }
    if (seen[index]) fail("generator " + std::to_string(index) + " assigned twice");
    seen[index] = true;
    spec.image[index] = static_cast<std::size_t>(target);
  }
  if (!have_header) throw InvalidSubgroupSpec("subgroup spec: missing \"cyclic k\" header");
  for (std::size_t i = 0; i < generator_count; ++i) {
    if (!seen[i]) {
      throw InvalidSubgroupSpec("subgroup spec: generator " + std::to_string(i) +
                                " has no image");
    }
  }
  return spec;
}

SubgroupSpec load_subgroup_spec(std::filesystem::path const& path,
                                std::size_t generator_count) {
  std::ifstream in(path);
  if (!in) throw InvalidSubgroupSpec("cannot open subgroup spec " + path.string());
  return parse_subgroup_spec(in, generator_count);
}

SubgroupSpec trivial_subgroup_spec(std::size_t generator_count) {
  return {1, std::vector<std::size_t>(generator_count, 0)};
}

SubgroupSpec exponent_sum_spec(std::size_t generator_count, std::size_t r) {
  if (r == 0) throw InvalidSubgroupSpec("exponent_sum_spec: order must be positive");
  return {r, std::vector<std::size_t>(generator_count, 1 % r)};
}

std::string format_groupoid_element(GroupoidElement const& a) {
  return std::to_string(a.coset) + ":" + format_element(a.g);
}

Groupoid make_commutant_groupoid(GroupModel const& model, SubgroupSpec spec) {
  if (spec.order == 0) throw InvalidSubgroupSpec("subgroup spec: order must be positive");
  if (spec.image.size() != model.generator_count()) {
    throw InvalidSubgroupSpec("subgroup spec has " + std::to_string(spec.image.size()) +
                              " images for " + std::to_string(model.generator_count()) +
                              " generators");
  }
  for (std::size_t i = 0; i < spec.image.size(); ++i) {
    if (spec.image[i] >= spec.order) {
      throw InvalidSubgroupSpec("image of generator " + std::to_string(i) +
                                " is outside Z/" + std::to_string(spec.order));
    }
  }
  for (auto const& rel : model.relators()) {
    if (std::size_t v = word_image(spec, rel); v != 0) {
      throw InvalidSubgroupSpec("relation " + format_word(rel) + " maps to " +
                                std::to_string(v) + " in Z/" + std::to_string(spec.order) +
                                ", not 0");
    }
  }
  Groupoid gpd;
  gpd.model_ = &model;
  gpd.spec_ = std::move(spec);
  return gpd;
}

std::size_t Groupoid::coset_of(GroupElement const& x) const {
  return (word_image(spec_, x.first) + word_image(spec_, x.second)) % spec_.order;
}

GroupoidElement Groupoid::unit(std::size_t coset) const {
  if (coset >= spec_.order) throw PreconditionError("unit: coset out of range");
  return {coset, {}};
}

std::vector<GroupoidElement> Groupoid::units() const {
  std::vector<GroupoidElement> out;
  for (std::size_t c = 0; c < spec_.order; ++c) out.push_back(unit(c));
  return out;
}

GroupoidElement Groupoid::range(GroupoidElement const& a) const { return unit(a.coset); }

GroupoidElement Groupoid::source(GroupoidElement const& a) const {
  return unit((a.coset + coset_of(a.g)) % spec_.order);
}

bool Groupoid::composable(GroupoidElement const& a, GroupoidElement const& b) const {
  return (a.coset + coset_of(a.g)) % spec_.order == b.coset;
}

std::optional<GroupoidElement> Groupoid::try_product(GroupoidElement const& a,
                                                     GroupoidElement const& b) const {
  if (!composable(a, b)) return std::nullopt;
  return GroupoidElement{a.coset, model_->multiply(a.g, b.g)};
}

GroupoidElement Groupoid::product(GroupoidElement const& a, GroupoidElement const& b) const {
  if (auto p = try_product(a, b)) return *std::move(p);
  throw ComposabilityError("groupoid product: source of [" + format_groupoid_element(a) +
                           "] differs from range of [" + format_groupoid_element(b) + "]");
}

GroupoidElement Groupoid::inverse(GroupoidElement const& a) const {
  return {source(a).coset, model_->inverse(a.g)};
}

GroupoidElement Groupoid::between(GroupElement const& u, GroupElement const& v) const {
  return {coset_of(u), model_->multiply(model_->inverse(u), v)};
}

std::optional<GroupElement> Groupoid::try_act(GroupElement const& v,
                                              GroupoidElement const& a) const {
  if (coset_of(v) != a.coset) return std::nullopt;
  return model_->multiply(v, a.g);
}

GroupElement Groupoid::act(GroupElement const& v, GroupoidElement const& a) const {
  if (auto w = try_act(v, a)) return *std::move(w);
  throw ComposabilityError("groupoid action: vertex [" + format_element(v) + "] lies in coset " +
                           std::to_string(coset_of(v)) + ", element [" +
                           format_groupoid_element(a) + "] starts at coset " +
                           std::to_string(a.coset));
}

GroupElement Groupoid::kernel_act(GroupElement const& c, GroupElement const& v) const {
  if (!in_kernel(c)) {
    throw PreconditionError("kernel_act: [" + format_element(c) + "] is not in the kernel");
  }
  return model_->multiply(c, v);
}

std::vector<GroupoidElement> Groupoid::elements_over(
    std::vector<GroupElement> const& elements) const {
  std::vector<GroupoidElement> out;
  out.reserve(elements.size() * spec_.order);
  for (std::size_t c = 0; c < spec_.order; ++c) {
    for (auto const& g : elements) out.push_back({c, g});
  }
  return out;
}

std::vector<std::pair<GroupoidElement, GroupoidElement>> gpd_factorization_candidates(
    Groupoid const& gpd, SphereIndex const& index, GroupoidElement const& a, Shape s1,
    Shape s2) {
  std::vector<std::pair<GroupoidElement, GroupoidElement>> out;
  auto const& model = gpd.model();
  for (std::size_t c = 0; c < gpd.unit_count(); ++c) {
    for (auto const& beta : index.sphere(s1)) {
      GroupoidElement const b{c, beta};
      GroupoidElement const rest{gpd.source(b).coset, model.multiply(model.inverse(beta), a.g)};
      if (rest.shape() != s2) continue;
      if (gpd.product(b, rest) == a) out.emplace_back(b, rest);
    }
  }
  return out;
}

std::pair<GroupoidElement, GroupoidElement> gpd_factorize(Groupoid const& gpd,
                                                          SphereIndex const& index,
                                                          GroupoidElement const& a, Shape s1,
                                                          Shape s2) {
  if (a.shape() != s1 + s2) {
    std::ostringstream os;
    os << "gpd_factorize: shape " << a.shape() << " is not " << s1 << " + " << s2;
    throw PreconditionError(os.str());
  }
  auto found = gpd_factorization_candidates(gpd, index, a, s1, s2);
  if (found.size() != 1) {
    throw std::logic_error("gpd_factorize: " + std::to_string(found.size()) +
                           " factorizations of [" + format_groupoid_element(a) + "]");
  }
  return found.front();
}

GroupFunction act_convolve(Groupoid const& gpd, GroupFunction const& f,
                           GroupoidFunction const& g) {
  return convolve_with(f, g, [&](GroupElement const& v, GroupoidElement const& a) {
    return gpd.try_act(v, a);
  });
}

GroupoidFunction gpd_convolve(Groupoid const& gpd, GroupoidFunction const& f,
                              GroupoidFunction const& g) {
  return convolve_with(f, g, [&](GroupoidElement const& a, GroupoidElement const& b) {
    return gpd.try_product(a, b);
  });
}

CheckReport check_groupoid_inequality(Groupoid const& gpd, Case c, GroupFunction const& f,
                                      GroupoidFunction const& g, Shape s, double tol) {
  for (auto const& [a, v] : g.entries()) {
    if (a.shape() != s) {
      std::ostringstream os;
      os << "g is not supported on groupoid elements of shape " << s << ": ["
         << format_groupoid_element(a) << ']';
      throw PreconditionError(os.str());
    }
  }
  auto const h = act_convolve(gpd, f, g);
  return make_check_report(c, s, h.l2(), f.l2(), g.l2(), tol);
}

GroupFunction transport_vertex_function(Groupoid const& gpd, GroupFunction const& f) {
  for (auto const& [x, v] : f.entries()) {
    if (!gpd.in_kernel(x)) {
      throw PreconditionError("transport: [" + format_element(x) + "] is not in the kernel");
    }
  }
  return f;
}

GroupoidFunction transport_convolver(Groupoid const& gpd, GroupFunction const& g) {
  GroupoidFunction out;
  for (auto const& [h, v] : g.entries()) {
    if (!gpd.in_kernel(h)) {
      throw PreconditionError("transport: [" + format_element(h) + "] is not in the kernel");
    }
    out.set(GroupoidElement{0, h}, v);
  }
  return out;
}

}  // namespace haagerup
