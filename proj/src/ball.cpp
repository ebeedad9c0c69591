#include "haagerup/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace haagerup {

std::vector<GroupElement> const& SphereIndex::sphere(Shape s) const {
  if (s.total() > radius_) {
    throw PreconditionError("sphere (" + std::to_string(s.m) + "," + std::to_string(s.n) +
                            ") lies beyond the enumerated radius " + std::to_string(radius_));
  }
  static std::vector<GroupElement> const empty;
  auto it = spheres_.find(s);
  return it == spheres_.end() ? empty : it->second;
}

std::vector<GroupElement> SphereIndex::ball(std::size_t r) const {
  if (r > radius_) {
    throw PreconditionError("ball of radius " + std::to_string(r) +
                            " exceeds the enumerated radius " + std::to_string(radius_));
  }
  std::vector<GroupElement> out;
  for (auto const& [s, elems] : spheres_) {
    if (s.total() <= r) out.insert(out.end(), elems.begin(), elems.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SphereIndex ball(GroupModel const& model, std::size_t radius, std::size_t cap) {
  SphereIndex index;
  index.radius_ = radius;
  auto add = [&](GroupElement x, std::size_t d) {
    if (index.elements_.size() >= cap) {
      throw ResourceCapError("ball of radius " + std::to_string(radius) +
                             " exceeds the element cap of " + std::to_string(cap));
    }
    index.ids_.emplace(x, index.elements_.size());
    index.elements_.push_back(std::move(x));
    index.distances_.push_back(d);
  };
  add(model.identity(), 0);
  std::size_t frontier_begin = 0;
  for (std::size_t d = 0; d < radius; ++d) {
    std::size_t const frontier_end = index.elements_.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (Letter a : model.letters()) {
        GroupElement y = model.multiply(index.elements_[i], a);
        if (!index.ids_.count(y)) add(std::move(y), d + 1);
      }
    }
    frontier_begin = frontier_end;
  }
  for (auto const& x : index.elements_) index.spheres_[x.shape()].push_back(x);
  for (auto& [s, elems] : index.spheres_) std::sort(elems.begin(), elems.end());
  return index;
}

std::vector<GroupElement> neighbors(GroupModel const& model, GroupElement const& x) {
  std::vector<GroupElement> out;
  for (Letter a : model.letters()) {
    GroupElement y = model.multiply(x, a);
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
  }
  return out;
}

std::vector<std::pair<GroupElement, GroupElement>> factorization_candidates(
    GroupModel const& model, SphereIndex const& index, GroupElement const& alpha, Shape s1,
    Shape s2) {
  if (alpha.shape() != s1 + s2) {
    throw PreconditionError("factorize: shape of alpha does not equal s1 + s2");
  }
  std::vector<std::pair<GroupElement, GroupElement>> out;
  for (auto const& beta : index.sphere(s1)) {
    GroupElement gamma = model.multiply(model.inverse(beta), alpha);
    if (gamma.shape() == s2) out.emplace_back(beta, std::move(gamma));
  }
  return out;
}

std::pair<GroupElement, GroupElement> factorize(GroupModel const& model,
                                                SphereIndex const& index,
                                                GroupElement const& alpha, Shape s1, Shape s2) {
  auto candidates = factorization_candidates(model, index, alpha, s1, s2);
  if (candidates.size() != 1) {
    throw std::logic_error("factorization uniqueness violated for " + format_element(alpha) +
                           ": " + std::to_string(candidates.size()) + " candidates");
  }
  return std::move(candidates.front());
}

std::vector<ElementTriple> enumerate_triangles(GroupModel const& model,
                                               SphereIndex const& index, std::size_t p) {
  std::vector<ElementTriple> out;
  auto const& w = index.sphere({p, 0});
  for (auto const& alpha : w) {
    for (auto const& beta : w) {
      GroupElement gamma = model.inverse(model.multiply(beta, alpha));
      if (gamma.shape() == Shape{p, 0}) out.emplace_back(alpha, beta, std::move(gamma));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_sphere_csv(std::ostream& os, SphereIndex const& index) {
  os << "shape_m,shape_n,canonical_word\n";
  for (auto const& [s, elems] : index.spheres()) {
    for (auto const& x : elems) os << s.m << ',' << s.n << ',' << format_element(x) << '\n';
  }
}

}  // namespace haagerup
