#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "haagerup/group_model.hpp"

namespace haagerup {

inline constexpr std::size_t default_element_cap = 1'000'000;

/// The Cayley ball of radius R partitioned into shape spheres W_{m,n}.
/// Built once, read-only afterwards.
class SphereIndex {
 public:
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Elements in BFS discovery order; element 0 is the identity.
  std::vector<GroupElement> const& elements() const noexcept { return elements_; }
  /// BFS distance from the identity, parallel to elements().
  std::vector<std::size_t> const& distances() const noexcept { return distances_; }

  /// Shape-s elements in sorted canonical order. Throws PreconditionError
  /// when s.total() exceeds the enumerated radius.
  std::vector<GroupElement> const& sphere(Shape s) const;
  std::map<Shape, std::vector<GroupElement>> const& spheres() const noexcept { return spheres_; }

  /// Elements of total length at most r (r <= radius), sorted canonically.
  std::vector<GroupElement> ball(std::size_t r) const;

  bool contains(GroupElement const& x) const { return ids_.count(x) != 0; }

 private:
  friend SphereIndex ball(GroupModel const&, std::size_t, std::size_t);
  std::size_t radius_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> distances_;
  std::unordered_map<GroupElement, std::size_t> ids_;
  std::map<Shape, std::vector<GroupElement>> spheres_;
};

/// BFS over the Cayley graph with respect to N and N^{-1}. Throws
/// ResourceCapError once more than `cap` elements are discovered.
SphereIndex ball(GroupModel const& model, std::size_t radius,
                 std::size_t cap = default_element_cap);

/// {x a : a in N and N^{-1}}, deduplicated, in letter order.
std::vector<GroupElement> neighbors(GroupModel const& model, GroupElement const& x);

/// All (beta, gamma) with alpha = beta gamma, shape(beta) = s1 and
/// shape(gamma) = s2, found by scanning sphere(s1).
std::vector<std::pair<GroupElement, GroupElement>> factorization_candidates(
    GroupModel const& model, SphereIndex const& index, GroupElement const& alpha, Shape s1,
    Shape s2);

/// The unique factorization alpha = beta gamma with the prescribed shapes.
/// Throws PreconditionError if shape(alpha) != s1 + s2, and std::logic_error
/// if the scan finds zero or several candidates.
std::pair<GroupElement, GroupElement> factorize(GroupModel const& model,
                                                SphereIndex const& index,
                                                GroupElement const& alpha, Shape s1, Shape s2);

using ElementTriple = std::tuple<GroupElement, GroupElement, GroupElement>;

/// T_p: ordered triples (alpha, beta, gamma) of shape-(p,0) elements with
/// gamma beta alpha = identity. Requires index.radius() >= p.
std::vector<ElementTriple> enumerate_triangles(GroupModel const& model,
                                               SphereIndex const& index, std::size_t p);

/// CSV with header shape_m,shape_n,canonical_word; one row per element in
/// shape order, then canonical order.
void write_sphere_csv(std::ostream& os, SphereIndex const& index);

}  // namespace haagerup
