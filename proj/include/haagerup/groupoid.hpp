#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "haagerup/ball.hpp"
#include "haagerup/convolution.hpp"
#include "haagerup/group_model.hpp"

namespace haagerup {

/// A homomorphism phi from the model's group to Z/k, given by the image of
/// each generator. The subgroup is ker(phi).
struct SubgroupSpec {
  std::size_t order = 1;              // k
  std::vector<std::size_t> image;     // image[i] = phi(a_i) in 0..k-1
};

/// Parses "cyclic k" followed by exactly one "index target" line per
/// generator. Blank lines and '#' comments are ignored.
SubgroupSpec parse_subgroup_spec(std::istream& in, std::size_t generator_count);
SubgroupSpec load_subgroup_spec(std::filesystem::path const& path,
                                std::size_t generator_count);

/// phi(a_i) = 0 for every generator.
SubgroupSpec trivial_subgroup_spec(std::size_t generator_count);
/// phi(a_i) = r for every generator: exponent sum mod r.
SubgroupSpec exponent_sum_spec(std::size_t generator_count, std::size_t r);

class InvalidSubgroupSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The orbit [u, v] of a vertex pair under the kernel K: the coset K u,
/// recorded as phi(u), and g = u^{-1} v.
struct GroupoidElement {
  std::size_t coset = 0;
  GroupElement g;

  Shape shape() const noexcept { return g.shape(); }
  friend auto operator<=>(GroupoidElement const&, GroupoidElement const&) = default;
  friend bool operator==(GroupoidElement const&, GroupoidElement const&) = default;
};

std::string format_groupoid_element(GroupoidElement const& a);

class ComposabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The commutant groupoid K \ (G x G) of the kernel K, acting on the vertex
/// set G on the right and commuting with the left action of K.
class Groupoid {
 public:
  GroupModel const& model() const noexcept { return *model_; }
  SubgroupSpec const& spec() const noexcept { return spec_; }
  std::size_t unit_count() const noexcept { return spec_.order; }

  /// phi(x): the coset K x.
  std::size_t coset_of(GroupElement const& x) const;
  bool in_kernel(GroupElement const& x) const { return coset_of(x) == 0; }

  GroupoidElement unit(std::size_t coset) const;
  std::vector<GroupoidElement> units() const;
  /// Compatible with the vertex shape: sh(v, v a) = shape(a).
  Shape shape(GroupoidElement const& a) const noexcept { return a.shape(); }
  GroupoidElement range(GroupoidElement const& a) const;
  GroupoidElement source(GroupoidElement const& a) const;
  bool composable(GroupoidElement const& a, GroupoidElement const& b) const;

  /// Throws ComposabilityError unless source(a) = range(b).
  GroupoidElement product(GroupoidElement const& a, GroupoidElement const& b) const;
  std::optional<GroupoidElement> try_product(GroupoidElement const& a,
                                             GroupoidElement const& b) const;
  GroupoidElement inverse(GroupoidElement const& a) const;

  /// The orbit [u, v].
  GroupoidElement between(GroupElement const& u, GroupElement const& v) const;

  /// v a = v g. Throws ComposabilityError when coset_of(v) != a.coset.
  GroupElement act(GroupElement const& v, GroupoidElement const& a) const;
  std::optional<GroupElement> try_act(GroupElement const& v, GroupoidElement const& a) const;

  /// Left action of the kernel on vertices; throws PreconditionError when
  /// c is not in K.
  GroupElement kernel_act(GroupElement const& c, GroupElement const& v) const;

  /// Every groupoid element whose g lies in `elements`, coset-major.
  std::vector<GroupoidElement> elements_over(std::vector<GroupElement> const& elements) const;

 private:
  friend Groupoid make_commutant_groupoid(GroupModel const&, SubgroupSpec);
  GroupModel const* model_ = nullptr;
  SubgroupSpec spec_;
};

/// Checks that every relator maps to 0; throws InvalidSubgroupSpec naming the
/// first relator that does not. The model must outlive the groupoid.
Groupoid make_commutant_groupoid(GroupModel const& model, SubgroupSpec spec);

/// All composable (b, c) with b c = a, shape(b) = s1 and shape(c) = s2,
/// found by scanning the shape-s1 sphere over every coset.
std::vector<std::pair<GroupoidElement, GroupoidElement>> gpd_factorization_candidates(
    Groupoid const& gpd, SphereIndex const& index, GroupoidElement const& a, Shape s1,
    Shape s2);

/// The unique factorization; PreconditionError on shape mismatch and
/// std::logic_error if the scan does not find exactly one candidate.
std::pair<GroupoidElement, GroupoidElement> gpd_factorize(Groupoid const& gpd,
                                                          SphereIndex const& index,
                                                          GroupoidElement const& a, Shape s1,
                                                          Shape s2);

using GroupoidFunction = SupportedFunction<GroupoidElement>;

/// (f * g)(w) = sum over v a = w of f(v) g(a), for f on vertices and g on
/// groupoid elements.
GroupFunction act_convolve(Groupoid const& gpd, GroupFunction const& f,
                           GroupoidFunction const& g);

/// Groupoid algebra product, over composable pairs.
GroupoidFunction gpd_convolve(Groupoid const& gpd, GroupoidFunction const& f,
                              GroupoidFunction const& g);

/// Verifies that g is supported on shape s, then compares
/// ||f * g||_2 with p(s) ||f||_2 ||g||_2.
CheckReport check_groupoid_inequality(Groupoid const& gpd, Case c, GroupFunction const& f,
                                      GroupoidFunction const& g, Shape s,
                                      double tol = inequality_tolerance);

/// Transport of functions on K to the vertex set and the groupoid:
/// f'(c) = f(c) on kernel vertices, g'([e, h]) = g(h). Both throw
/// PreconditionError when a support element lies outside K.
GroupFunction transport_vertex_function(Groupoid const& gpd, GroupFunction const& f);
GroupoidFunction transport_convolver(Groupoid const& gpd, GroupFunction const& g);

}  // namespace haagerup
