#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "haagerup/shape.hpp"

namespace haagerup {

/// A vertex of an apartment in lattice coordinates.
///
/// A1xA1: the square lattice, (i, j) being positions in the two tree factors.
/// A2: the triangular lattice, the point i e1 + j e2 with e1, e2 unit edge
/// vectors at 60 degrees; e1 raises the vertex type by one and e2 lowers it.
/// Inside the hull of (0, 0) and a vertex of shape (m, n) these are the
/// hull-relative coordinates, 0 <= i <= m and 0 <= j <= n.
struct ApartmentPoint {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend constexpr auto operator<=>(ApartmentPoint const&, ApartmentPoint const&) = default;
};

/// Shape of the ordered pair (u, v) in the lattice model.
Shape hull_shape(ApartmentPoint u, ApartmentPoint v, Case c);

/// The unique v with hull_shape(u, v) = s1 and hull_shape(v, w) = s2 where
/// hull_shape(u, w) = s1 + s2. Throws PreconditionError when s1 does not fit.
ApartmentPoint decompose_vertex(ApartmentPoint u, ApartmentPoint w, Shape s1, Case c);

/// Every lattice point of the hull of (0, 0) and (m, n), in (i, j) order.
std::vector<ApartmentPoint> hull_grid(Shape s);

enum class FoldingClass { d_prime, d_double_prime };
std::string to_string(FoldingClass k);

/// A folding diagram on the hull of shape `hull`, recorded by its focal
/// points. A1xA1 diagrams have one focal point. A2 diagrams have a sorted
/// pair {P, Q}, possibly equal.
struct FoldingDiagram {
  Case kind = Case::a1xa1;
  Shape hull;
  std::vector<ApartmentPoint> focal;
  friend bool operator==(FoldingDiagram const&, FoldingDiagram const&) = default;
};

/// Empty string if `d` is well formed, otherwise the reason it is not.
/// A2 pairs must be coincident, share a coordinate line, or have equal
/// height i + j.
std::string diagram_error(FoldingDiagram const& d);

/// A1xA1: one diagram per grid point. A2: one coincident pair per grid
/// point, then every unordered pair of distinct points on a common
/// coordinate line, sorted.
std::vector<FoldingDiagram> enumerate_foldings(Case c, Shape s);

/// A2 only. D' for coincident or equal-height pairs, D'' otherwise.
/// Throws PreconditionError for malformed or A1xA1 diagrams.
FoldingClass classify_folding(FoldingDiagram const& d);

struct FoldingCounts {
  std::size_t total = 0;
  std::size_t coincident = 0;  // D' representatives (A2)
  std::size_t distinct = 0;    // D'' (A2)
};

FoldingCounts count_foldings(Case c, Shape s);

/// (m+1)(n+1).
std::size_t focal_point_count(Shape s);
/// (1/2)(m+1)(n+1)(m+n).
std::size_t distinct_pair_count(Shape s);

/// Flat SVG of the hull grid with the focal points marked. Output depends
/// only on the diagram.
std::string folding_svg(FoldingDiagram const& d);

}  // namespace haagerup
