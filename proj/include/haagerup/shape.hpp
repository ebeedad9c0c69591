#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

namespace haagerup {

/// Which family of buildings a computation refers to. Selects the branch of
/// the bound p(m, n) and the lattice model used for apartments.
enum class Case { a1xa1, a2 };

std::string to_string(Case c);
Case case_from_string(std::string const& text);

/// Shape of an ordered vertex pair: the two side lengths of their convex hull.
/// The graph distance between the vertices is m + n.
struct Shape {
  std::size_t m = 0;
  std::size_t n = 0;

  constexpr std::size_t total() const noexcept { return m + n; }
  constexpr Shape swapped() const noexcept { return {n, m}; }

  friend constexpr auto operator<=>(Shape const&, Shape const&) = default;
  friend constexpr Shape operator+(Shape a, Shape b) noexcept {
    return {a.m + b.m, a.n + b.n};
  }
};

/// Componentwise a - b; throws if some component would go negative.
Shape shape_difference(Shape a, Shape b);

std::ostream& operator<<(std::ostream& os, Shape s);

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured element cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace haagerup
