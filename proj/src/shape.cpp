#include "haagerup/shape.hpp"

namespace haagerup {

std::string to_string(Case c) { return c == Case::a1xa1 ? "a1xa1" : "a2"; }

Case case_from_string(std::string const& text) {
  if (text == "a1xa1") return Case::a1xa1;
  if (text == "a2") return Case::a2;
  throw std::invalid_argument("unknown case '" + text + "' (expected a1xa1 or a2)");
}

Shape shape_difference(Shape a, Shape b) {
  if (b.m > a.m || b.n > a.n) {
    throw PreconditionError("shape (" + std::to_string(b.m) + "," + std::to_string(b.n) +
                            ") does not fit inside (" + std::to_string(a.m) + "," +
                            std::to_string(a.n) + ")");
  }
  return {a.m - b.m, a.n - b.n};
}

std::ostream& operator<<(std::ostream& os, Shape s) {
  return os << '(' << s.m << ',' << s.n << ')';
}

}  // namespace haagerup
