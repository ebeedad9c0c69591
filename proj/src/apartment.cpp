#include "haagerup/apartment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace haagerup {

namespace {

struct Vec {
  std::int64_t i;
  std::int64_t j;
};

struct Frame {
  Vec up;    // raises the type
  Vec down;  // lowers the type, 60 degrees from `up`
};

// The six sectors around a vertex of the triangular lattice, in angular order.
constexpr std::array<Frame, 6> a2_frames{{
    {{1, 0}, {0, 1}},
    {{-1, 1}, {0, 1}},
    {{-1, 1}, {-1, 0}},
    {{0, -1}, {-1, 0}},
    {{0, -1}, {1, -1}},
    {{1, 0}, {1, -1}},
}};

struct Coordinates {
  Frame frame;
  Shape shape;
};

Coordinates a2_coordinates(Vec d) {
  for (auto const& f : a2_frames) {
    std::int64_t const det = f.up.i * f.down.j - f.up.j * f.down.i;
    std::int64_t const m = (d.i * f.down.j - d.j * f.down.i) / det;
    std::int64_t const n = (f.up.i * d.j - f.up.j * d.i) / det;
    if (m >= 0 && n >= 0) {
      return {f, {static_cast<std::size_t>(m), static_cast<std::size_t>(n)}};
    }
  }
  // The six sectors cover the plane.
  throw std::logic_error("a2_coordinates: no sector contains the vector");
}

std::int64_t sign(std::int64_t x) { return (x > 0) - (x < 0); }

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

bool in_grid(ApartmentPoint p, Shape s) {
  return p.i >= 0 && p.j >= 0 && static_cast<std::size_t>(p.i) <= s.m &&
         static_cast<std::size_t>(p.j) <= s.n;
}

std::string point_text(ApartmentPoint p) {
  std::ostringstream os;
  os << '(' << p.i << ',' << p.j << ')';
  return os.str();
}

}  // namespace

Shape hull_shape(ApartmentPoint u, ApartmentPoint v, Case c) {
  Vec const d{v.i - u.i, v.j - u.j};
  if (c == Case::a1xa1) {
    return {static_cast<std::size_t>(abs64(d.i)), static_cast<std::size_t>(abs64(d.j))};
  }
  return a2_coordinates(d).shape;
}

ApartmentPoint decompose_vertex(ApartmentPoint u, ApartmentPoint w, Shape s1, Case c) {
  Shape const full = hull_shape(u, w, c);
  if (s1.m > full.m || s1.n > full.n) {
    std::ostringstream os;
    os << "decompose_vertex: " << s1 << " does not fit inside shape " << full;
    throw PreconditionError(os.str());
  }
  auto const m1 = static_cast<std::int64_t>(s1.m);
  auto const n1 = static_cast<std::int64_t>(s1.n);
  if (c == Case::a1xa1) {
    return {u.i + sign(w.i - u.i) * m1, u.j + sign(w.j - u.j) * n1};
  }
  Frame const f = a2_coordinates({w.i - u.i, w.j - u.j}).frame;
  return {u.i + m1 * f.up.i + n1 * f.down.i, u.j + m1 * f.up.j + n1 * f.down.j};
}

std::vector<ApartmentPoint> hull_grid(Shape s) {
  std::vector<ApartmentPoint> pts;
  pts.reserve((s.m + 1) * (s.n + 1));
  for (std::size_t i = 0; i <= s.m; ++i) {
    for (std::size_t j = 0; j <= s.n; ++j) {
      pts.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
    }
  }
  return pts;
}

std::string to_string(FoldingClass k) { return k == FoldingClass::d_prime ? "D'" : "D''"; }

std::string diagram_error(FoldingDiagram const& d) {
  std::size_t const want = d.kind == Case::a1xa1 ? 1 : 2;
  if (d.focal.size() != want) {
    return "expected " + std::to_string(want) + " focal point(s), got " +
           std::to_string(d.focal.size());
  }
  for (auto const& p : d.focal) {
    if (!in_grid(p, d.hull)) return "focal point " + point_text(p) + " lies outside the hull";
  }
  if (d.kind == Case::a2) {
    auto const& p = d.focal[0];
    auto const& q = d.focal[1];
    if (q < p) return "focal pair is not sorted";
    bool const line = p.i == q.i || p.j == q.j;
    bool const level = p.i + p.j == q.i + q.j;
    if (!line && !level) {
      return "focal points " + point_text(p) + " and " + point_text(q) +
             " share no coordinate line and differ in height";
    }
  }
  return {};
}

std::vector<FoldingDiagram> enumerate_foldings(Case c, Shape s) {
  auto const grid = hull_grid(s);
  std::vector<FoldingDiagram> out;
  if (c == Case::a1xa1) {
    for (auto const& p : grid) out.push_back({c, s, {p}});
    return out;
  }
  for (auto const& p : grid) out.push_back({c, s, {p, p}});
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      if (grid[a].i == grid[b].i || grid[a].j == grid[b].j) {
        out.push_back({c, s, {grid[a], grid[b]}});
      }
    }
  }
  return out;
}

FoldingClass classify_folding(FoldingDiagram const& d) {
  if (d.kind != Case::a2) {
    throw PreconditionError("classify_folding: D'/D'' classes exist only for a2 diagrams");
  }
  if (auto err = diagram_error(d); !err.empty()) {
    throw PreconditionError("classify_folding: " + err);
  }
  auto const& p = d.focal[0];
  auto const& q = d.focal[1];
  if (p == q || p.i + p.j == q.i + q.j) return FoldingClass::d_prime;
  return FoldingClass::d_double_prime;
}

FoldingCounts count_foldings(Case c, Shape s) {
  FoldingCounts counts;
  for (auto const& d : enumerate_foldings(c, s)) {
    ++counts.total;
    if (c == Case::a1xa1) continue;
    if (classify_folding(d) == FoldingClass::d_prime) {
      ++counts.coincident;
    } else {
      ++counts.distinct;
    }
  }
  return counts;
}

std::size_t focal_point_count(Shape s) { return (s.m + 1) * (s.n + 1); }

std::size_t distinct_pair_count(Shape s) { return (s.m + 1) * (s.n + 1) * (s.m + s.n) / 2; }

std::string folding_svg(FoldingDiagram const& d) {
  constexpr double cell = 40.0;
  constexpr double margin = 20.0;
  double const rise = d.kind == Case::a2 ? std::sqrt(3.0) / 2.0 : 1.0;
  double const skew = d.kind == Case::a2 ? 0.5 : 0.0;
  auto const m = static_cast<double>(d.hull.m);
  auto const n = static_cast<double>(d.hull.n);

  auto x_of = [&](double i, double j) { return margin + cell * (i + skew * j); };
  auto y_of = [&](double j) { return margin + cell * rise * (n - j); };

  char buf[160];
  std::string out;
  auto line = [&](double i0, double j0, double i1, double j1, char const* style) {
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" %s/>\n",
                  x_of(i0, j0), y_of(j0), x_of(i1, j1), y_of(j1), style);
    out += buf;
  };
  auto dot = [&](double i, double j, double r, char const* style) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" %s/>\n",
                  x_of(i, j), y_of(j), r, style);
    out += buf;
  };

  double const width = 2 * margin + cell * (m + skew * n);
  double const height = 2 * margin + cell * rise * n;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\">\n",
                width, height);
  out += buf;

  char const* grid_style = "stroke=\"#999\" stroke-width=\"1\"";
  for (std::size_t i = 0; i <= d.hull.m; ++i) line(double(i), 0, double(i), n, grid_style);
  for (std::size_t j = 0; j <= d.hull.n; ++j) line(0, double(j), m, double(j), grid_style);
  if (d.kind == Case::a2) {
    // Third edge direction e2 - e1, clipped to the hull.
    for (std::size_t k = 1; k < d.hull.m + d.hull.n; ++k) {
      double const i0 = std::min<double>(double(k), m);
      double const j0 = double(k) - i0;
      double const j1 = std::min<double>(double(k), n);
      double const i1 = double(k) - j1;
      line(i0, j0, i1, j1, grid_style);
    }
  }
  for (auto const& p : hull_grid(d.hull)) dot(double(p.i), double(p.j), 2.0, "fill=\"#999\"");
  if (d.focal.size() == 2 && d.focal[0] != d.focal[1]) {
    line(double(d.focal[0].i), double(d.focal[0].j), double(d.focal[1].i),
         double(d.focal[1].j), "stroke=\"#c00\" stroke-width=\"2\"");
  }
  for (auto const& p : d.focal) dot(double(p.i), double(p.j), 5.0, "fill=\"#c00\"");
  out += "</svg>\n";
  return out;
}

}  // namespace haagerup
