#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "haagerup/apartment.hpp"
#include "haagerup/ball.hpp"
#include "haagerup/report_json.hpp"

using namespace haagerup;

TEST_CASE("hull_shape examples") {
  for (auto c : {Case::a1xa1, Case::a2}) {
    CHECK(hull_shape({3, -1}, {3, -1}, c) == Shape{0, 0});
  }
  CHECK(hull_shape({0, 0}, {2, 3}, Case::a1xa1) == Shape{2, 3});
  CHECK(hull_shape({2, 3}, {0, 0}, Case::a1xa1) == Shape{2, 3});
  CHECK(hull_shape({0, 0}, {2, 3}, Case::a2) == Shape{2, 3});
  CHECK(hull_shape({2, 3}, {0, 0}, Case::a2) == Shape{3, 2});
  // e2 - e1 raises the type: shape (1,0); e1 - e2 lowers it.
  CHECK(hull_shape({0, 0}, {-1, 1}, Case::a2) == Shape{1, 0});
  CHECK(hull_shape({0, 0}, {1, -1}, Case::a2) == Shape{0, 1});
}

TEST_CASE("A2 lattice distance equals m + n") {
  // Hexagonal-lattice distance of i e1 + j e2 with e1, e2 at 60 degrees.
  auto hex = [](std::int64_t i, std::int64_t j) -> std::size_t {
    auto const ai = i < 0 ? -i : i;
    auto const aj = j < 0 ? -j : j;
    return static_cast<std::size_t>((i >= 0) == (j >= 0) ? ai + aj : std::max(ai, aj));
  };
  for (std::int64_t i = -6; i <= 6; ++i) {
    for (std::int64_t j = -6; j <= 6; ++j) {
      Shape const s = hull_shape({0, 0}, {i, j}, Case::a2);
      CHECK(s.total() == hex(i, j));
      CHECK(hull_shape({i, j}, {0, 0}, Case::a2) == s.swapped());
      // type difference i - j is m - n modulo 3
      auto const d = static_cast<std::int64_t>(s.m) - static_cast<std::int64_t>(s.n);
      CHECK(((i - j - d) % 3 + 3) % 3 == 0);
    }
  }
}

TEST_CASE("decompose_vertex") {
  for (auto c : {Case::a1xa1, Case::a2}) {
    ApartmentPoint const u{1, -2};
    ApartmentPoint const w{3, 0};
    Shape const full = hull_shape(u, w, c);
    CHECK(decompose_vertex(u, w, {0, 0}, c) == u);
    CHECK(decompose_vertex(u, w, full, c) == w);
    CHECK_THROWS_AS(decompose_vertex(u, w, {full.m + 1, 0}, c), PreconditionError);
  }
  // brute force over the (2,2) hull for the split (1,1) + (1,1)
  for (auto c : {Case::a1xa1, Case::a2}) {
    std::vector<ApartmentPoint> found;
    for (auto const& v : hull_grid({2, 2})) {
      if (hull_shape({0, 0}, v, c) == Shape{1, 1} && hull_shape(v, {2, 2}, c) == Shape{1, 1}) {
        found.push_back(v);
      }
    }
    REQUIRE(found.size() == 1);
    CHECK(decompose_vertex({0, 0}, {2, 2}, {1, 1}, c) == found.front());
  }
}

TEST_CASE("decompose_vertex is the unique split on a window of the lattice") {
  for (auto c : {Case::a1xa1, Case::a2}) {
    for (std::int64_t i = -3; i <= 3; ++i) {
      for (std::int64_t j = -3; j <= 3; ++j) {
        ApartmentPoint const w{i, j};
        Shape const full = hull_shape({0, 0}, w, c);
        for (std::size_t m1 = 0; m1 <= full.m; ++m1) {
          for (std::size_t n1 = 0; n1 <= full.n; ++n1) {
            Shape const s1{m1, n1};
            Shape const s2 = shape_difference(full, s1);
            std::size_t hits = 0;
            for (std::int64_t a = -7; a <= 7; ++a) {
              for (std::int64_t b = -7; b <= 7; ++b) {
                hits += hull_shape({0, 0}, {a, b}, c) == s1 && hull_shape({a, b}, w, c) == s2;
              }
            }
            CHECK(hits == 1);
            auto const v = decompose_vertex({0, 0}, w, s1, c);
            CHECK(hull_shape({0, 0}, v, c) == s1);
            CHECK(hull_shape(v, w, c) == s2);
          }
        }
      }
    }
  }
}

TEST_CASE("folding enumeration examples") {
  CHECK(enumerate_foldings(Case::a1xa1, {2, 3}).size() == 12);
  CHECK(count_foldings(Case::a1xa1, {2, 3}).total == 12);
  CHECK(count_foldings(Case::a2, {1, 1}).distinct == 4);
  CHECK(count_foldings(Case::a2, {0, 0}).distinct == 0);
  CHECK(count_foldings(Case::a2, {2, 1}).distinct == 9);
  CHECK(count_foldings(Case::a2, {2, 0}).distinct == 3);
  CHECK(count_foldings(Case::a2, {2, 1}).coincident == 6);
  CHECK(distinct_pair_count({2, 1}) == 9);
  CHECK(focal_point_count({2, 3}) == 12);
}

TEST_CASE("classify_folding") {
  CHECK(classify_folding({Case::a2, {1, 1}, {{1, 0}, {1, 0}}}) == FoldingClass::d_prime);
  CHECK(classify_folding({Case::a2, {1, 1}, {{0, 0}, {1, 0}}}) == FoldingClass::d_double_prime);
  CHECK(classify_folding({Case::a2, {2, 3}, {{2, 1}, {2, 3}}}) == FoldingClass::d_double_prime);
  CHECK(classify_folding({Case::a2, {2, 2}, {{0, 2}, {2, 0}}}) == FoldingClass::d_prime);
  CHECK_THROWS_AS(classify_folding({Case::a2, {2, 2}, {{0, 0}, {1, 2}}}), PreconditionError);
  CHECK_THROWS_AS(classify_folding({Case::a2, {1, 1}, {{0, 0}, {2, 0}}}), PreconditionError);
  CHECK_THROWS_AS(classify_folding({Case::a1xa1, {1, 1}, {{0, 0}}}), PreconditionError);
  CHECK(diagram_error({Case::a1xa1, {1, 1}, {{0, 0}}}).empty());
  CHECK_FALSE(diagram_error({Case::a1xa1, {1, 1}, {{0, 0}, {1, 1}}}).empty());
  CHECK_FALSE(diagram_error({Case::a2, {1, 1}, {{1, 0}, {0, 0}}}).empty());
}

TEST_CASE("every enumerated diagram is valid and distinct") {
  for (auto c : {Case::a1xa1, Case::a2}) {
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        auto const ds = enumerate_foldings(c, {m, n});
        std::set<std::vector<ApartmentPoint>> seen;
        for (auto const& d : ds) {
          CHECK(diagram_error(d).empty());
          seen.insert(d.focal);
        }
        CHECK(seen.size() == ds.size());
      }
    }
  }
}

TEST_CASE("folding JSON") {
  nlohmann::json j = FoldingDiagram{Case::a2, {2, 1}, {{0, 1}, {2, 1}}};
  CHECK(j.dump() == R"({"case":"a2","class":"D''","focal_points":[[0,1],[2,1]],"m":2,"n":1})");
}

TEST_CASE("SVG output matches the golden files") {
  struct Golden {
    FoldingDiagram d;
    char const* file;
  };
  for (auto const& g : {Golden{{Case::a1xa1, {2, 3}, {{1, 2}}}, "fold_a1xa1_2_3.svg"},
                        Golden{{Case::a2, {2, 1}, {{0, 1}, {2, 1}}}, "fold_a2_2_1.svg"}}) {
    std::ifstream in(std::string(HAAGERUP_GOLDEN_DIR) + "/" + g.file, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << g.file);
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(folding_svg(g.d) == expected.str());
  }
}
