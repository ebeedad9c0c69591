#include <doctest.h>

#include <sstream>

#include "haagerup/group_model.hpp"
#include "haagerup/triangle_presentation.hpp"

using namespace haagerup;

namespace {

AxiomResult const& axiom(ValidationReport const& r, std::string const& name) {
  for (auto const& a : r.axioms) {
    if (a.name == name) return a;
  }
  FAIL("missing axiom " << name);
  return r.axioms.front();
}

}  // namespace

TEST_CASE("q = 2 cyclic presentation passes every axiom") {
  auto const pres = cyclic_q2_presentation();
  CHECK(pres.generator_count == 7);
  CHECK(pres.triples.size() == 21);
  auto const report = validate_triangle_presentation(pres);
  CHECK(report.pass());
  CHECK(report.first_failure() == nullptr);
  CHECK(report.link.vertex_count == 14);
  CHECK(report.link.regular);
  CHECK(report.link.degree == 3);
  CHECK(report.link.connected);
  CHECK(report.link.girth == 6);
  CHECK(report.link.diameter == 3);
  CHECK(report.link.edge_count == 21);
}

TEST_CASE("graph_stats on hand-built graphs") {
  // 6-cycle
  std::vector<std::vector<std::size_t>> cycle(6);
  for (std::size_t i = 0; i < 6; ++i) {
    cycle[i].push_back((i + 1) % 6);
    cycle[(i + 1) % 6].push_back(i);
  }
  auto s = graph_stats(cycle);
  CHECK(s.regular);
  CHECK(s.degree == 2);
  CHECK(s.girth == 6);
  CHECK(s.diameter == 3);

  // path on three vertices: acyclic
  std::vector<std::vector<std::size_t>> path{{1}, {0, 2}, {1}};
  s = graph_stats(path);
  CHECK_FALSE(s.regular);
  CHECK(s.girth == 0);
  CHECK(s.diameter == 2);

  std::vector<std::vector<std::size_t>> split{{1}, {0}, {3}, {2}};
  s = graph_stats(split);
  CHECK_FALSE(s.connected);
  CHECK(s.diameter == 0);
}

TEST_CASE("empty triple set fails the link condition") {
  TrianglePresentation pres;
  pres.q = 2;
  pres.generator_count = 7;
  auto const report = validate_triangle_presentation(pres);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(axiom(report, "link condition").pass);
  CHECK(axiom(report, "cyclic closure").pass);
}

TEST_CASE("deleting one triple's rotations fails cyclic closure") {
  auto pres = cyclic_q2_presentation();
  pres.triples.erase({1, 3, 0});
  pres.triples.erase({3, 0, 1});
  auto const report = validate_triangle_presentation(pres);
  CHECK_FALSE(axiom(report, "cyclic closure").pass);
  CHECK(report.first_failure()->name == "cyclic closure");
  CHECK_THROWS_WITH_AS(make_a2_group(pres), doctest::Contains("cyclic closure violated"),
                       InvalidPresentation);
}

TEST_CASE("two triples sharing a prefix fail pair-uniqueness") {
  auto pres = cyclic_q2_presentation();
  pres.triples.insert({0, 1, 5});
  pres.triples.insert({1, 5, 0});
  pres.triples.insert({5, 0, 1});
  auto const report = validate_triangle_presentation(pres);
  CHECK_FALSE(axiom(report, "pair-uniqueness").pass);
  CHECK_THROWS_WITH_AS(make_a2_group(pres), doctest::Contains("pair-uniqueness violated"),
                       InvalidPresentation);
}

TEST_CASE("out-of-range indices are reported") {
  auto pres = cyclic_q2_presentation();
  pres.triples.insert({0, 9, 2});
  auto const report = validate_triangle_presentation(pres);
  CHECK_FALSE(axiom(report, "index range").pass);
}

TEST_CASE("presentation files close rotations on load") {
  std::istringstream in(
      "# one base triple per line\n"
      "q 2\n"
      "0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n");
  auto const pres = parse_presentation(in);
  CHECK(pres.q == 2);
  CHECK(pres.generator_count == 7);
  CHECK(pres.triples == cyclic_q2_presentation().triples);
  CHECK(pres.rotations_closed_on_load == 14);
  CHECK(validate_triangle_presentation(pres).pass());

  auto const from_disk = load_presentation(HAAGERUP_DATA_DIR "/q2_cyclic.txt");
  CHECK(from_disk.triples == pres.triples);

  std::istringstream round_trip(format_presentation(pres));
  auto const again = parse_presentation(round_trip);
  CHECK(again.triples == pres.triples);
  CHECK(again.rotations_closed_on_load == 0);
}

TEST_CASE("malformed presentation files are rejected") {
  std::istringstream no_q("0 1 3\n");
  CHECK_THROWS_AS(parse_presentation(no_q), std::invalid_argument);
  std::istringstream short_line("q 2\n0 1\n");
  CHECK_THROWS_AS(parse_presentation(short_line), std::invalid_argument);
  std::istringstream negative("q 2\n0 -1 3\n");
  CHECK_THROWS_AS(parse_presentation(negative), std::invalid_argument);
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.txt"), std::invalid_argument);
}
