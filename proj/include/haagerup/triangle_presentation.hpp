#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <vector>

namespace haagerup {

using Triple = std::array<std::size_t, 3>;

/// A set T of index triples over q^2 + q + 1 generators. Each (x, y, z) in T
/// stands for the relation a_x a_y a_z = 1.
struct TrianglePresentation {
  std::size_t q = 0;
  std::size_t generator_count = 0;
  std::set<Triple> triples;
  // Number of cyclic rotations that were missing from the source file and
  // added when it was loaded. Zero for presentations built in memory.
  std::size_t rotations_closed_on_load = 0;
};

/// The q = 2 presentation with triples (i, i+1, i+3) mod 7 and all their
/// cyclic rotations.
TrianglePresentation cyclic_q2_presentation();

/// Parses "q <q>" followed by one "x y z" line per triple. Missing cyclic
/// rotations are added; blank lines and '#' comments are ignored.
TrianglePresentation parse_presentation(std::istream& in);
TrianglePresentation load_presentation(std::filesystem::path const& path);
std::string format_presentation(TrianglePresentation const& pres);

struct LinkGraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool regular = false;
  std::size_t degree = 0;  // meaningful only when regular
  bool connected = false;
  std::size_t girth = 0;     // 0 when acyclic
  std::size_t diameter = 0;  // 0 when disconnected
};

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::size_t violations = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  LinkGraphStats link;
  std::size_t rotations_closed_on_load = 0;

  bool pass() const;
  /// First failing axiom, or nullptr.
  AxiomResult const* first_failure() const;
};

/// Axioms checked, in order: "index range", "cyclic closure",
/// "pair-uniqueness", "link condition". The link graph is bipartite on two
/// copies of the generator set with an edge (x | y) whenever some (x, y, .)
/// is in T; the link condition asks for the incidence graph of a projective
/// plane of order q: (q+1)-regular, girth 6, diameter 3, with q^2+q+1
/// vertices on each side.
ValidationReport validate_triangle_presentation(TrianglePresentation const& pres);

/// Bipartite link graph as adjacency lists; left vertices are 0..N-1 and
/// right vertices N..2N-1.
std::vector<std::vector<std::size_t>> link_graph(TrianglePresentation const& pres);

LinkGraphStats graph_stats(std::vector<std::vector<std::size_t>> const& adjacency);

}  // namespace haagerup
