#include "haagerup/triangle_presentation.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace haagerup {

namespace {

Triple rotate(Triple t) { return {t[1], t[2], t[0]}; }

std::string triple_text(Triple const& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

}  // namespace

TrianglePresentation cyclic_q2_presentation() {
  TrianglePresentation pres;
  pres.q = 2;
  pres.generator_count = 7;
  for (std::size_t i = 0; i < 7; ++i) {
    Triple t{i, (i + 1) % 7, (i + 3) % 7};
    pres.triples.insert(t);
    pres.triples.insert(rotate(t));
    pres.triples.insert(rotate(rotate(t)));
  }
  return pres;
}

TrianglePresentation parse_presentation(std::istream& in) {
  TrianglePresentation pres;
  std::string line;
  bool have_q = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_q) {
      long long q = 0;
      if (head != "q" || !(ls >> q) || q < 2) {
        throw std::invalid_argument("presentation line " + std::to_string(line_no) +
                                    ": expected 'q <q>' with q >= 2");
      }
      pres.q = static_cast<std::size_t>(q);
      pres.generator_count = pres.q * pres.q + pres.q + 1;
      have_q = true;
      continue;
    }
    std::istringstream ts(line);
    long long x = 0, y = 0, z = 0;
    std::string extra;
    if (!(ts >> x >> y >> z) || (ts >> extra) || x < 0 || y < 0 || z < 0) {
      throw std::invalid_argument("presentation line " + std::to_string(line_no) +
                                  ": expected three nonnegative indices");
    }
    pres.triples.insert({static_cast<std::size_t>(x), static_cast<std::size_t>(y),
                         static_cast<std::size_t>(z)});
  }
  if (!have_q) throw std::invalid_argument("presentation: missing 'q <q>' line");

  std::set<Triple> closed = pres.triples;
  for (auto const& t : pres.triples) {
    closed.insert(rotate(t));
    closed.insert(rotate(rotate(t)));
  }
  pres.rotations_closed_on_load = closed.size() - pres.triples.size();
  pres.triples = std::move(closed);
  return pres;
}

TrianglePresentation load_presentation(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file " + path.string());
  return parse_presentation(in);
}

std::string format_presentation(TrianglePresentation const& pres) {
  std::ostringstream os;
  os << "q " << pres.q << '\n';
  for (auto const& t : pres.triples) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

bool ValidationReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](auto const& a) { return a.pass; });
}

AxiomResult const* ValidationReport::first_failure() const {
  for (auto const& a : axioms) {
    if (!a.pass) return &a;
  }
  return nullptr;
}

std::vector<std::vector<std::size_t>> link_graph(TrianglePresentation const& pres) {
  std::size_t const n = pres.generator_count;
  std::vector<std::vector<std::size_t>> adj(2 * n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto const& t : pres.triples) {
    if (t[0] >= n || t[1] >= n) continue;
    if (!seen.insert({t[0], t[1]}).second) continue;
    adj[t[0]].push_back(n + t[1]);
    adj[n + t[1]].push_back(t[0]);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

LinkGraphStats graph_stats(std::vector<std::vector<std::size_t>> const& adj) {
  LinkGraphStats stats;
  std::size_t const v = adj.size();
  stats.vertex_count = v;
  std::size_t degree_sum = 0;
  stats.regular = true;
  for (std::size_t i = 0; i < v; ++i) {
    degree_sum += adj[i].size();
    if (adj[i].size() != adj[0].size()) stats.regular = false;
  }
  stats.edge_count = degree_sum / 2;
  stats.degree = (v > 0 && stats.regular) ? adj[0].size() : 0;
  if (v == 0) return stats;

  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  std::size_t girth = unreached;
  std::size_t diameter = 0;
  bool connected = true;
  for (std::size_t s = 0; s < v; ++s) {
    std::vector<std::size_t> dist(v, unreached), parent(v, unreached);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t const u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (dist[w] == unreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
    for (std::size_t d : dist) {
      if (d == unreached) connected = false;
      else diameter = std::max(diameter, d);
    }
  }
  stats.connected = connected;
  stats.diameter = connected ? diameter : 0;
  stats.girth = girth == unreached ? 0 : girth;
  return stats;
}

ValidationReport validate_triangle_presentation(TrianglePresentation const& pres) {
  ValidationReport report;
  report.rotations_closed_on_load = pres.rotations_closed_on_load;
  std::size_t const n = pres.generator_count;

  AxiomResult range{"index range", true, 0, ""};
  if (pres.q < 2 || n != pres.q * pres.q + pres.q + 1) {
    range.pass = false;
    range.detail = "generator_count must equal q^2+q+1 with q >= 2";
  }
  for (auto const& t : pres.triples) {
    if (t[0] >= n || t[1] >= n || t[2] >= n) {
      ++range.violations;
      if (range.detail.empty()) range.detail = "index out of range in " + triple_text(t);
    }
  }
  range.pass = range.pass && range.violations == 0;
  report.axioms.push_back(range);

  AxiomResult cyclic{"cyclic closure", true, 0, ""};
  for (auto const& t : pres.triples) {
    if (!pres.triples.count(rotate(t))) {
      ++cyclic.violations;
      if (cyclic.detail.empty()) {
        cyclic.detail = triple_text(t) + " present but " + triple_text(rotate(t)) + " missing";
      }
    }
  }
  cyclic.pass = cyclic.violations == 0;
  report.axioms.push_back(cyclic);

  AxiomResult unique{"pair-uniqueness", true, 0, ""};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_two;
  for (auto const& t : pres.triples) {
    if (++first_two[{t[0], t[1]}] == 2) {
      ++unique.violations;
      if (unique.detail.empty()) {
        unique.detail = "two triples start with (" + std::to_string(t[0]) + "," +
                        std::to_string(t[1]) + ")";
      }
    }
  }
  unique.pass = unique.violations == 0;
  report.axioms.push_back(unique);

  report.link = graph_stats(link_graph(pres));
  AxiomResult link{"link condition", true, 0, ""};
  auto const& s = report.link;
  bool const ok = range.pass && s.vertex_count == 2 * n && s.regular &&
                  s.degree == pres.q + 1 && s.connected && s.girth == 6 && s.diameter == 3;
  if (!ok) {
    link.pass = false;
    link.violations = 1;
    std::ostringstream os;
    os << "link graph has " << s.vertex_count << " vertices, "
       << (s.regular ? "degree " + std::to_string(s.degree) : std::string("irregular"))
       << ", girth " << s.girth << ", diameter " << s.diameter
       << (s.connected ? "" : ", disconnected");
    link.detail = os.str();
  }
  report.axioms.push_back(link);
  return report;
}

}  // namespace haagerup
