#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "haagerup/apartment.hpp"
#include "haagerup/ball.hpp"
#include "haagerup/convolution.hpp"
#include "haagerup/groupoid.hpp"
#include "haagerup/rng.hpp"

using namespace haagerup;

namespace {

struct Fixture {
  GroupModel model;
  SphereIndex index;
};

Fixture const& f2xf2() {
  static Fixture const f{make_a1xa1_group(2, 2), ball(make_a1xa1_group(2, 2), 4)};
  return f;
}
Fixture const& a2() {
  static Fixture const f{make_a2_group(cyclic_q2_presentation()),
                         ball(make_a2_group(cyclic_q2_presentation()), 4)};
  return f;
}

std::vector<Fixture const*> both() { return {&f2xf2(), &a2()}; }

GroupElement random_element(GroupModel const& g, SplitMix64& rng, std::size_t max_len) {
  Word w;
  std::size_t const len = rng.below(max_len + 1);
  auto const& letters = g.letters();
  for (std::size_t k = 0; k < len; ++k) w.push_back(letters[rng.below(letters.size())]);
  return g.canonical_form(w);
}

GroupFunction random_function(GroupModel const& g, SplitMix64& rng, std::size_t terms,
                              std::size_t max_len) {
  GroupFunction f;
  for (std::size_t k = 0; k < terms; ++k) {
    f.add(random_element(g, rng, max_len), rng.uniform01() - 0.25);
  }
  return f;
}

DenseMatrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c) {
  DenseMatrix m(r, c);
  for (auto& v : m.data) v = rng.uniform01();
  return m;
}

std::vector<std::size_t> random_cuts(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> cuts{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (rng.below(3) == 0) cuts.push_back(i);
  }
  cuts.push_back(n);
  return cuts;
}

}  // namespace

TEST_CASE("inverse shape, x x^{-1} = e, canonical_form is idempotent") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    for (auto const& x : fx->index.elements()) {
      auto const inv = g.inverse(x);
      // Factor lengths are inversion invariant; the a2 shape is reversed.
      CHECK(inv.shape() == (g.kind() == Case::a2 ? x.shape().swapped() : x.shape()));
      CHECK(g.multiply(x, inv).is_identity());
      CHECK(g.multiply(inv, x).is_identity());
      CHECK(g.canonical_form(x.word()) == x);
      CHECK(g.is_canonical(x));
    }
  }
}

TEST_CASE("associativity: exhaustive on ball(2), random beyond") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    auto const b2 = fx->index.ball(2);
    std::size_t bad = 0;
    for (auto const& x : b2) {
      for (auto const& y : b2) {
        auto const xy = g.multiply(x, y);
        for (auto const& z : b2) bad += g.multiply(xy, z) != g.multiply(x, g.multiply(y, z));
      }
    }
    CHECK(bad == 0);
    SplitMix64 rng(101);
    for (int t = 0; t < 3000; ++t) {
      auto const x = random_element(g, rng, 10);
      auto const y = random_element(g, rng, 10);
      auto const z = random_element(g, rng, 10);
      CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
    }
  }
}

TEST_CASE("word length never exceeds the input length") {
  for (auto const* fx : both()) {
    SplitMix64 rng(7);
    for (int t = 0; t < 5000; ++t) {
      Word w;
      std::size_t const len = rng.below(12);
      for (std::size_t k = 0; k < len; ++k) {
        w.push_back(fx->model.letters()[rng.below(fx->model.letters().size())]);
      }
      CHECK(fx->model.canonical_form(w).length() <= w.size());
    }
  }
}

TEST_CASE("factorization is an injection for every split") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    for (auto const& [s, elems] : fx->index.spheres()) {
      if (s.total() > 3) continue;
      for (std::size_t m1 = 0; m1 <= s.m; ++m1) {
        for (std::size_t n1 = 0; n1 <= s.n; ++n1) {
          Shape const s1{m1, n1};
          Shape const s2 = shape_difference(s, s1);
          std::set<std::pair<GroupElement, GroupElement>> images;
          for (auto const& a : elems) {
            auto const bg = factorize(g, fx->index, a, s1, s2);
            CHECK(bg.first.shape() == s1);
            CHECK(bg.second.shape() == s2);
            images.insert(bg);
          }
          CHECK(images.size() == elems.size());
        }
      }
    }
  }
}

TEST_CASE("T_p is closed under cyclic rotation") {
  auto const& fx = a2();
  for (std::size_t p = 1; p <= 2; ++p) {
    auto const tp = enumerate_triangles(fx.model, fx.index, p);
    std::set<ElementTriple> const set(tp.begin(), tp.end());
    for (auto const& [a, b, c] : tp) CHECK(set.count({c, a, b}) == 1);
  }
}

TEST_CASE("convolution is associative and l1-contractive") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    SplitMix64 rng(31);
    for (int t = 0; t < 40; ++t) {
      auto const a = random_function(g, rng, 12, 4);
      auto const b = random_function(g, rng, 12, 4);
      auto const c = random_function(g, rng, 12, 4);
      auto const left = convolve(g, convolve(g, a, b), c);
      auto const right = convolve(g, a, convolve(g, b, c));
      double const scale = a.l1() * b.l1() * c.l1();
      std::set<GroupElement> keys;
      for (auto const& [k, v] : left.entries()) keys.insert(k);
      for (auto const& [k, v] : right.entries()) keys.insert(k);
      for (auto const& k : keys) CHECK(std::abs(left(k) - right(k)) <= 1e-12 * scale);
      CHECK(convolve(g, a, b).l2() <= a.l2() * b.l1() * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("Haagerup inequality on random inputs for m + n <= 3") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    Case const c = g.kind();
    SplitMix64 rng(37);
    auto const left = fx->index.ball(2);
    for (auto const& [s, sphere] : fx->index.spheres()) {
      if (s.total() > 3) continue;
      for (int t = 0; t < 5; ++t) {
        GroupFunction f, h;
        for (auto const& x : left) f.set(x, rng.uniform01() - 0.5);
        for (auto const& x : sphere) h.set(x, rng.uniform01() - 0.5);
        auto const r = check_inequality(g, c, f, h, s, 1e-9);
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("truncated norms are monotone and below the bound") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    for (Shape s : {Shape{1, 0}, Shape{0, 1}, Shape{1, 1}}) {
      auto const chi = GroupFunction::indicator(fx->index.sphere(s));
      double const cap = haagerup_bound(g.kind(), s) * chi.l2() * (1.0 + 1e-9);
      double prev = 0.0;
      for (std::size_t r = 0; r <= 3; ++r) {
        auto const est = truncated_norm(g, fx->index, chi, r);
        CHECK(est.lower_bound >= prev * (1.0 - 1e-9));
        CHECK(est.lower_bound <= cap);
        prev = est.lower_bound;
      }
    }
  }
}

TEST_CASE("operator-matrix norm bounds") {
  SplitMix64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::size_t const r = 1 + rng.below(14);
    std::size_t const c = 1 + rng.below(14);
    auto const m = random_matrix(rng, r, c);
    auto const rc = random_cuts(rng, r);
    auto const cc = random_cuts(rng, c);
    double const full = spectral_norm(m);
    double const mid = spectral_norm(block_norm_matrix(m, rc, cc));
    double const top = block_norm_frobenius(m, rc, cc);
    CHECK(full <= mid * (1.0 + 1e-9));
    CHECK(mid <= top * (1.0 + 1e-9));
  }
}

TEST_CASE("entrywise domination bounds the norm") {
  SplitMix64 rng(43);
  for (int t = 0; t < 100; ++t) {
    std::size_t const r = 1 + rng.below(14);
    std::size_t const c = 1 + rng.below(14);
    auto const s = random_matrix(rng, r, c);
    DenseMatrix tm(r, c);
    for (std::size_t k = 0; k < s.data.size(); ++k) tm.data[k] = s.data[k] * rng.uniform01();
    CHECK(spectral_norm(tm) <= spectral_norm(s) * (1.0 + 1e-9));
  }
}

TEST_CASE("triangle sums are bounded for p <= 2") {
  auto const& fx = a2();
  SplitMix64 rng(47);
  for (std::size_t p = 0; p <= 2; ++p) {
    auto const tp = enumerate_triangles(fx.model, fx.index, p);
    auto const& w = fx.index.sphere({p, 0});
    for (int t = 0; t < 30; ++t) {
      GroupFunction f1, f2, f3;
      for (auto const& x : w) {
        f1.set(x, rng.uniform01() - 0.3);
        f2.set(x, rng.uniform01() - 0.3);
        f3.set(x, rng.uniform01() - 0.3);
      }
      CHECK(triangle_sum(tp, f1, f2, f3, p).pass);
    }
  }
}

TEST_CASE("folding counts match the closed forms for m, n <= 6") {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(count_foldings(Case::a1xa1, {m, n}).total == (m + 1) * (n + 1));
      auto const c = count_foldings(Case::a2, {m, n});
      CHECK(2 * c.distinct == (m + 1) * (n + 1) * (m + n));
      CHECK(c.coincident == (m + 1) * (n + 1));
    }
  }
}

TEST_CASE("ordered focal pairs count every unordered pair twice") {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      auto const grid = hull_grid({m, n});
      std::size_t ordered = 0;
      for (auto const& p : grid) {
        for (auto const& q : grid) ordered += p != q && (p.i == q.i || p.j == q.j);
      }
      CHECK(ordered == 2 * count_foldings(Case::a2, {m, n}).distinct);
    }
  }
}

TEST_CASE("hulls embed shape-preservingly into the Cayley graph") {
  for (auto const* fx : both()) {
    auto const& g = fx->model;
    Case const c = g.kind();
    for (auto const& [s, elems] : fx->index.spheres()) {
      if (s.total() > 3) continue;
      for (std::size_t k = 0; k < elems.size(); k += 1 + elems.size() / 8) {
        auto const& alpha = elems[k];
        std::map<ApartmentPoint, GroupElement> embed;
        for (auto const& p : hull_grid(s)) {
          Shape const s1{static_cast<std::size_t>(p.i), static_cast<std::size_t>(p.j)};
          embed[p] = factorize(g, fx->index, alpha, s1, shape_difference(s, s1)).first;
          ApartmentPoint const full{static_cast<std::int64_t>(s.m), static_cast<std::int64_t>(s.n)};
          CHECK(decompose_vertex({0, 0}, full, s1, c) == p);
        }
        for (auto const& [p, x] : embed) {
          for (auto const& [q, y] : embed) {
            CHECK(hull_shape(p, q, c) == g.multiply(g.inverse(x), y).shape());
          }
        }
      }
    }
  }
}

TEST_CASE("groupoid factorization is unique over every coset") {
  auto const& fx = a2();
  auto const gpd = make_commutant_groupoid(fx.model, exponent_sum_spec(7, 3));
  for (auto const& [s, elems] : fx.index.spheres()) {
    if (s.total() > 3) continue;
    for (auto const& a : gpd.elements_over(elems)) {
      for (std::size_t m1 = 0; m1 <= s.m; ++m1) {
        for (std::size_t n1 = 0; n1 <= s.n; ++n1) {
          Shape const s1{m1, n1};
          auto const found =
              gpd_factorization_candidates(gpd, fx.index, a, s1, shape_difference(s, s1));
          CHECK(found.size() == 1);
        }
      }
    }
  }
}
