#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "haagerup/ball.hpp"
#include "haagerup/group_model.hpp"

namespace haagerup {

/// A finitely supported real function. Entries are kept in sorted key order
/// so every reduction over the support runs in the same order; exact zeros
/// are never stored.
template <class Key>
class SupportedFunction {
 public:
  using key_type = Key;
  using map_type = std::map<Key, double>;

  SupportedFunction() = default;

  static SupportedFunction delta(Key key, double value = 1.0) {
    SupportedFunction f;
    f.set(std::move(key), value);
    return f;
  }

  template <class Range>
  static SupportedFunction indicator(Range const& keys) {
    SupportedFunction f;
    for (auto const& k : keys) f.set(k, 1.0);
    return f;
  }

  void set(Key key, double value) {
    if (value == 0.0) {
      values_.erase(key);
    } else {
      values_[std::move(key)] = value;
    }
  }

  void add(Key const& key, double value) {
    if (value == 0.0) return;
    auto [it, inserted] = values_.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0.0) values_.erase(it);
    }
  }

  double operator()(Key const& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? 0.0 : it->second;
  }

  map_type const& entries() const noexcept { return values_; }
  std::size_t support_size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double l1() const {
    double s = 0.0;
    for (auto const& [k, v] : values_) s += std::abs(v);
    return s;
  }

  double l2() const {
    double s = 0.0;
    for (auto const& [k, v] : values_) s += v * v;
    return std::sqrt(s);
  }

  SupportedFunction scaled(double c) const {
    SupportedFunction out;
    for (auto const& [k, v] : values_) out.set(k, c * v);
    return out;
  }

  friend bool operator==(SupportedFunction const&, SupportedFunction const&) = default;

 private:
  map_type values_;
};

using GroupFunction = SupportedFunction<GroupElement>;

/// (f * g)(c) = sum over composable (a, b) with compose(a, b) = c of
/// f(a) g(b). `compose` returns std::nullopt for pairs that are not
/// composable, which is how groupoid and action convolutions reuse this.
template <class L, class R, class Compose>
auto convolve_with(SupportedFunction<L> const& f, SupportedFunction<R> const& g,
                   Compose&& compose) {
  using Out = typename std::invoke_result_t<Compose&, L const&, R const&>::value_type;
  SupportedFunction<Out> out;
  for (auto const& [a, fa] : f.entries()) {
    for (auto const& [b, gb] : g.entries()) {
      if (auto c = compose(a, b)) out.add(*c, fa * gb);
    }
  }
  return out;
}

GroupFunction convolve(GroupModel const& model, GroupFunction const& f, GroupFunction const& g);

/// p(m, n): (m+1)(n+1) for A1xA1 and
/// (1/2)(m+1)(n+1)(m+n+2) sqrt(max(m,n)+1) for A2.
double haagerup_bound(Case c, Shape s);

/// The A2 radial constant (1/2)(m+1)(n+1)(m+n+2), explored but never asserted.
double conjectured_a2_constant(Shape s);

inline constexpr double inequality_tolerance = 1e-9;
inline constexpr double identity_tolerance = 1e-12;

struct CheckReport {
  Shape shape;
  double lhs = 0.0;    // ||f * g||_2
  double rhs = 0.0;    // p(m,n) ||f||_2 ||g||_2
  double ratio = 0.0;  // ||f * g||_2 / (||f||_2 ||g||_2), comparable to p(m,n)
  double bound = 0.0;  // p(m,n)
  bool pass = false;   // lhs <= rhs (1 + tol)
};

/// Assembles a report from precomputed norms.
CheckReport make_check_report(Case c, Shape s, double lhs, double f_norm, double g_norm,
                              double tol);

/// Verifies that g is supported on W_s, then compares ||f * g||_2 with
/// p(s) ||f||_2 ||g||_2. Throws PreconditionError listing offending elements.
CheckReport check_inequality(GroupModel const& model, Case c, GroupFunction const& f,
                             GroupFunction const& g, Shape s,
                             double tol = inequality_tolerance);

/// Precomputed products for convolving functions on fixed supports: the
/// matrix of right convolution by g restricted to functions on `left`.
class ConvolutionPlan {
 public:
  ConvolutionPlan(GroupModel const& model, std::vector<GroupElement> left,
                  std::vector<GroupElement> right);

  std::vector<GroupElement> const& left() const noexcept { return left_; }
  std::vector<GroupElement> const& right() const noexcept { return right_; }
  /// Every product of a left and a right element, sorted canonically.
  std::vector<GroupElement> const& outputs() const noexcept { return outputs_; }

  /// out = f * g, indexed like outputs().
  void apply(std::span<double const> f, std::span<double const> g, std::span<double> out) const;
  /// f_out = adjoint of (f -> f * g) applied to h.
  void apply_adjoint(std::span<double const> h, std::span<double const> g,
                     std::span<double> f_out) const;

 private:
  std::vector<GroupElement> left_;
  std::vector<GroupElement> right_;
  std::vector<GroupElement> outputs_;
  std::vector<std::uint32_t> product_;  // left index * right size + right index
};

double l2_norm(std::span<double const> v);

struct NormEstimate {
  double lower_bound = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::size_t ball_radius = 0;
  bool converged = false;
};

inline constexpr std::size_t default_max_iters = 10'000;

/// Lower bound on ||rho(g)|| from the restriction of f -> f * g to functions
/// supported on ball(R). Power iteration on A^T A from the uniform positive
/// vector; stops when successive Rayleigh quotients differ by less than
/// tol (relative). Each iterate's quotient is itself a valid lower bound.
NormEstimate truncated_norm(GroupModel const& model, SphereIndex const& index,
                            GroupFunction const& g, std::size_t radius,
                            std::size_t max_iters = default_max_iters, double tol = 1e-13);

struct RadialTrajectory {
  Shape shape;
  std::vector<NormEstimate> estimates;  // R = 0 .. R_max
  std::vector<double> ratios;           // lower_bound / ||g||_2
  double bound = 0.0;
  std::optional<double> conjectured;  // A2 only
  bool exceeds_bound = false;
  bool exceeds_conjecture = false;
};

/// g = indicator of W_s; ratios R -> truncated_norm(g, R) / ||g||_2.
RadialTrajectory radial_experiment(GroupModel const& model, SphereIndex const& index, Case c,
                                   Shape s, std::size_t max_radius,
                                   std::size_t max_iters = default_max_iters,
                                   double tol = 1e-13);

struct TriangleSumReport {
  std::size_t p = 0;
  double value = 0.0;  // sum over T_p of f1(alpha) f2(beta) f3(gamma)
  double bound = 0.0;  // sqrt(p+1) ||f1|| ||f2|| ||f3||
  bool pass = false;
};

TriangleSumReport triangle_sum(std::vector<ElementTriple> const& triangles,
                               GroupFunction const& f1, GroupFunction const& f2,
                               GroupFunction const& f3, std::size_t p,
                               double tol = identity_tolerance);

/// Enumerates T_p from the index, then sums. Supports must lie in W_{p,0}.
TriangleSumReport triangle_sum(GroupModel const& model, SphereIndex const& index,
                               GroupFunction const& f1, GroupFunction const& f2,
                               GroupFunction const& f3, std::size_t p,
                               double tol = identity_tolerance);

/// Row-major dense real matrix, used by the block-norm utilities.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  static DenseMatrix identity(std::size_t n);
};

/// Largest singular value by power iteration on M^T M.
double spectral_norm(DenseMatrix const& m, std::size_t max_iters = 200'000, double tol = 1e-15);

/// The block T_{kj} given row boundaries and column boundaries (each a
/// sorted list starting at 0 and ending at rows / cols).
DenseMatrix block(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                  std::span<std::size_t const> col_cuts, std::size_t k, std::size_t j);

/// The scalar matrix [||T_kj||].
DenseMatrix block_norm_matrix(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                              std::span<std::size_t const> col_cuts);

/// (sum ||T_kj||^2)^{1/2}.
double block_norm_frobenius(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                            std::span<std::size_t const> col_cuts);

}  // namespace haagerup
