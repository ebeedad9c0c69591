#include "haagerup/convolution.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace haagerup {

GroupFunction convolve(GroupModel const& model, GroupFunction const& f, GroupFunction const& g) {
  return convolve_with(f, g, [&](GroupElement const& a, GroupElement const& b) {
    return std::optional<GroupElement>(model.multiply(a, b));
  });
}

double haagerup_bound(Case c, Shape s) {
  double const m = static_cast<double>(s.m);
  double const n = static_cast<double>(s.n);
  if (c == Case::a1xa1) return (m + 1) * (n + 1);
  return 0.5 * (m + 1) * (n + 1) * (m + n + 2) * std::sqrt(std::max(m, n) + 1);
}

double conjectured_a2_constant(Shape s) {
  double const m = static_cast<double>(s.m);
  double const n = static_cast<double>(s.n);
  return 0.5 * (m + 1) * (n + 1) * (m + n + 2);
}

CheckReport make_check_report(Case c, Shape s, double lhs, double f_norm, double g_norm,
                              double tol) {
  CheckReport r;
  r.shape = s;
  r.bound = haagerup_bound(c, s);
  r.lhs = lhs;
  r.rhs = r.bound * f_norm * g_norm;
  double const denom = f_norm * g_norm;
  r.ratio = denom > 0.0 ? lhs / denom : 0.0;
  r.pass = lhs <= r.rhs * (1.0 + tol);
  return r;
}

CheckReport check_inequality(GroupModel const& model, Case c, GroupFunction const& f,
                             GroupFunction const& g, Shape s, double tol) {
  std::vector<std::string> offending;
  for (auto const& [x, v] : g.entries()) {
    if (x.shape() != s) offending.push_back(format_element(x));
  }
  if (!offending.empty()) {
    std::ostringstream os;
    os << "g is not supported on W" << s << "; offending elements:";
    for (std::size_t i = 0; i < offending.size() && i < 8; ++i) os << " [" << offending[i] << ']';
    if (offending.size() > 8) os << " ... (" << offending.size() << " total)";
    throw PreconditionError(os.str());
  }
  auto const h = convolve(model, f, g);
  return make_check_report(c, s, h.l2(), f.l2(), g.l2(), tol);
}

ConvolutionPlan::ConvolutionPlan(GroupModel const& model, std::vector<GroupElement> left,
                                 std::vector<GroupElement> right)
    : left_(std::move(left)), right_(std::move(right)) {
  std::vector<GroupElement> products;
  products.reserve(left_.size() * right_.size());
  for (auto const& a : left_) {
    for (auto const& b : right_) products.push_back(model.multiply(a, b));
  }
  outputs_ = products;
  std::sort(outputs_.begin(), outputs_.end());
  outputs_.erase(std::unique(outputs_.begin(), outputs_.end()), outputs_.end());
  if (outputs_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceCapError("convolution plan has too many outputs");
  }
  std::unordered_map<GroupElement, std::uint32_t> id;
  id.reserve(outputs_.size());
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    id.emplace(outputs_[i], static_cast<std::uint32_t>(i));
  }
  product_.reserve(products.size());
  for (auto const& p : products) product_.push_back(id.at(p));
}

void ConvolutionPlan::apply(std::span<double const> f, std::span<double const> g,
                            std::span<double> out) const {
  if (f.size() != left_.size() || g.size() != right_.size() || out.size() != outputs_.size()) {
    throw PreconditionError("ConvolutionPlan::apply: size mismatch");
  }
  std::fill(out.begin(), out.end(), 0.0);
  std::size_t const nr = right_.size();
  for (std::size_t i = 0; i < left_.size(); ++i) {
    double const fi = f[i];
    if (fi == 0.0) continue;
    std::uint32_t const* row = product_.data() + i * nr;
    for (std::size_t j = 0; j < nr; ++j) out[row[j]] += fi * g[j];
  }
}

void ConvolutionPlan::apply_adjoint(std::span<double const> h, std::span<double const> g,
                                    std::span<double> f_out) const {
  if (h.size() != outputs_.size() || g.size() != right_.size() ||
      f_out.size() != left_.size()) {
    throw PreconditionError("ConvolutionPlan::apply_adjoint: size mismatch");
  }
  std::size_t const nr = right_.size();
  for (std::size_t i = 0; i < left_.size(); ++i) {
    std::uint32_t const* row = product_.data() + i * nr;
    double s = 0.0;
    for (std::size_t j = 0; j < nr; ++j) s += g[j] * h[row[j]];
    f_out[i] = s;
  }
}

double l2_norm(std::span<double const> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

NormEstimate truncated_norm(GroupModel const& model, SphereIndex const& index,
                            GroupFunction const& g, std::size_t radius, std::size_t max_iters,
                            double tol) {
  NormEstimate est;
  est.ball_radius = radius;
  if (g.empty()) {
    est.converged = true;
    return est;
  }
  std::vector<GroupElement> right;
  std::vector<double> gv;
  for (auto const& [x, v] : g.entries()) {
    right.push_back(x);
    gv.push_back(v);
  }
  ConvolutionPlan plan(model, index.ball(radius), std::move(right));
  std::size_t const n = plan.left().size();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(plan.outputs().size());
  std::vector<double> bx(n);

  double lambda = 0.0;
  double best = 0.0;
  for (std::size_t it = 1; it <= std::max<std::size_t>(max_iters, 1); ++it) {
    plan.apply(x, gv, y);
    double const next = l2_norm(y) * l2_norm(y);  // x^T B x with ||x|| = 1
    plan.apply_adjoint(y, gv, bx);
    est.iterations = it;
    best = std::max(best, next);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (bx[i] - next * x[i]) * (bx[i] - next * x[i]);
    est.residual = std::sqrt(r);
    bool const settled = it > 1 && std::abs(next - lambda) <= tol * std::max(next, 1e-300);
    lambda = next;
    if (settled || est.residual <= tol * std::max(next, 1e-300)) {
      est.converged = true;
      break;
    }
    double const norm = l2_norm(bx);
    if (norm == 0.0) {
      est.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = bx[i] / norm;
  }
  est.lower_bound = std::sqrt(best);
  return est;
}

RadialTrajectory radial_experiment(GroupModel const& model, SphereIndex const& index, Case c,
                                   Shape s, std::size_t max_radius, std::size_t max_iters,
                                   double tol) {
  RadialTrajectory traj;
  traj.shape = s;
  traj.bound = haagerup_bound(c, s);
  if (c == Case::a2) traj.conjectured = conjectured_a2_constant(s);
  auto const g = GroupFunction::indicator(index.sphere(s));
  double const g_norm = g.l2();
  for (std::size_t r = 0; r <= max_radius; ++r) {
    auto est = truncated_norm(model, index, g, r, max_iters, tol);
    double const ratio = g_norm > 0.0 ? est.lower_bound / g_norm : 0.0;
    traj.estimates.push_back(est);
    traj.ratios.push_back(ratio);
    if (ratio > traj.bound * (1.0 + inequality_tolerance)) traj.exceeds_bound = true;
    if (traj.conjectured && ratio > *traj.conjectured * (1.0 + inequality_tolerance)) {
      traj.exceeds_conjecture = true;
    }
  }
  return traj;
}

namespace {

void require_support(GroupFunction const& f, Shape s, char const* name) {
  for (auto const& [x, v] : f.entries()) {
    if (x.shape() != s) {
      std::ostringstream os;
      os << name << " is not supported on W" << s << ": [" << format_element(x) << ']';
      throw PreconditionError(os.str());
    }
  }
}

}  // namespace

TriangleSumReport triangle_sum(std::vector<ElementTriple> const& triangles,
                               GroupFunction const& f1, GroupFunction const& f2,
                               GroupFunction const& f3, std::size_t p, double tol) {
  Shape const s{p, 0};
  require_support(f1, s, "f1");
  require_support(f2, s, "f2");
  require_support(f3, s, "f3");
  TriangleSumReport r;
  r.p = p;
  for (auto const& [alpha, beta, gamma] : triangles) r.value += f1(alpha) * f2(beta) * f3(gamma);
  r.bound = std::sqrt(static_cast<double>(p) + 1.0) * f1.l2() * f2.l2() * f3.l2();
  r.pass = std::abs(r.value) <= r.bound * (1.0 + tol);
  return r;
}

TriangleSumReport triangle_sum(GroupModel const& model, SphereIndex const& index,
                               GroupFunction const& f1, GroupFunction const& f2,
                               GroupFunction const& f3, std::size_t p, double tol) {
  return triangle_sum(enumerate_triangles(model, index, p), f1, f2, f3, p, tol);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double spectral_norm(DenseMatrix const& m, std::size_t max_iters, double tol) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  std::vector<double> x(m.cols, 1.0 / std::sqrt(static_cast<double>(m.cols)));
  std::vector<double> y(m.rows), z(m.cols);
  double lambda = 0.0;
  double best = 0.0;
  for (std::size_t it = 0; it < max_iters; ++it) {
    for (std::size_t i = 0; i < m.rows; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
      y[i] = s;
    }
    double const next = l2_norm(y) * l2_norm(y);
    best = std::max(best, next);
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) z[j] += m(i, j) * y[i];
    }
    double const norm = l2_norm(z);
    if (norm == 0.0) break;
    if (it > 0 && std::abs(next - lambda) <= tol * next) break;
    lambda = next;
    for (std::size_t j = 0; j < m.cols; ++j) x[j] = z[j] / norm;
  }
  return std::sqrt(best);
}

DenseMatrix block(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                  std::span<std::size_t const> col_cuts, std::size_t k, std::size_t j) {
  if (k + 1 >= row_cuts.size() || j + 1 >= col_cuts.size()) {
    throw PreconditionError("block index out of range");
  }
  std::size_t const r0 = row_cuts[k], r1 = row_cuts[k + 1];
  std::size_t const c0 = col_cuts[j], c1 = col_cuts[j + 1];
  if (r0 > r1 || c0 > c1 || r1 > m.rows || c1 > m.cols) {
    throw PreconditionError("block cuts are not a partition of the matrix");
  }
  DenseMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t c = c0; c < c1; ++c) b(i - r0, c - c0) = m(i, c);
  }
  return b;
}

DenseMatrix block_norm_matrix(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                              std::span<std::size_t const> col_cuts) {
  if (row_cuts.size() < 2 || col_cuts.size() < 2 || row_cuts.front() != 0 ||
      col_cuts.front() != 0 || row_cuts.back() != m.rows || col_cuts.back() != m.cols) {
    throw PreconditionError("block cuts must start at 0 and end at the matrix size");
  }
  DenseMatrix out(row_cuts.size() - 1, col_cuts.size() - 1);
  for (std::size_t k = 0; k < out.rows; ++k) {
    for (std::size_t j = 0; j < out.cols; ++j) {
      out(k, j) = spectral_norm(block(m, row_cuts, col_cuts, k, j));
    }
  }
  return out;
}

double block_norm_frobenius(DenseMatrix const& m, std::span<std::size_t const> row_cuts,
                            std::span<std::size_t const> col_cuts) {
  auto const norms = block_norm_matrix(m, row_cuts, col_cuts);
  return l2_norm(norms.data);
}

}  // namespace haagerup
