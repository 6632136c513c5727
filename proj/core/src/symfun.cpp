#include "hyperlab/symfun.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hyperlab/util.hpp"

namespace hyperlab::symfun {

ShapeSpectrum::ShapeSpectrum(int m_, Eigen::VectorXd l)
    : m(m_), lambdas(std::move(l)) {
  validate();
}

void ShapeSpectrum::validate() const {
  if (m < 2) throw ArgumentError("ShapeSpectrum: dimension m must be >= 2");
  if (lambdas.size() != m)
    throw ArgumentError("ShapeSpectrum: expected " + std::to_string(m) +
                        " principal curvatures, got " +
                        std::to_string(lambdas.size()));
  for (int i = 0; i < m; ++i) {
    if (!std::isfinite(lambdas[i]))
      throw ArgumentError("ShapeSpectrum: non-finite principal curvature");
  }
}

ShapeSpectrum ShapeSpectrum::flipped() const {
  ShapeSpectrum out = *this;
  out.lambdas = -lambdas;
  return out;
}

SymTable sym_all(const ShapeSpectrum& spec) {
  spec.validate();
  const int m = spec.m;
  SymTable table;
  table.m = m;
  table.S = Eigen::VectorXd::Zero(m + 1);
  table.S[0] = 1.0;
  // Coefficients of prod_i (x + lambda_i), built one factor at a time.
  for (int i = 0; i < m; ++i) {
    const double l = spec.lambdas[i];
    for (int r = i + 1; r >= 1; --r) table.S[r] += l * table.S[r - 1];
  }
  table.H = Eigen::VectorXd::Zero(m + 1);
  for (int r = 0; r <= m; ++r) table.H[r] = table.S[r] / binom(m, r);
  return table;
}

NewtonOp newton(const ShapeSpectrum& spec, int r) {
  spec.validate();
  const int m = spec.m;
  if (r < 0 || r > m - 1)
    throw ArgumentError("newton: order r must satisfy 0 <= r <= m-1, got " +
                        std::to_string(r));
  const SymTable table = sym_all(spec);
  NewtonOp op;
  op.m = m;
  op.r = r;
  op.mu = Eigen::VectorXd::Ones(m);
  for (int k = 1; k <= r; ++k) {
    for (int i = 0; i < m; ++i)
      op.mu[i] = table.S[k] - spec.lambdas[i] * op.mu[i];
  }
  return op;
}

Eigen::MatrixXd NewtonOp::matrix(const Eigen::MatrixXd& basis) const {
  if (basis.rows() != m || basis.cols() != m)
    throw ArgumentError("NewtonOp::matrix: basis must be m x m");
  return basis * mu.asDiagonal() * basis.inverse();
}

double TraceResiduals::max_relative() const {
  const double denom = 1.0 + scale;
  return std::max({tr_P, tr_AP, tr_AAP}) / denom;
}

TraceResiduals trace_identities(const ShapeSpectrum& spec, int r) {
  spec.validate();
  const int m = spec.m;
  if (r < 0 || r > m - 1)
    throw ArgumentError("trace_identities: order out of range");
  const SymTable table = sym_all(spec);
  const NewtonOp op = newton(spec, r);

  double tr_p = 0.0, tr_ap = 0.0, tr_aap = 0.0;
  for (int i = 0; i < m; ++i) {
    const double l = spec.lambdas[i];
    tr_p += op.mu[i];
    tr_ap += l * op.mu[i];
    tr_aap += l * l * op.mu[i];
  }
  const double s_r = table.S_at(r);
  const double s_r1 = table.S_at(r + 1);
  const double s_r2 = table.S_at(r + 2);
  const double s_1 = table.S_at(1);

  TraceResiduals res;
  res.tr_P = std::abs(tr_p - (m - r) * s_r);
  res.tr_AP = std::abs(tr_ap - (r + 1) * s_r1);
  res.tr_AAP = std::abs(tr_aap - (s_1 * s_r1 - (r + 2) * s_r2));
  res.scale = std::max({std::abs(tr_p), std::abs(tr_ap), std::abs(tr_aap),
                        std::abs((m - r) * s_r), std::abs((r + 1) * s_r1),
                        std::abs(s_1 * s_r1 - (r + 2) * s_r2)});
  return res;
}

BoundReport norms_and_bounds(const ShapeSpectrum& spec, int r) {
  spec.validate();
  const int m = spec.m;
  const SymTable table = sym_all(spec);
  const NewtonOp op = newton(spec, std::min(r, m - 1));

  BoundReport rep;
  rep.frobenius_A = spec.frobenius();
  rep.spectral_P = op.spectral_norm();

  const double slack = 1.0 + 1e-12;
  rep.s_bounds_hold = true;
  rep.worst_s_ratio = 0.0;  // over k >= 1; k = 0 is the trivial 1 <= 1
  for (int k = 1; k <= m; ++k) {
    const double bound = binom(m, k) * std::pow(rep.frobenius_A, k);
    const double sk = std::abs(table.S[k]);
    if (bound == 0.0) {
      if (sk > 0.0) rep.s_bounds_hold = false;
      continue;
    }
    const double ratio = sk / bound;
    rep.worst_s_ratio = std::max(rep.worst_s_ratio, ratio);
    if (sk > bound * slack) rep.s_bounds_hold = false;
  }

  const double p_bound =
      (std::pow(2.0, m) - 1.0) * std::pow(rep.frobenius_A, r);
  if (p_bound == 0.0) {
    rep.p_bound_holds = rep.spectral_P == 0.0;
    rep.p_ratio = rep.spectral_P == 0.0 ? 0.0 : kInf;
  } else {
    rep.p_ratio = rep.spectral_P / p_bound;
    rep.p_bound_holds = rep.spectral_P <= p_bound * slack;
  }
  return rep;
}

namespace {

double zero_tol(double frobenius, int order) {
  return 1e-8 * (1.0 + std::pow(frobenius, order));
}

}  // namespace

PositivityFlags positivity_class(std::span<const ShapeSpectrum> field, int r) {
  if (field.empty())
    throw ArgumentError("positivity_class: empty spectrum sample");
  const int m = field.front().m;
  if (r < 0 || r > m - 1)
    throw ArgumentError("positivity_class: order out of range");

  bool zero_next = true;        // S_{r+1} == 0 everywhere
  bool nonneg_r = true;         // S_r >= 0 everywhere
  bool nonzero_next2 = true;    // S_{r+2} != 0 everywhere
  bool exists_all_nonneg = false;
  bool p_nonneg = true;
  std::vector<bool> positive_k(static_cast<std::size_t>(m) + 1, true);

  for (const ShapeSpectrum& spec : field) {
    if (spec.m != m)
      throw ArgumentError("positivity_class: mixed dimensions in sample");
    const SymTable table = sym_all(spec);
    const double a = spec.frobenius();

    if (std::abs(table.S_at(r + 1)) > zero_tol(a, r + 1)) zero_next = false;
    if (table.S_at(r) < -zero_tol(a, r)) nonneg_r = false;
    if (std::abs(table.S_at(r + 2)) <= zero_tol(a, r + 2))
      nonzero_next2 = false;
    for (int k = 1; k <= m; ++k) {
      if (table.S[k] <= zero_tol(a, k)) positive_k[k] = false;
    }
    if (spec.lambdas.minCoeff() >= -zero_tol(a, 1)) exists_all_nonneg = true;

    const NewtonOp op = newton(spec, r);
    if (op.mu.minCoeff() < -zero_tol(a, r)) p_nonneg = false;
  }

  PositivityFlags flags;
  const bool odd = (r % 2) == 1;
  flags.cond_a = zero_next && odd;
  flags.cond_b = zero_next && !odd && nonneg_r;
  flags.cond_c = odd && zero_next && nonzero_next2;
  flags.cond_d = !odd && zero_next && nonzero_next2 && nonneg_r;
  for (int k = r + 1; k <= m && !flags.cond_e; ++k) {
    if (positive_k[k] && exists_all_nonneg) flags.cond_e = true;
  }
  flags.p_r_nonneg = p_nonneg;
  return flags;
}

double scal_from_S2(double S1, double S2, const ambient::AmbientSpec& amb) {
  (void)S1;
  const double lambda = amb.require_einstein();
  const int m = amb.hypersurface_dim();
  return (m - 1) * lambda + 2.0 * S2;
}

}  // namespace hyperlab::symfun
