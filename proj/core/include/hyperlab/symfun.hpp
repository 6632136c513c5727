#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "hyperlab/ambient.hpp"
#include "hyperlab/errors.hpp"

namespace hyperlab::symfun {

// Normal convention tag. There is one convention in this codebase: geodesic
// spheres carry positive principal curvatures (a sphere of radius R in the
// flat space form has lambda_i = 1/R).
enum class Orientation { SphereInwardPositive };

// Principal curvatures at a point.
struct ShapeSpectrum {
  int m = 0;
  Eigen::VectorXd lambdas;
  Orientation orientation = Orientation::SphereInwardPositive;

  ShapeSpectrum() = default;
  ShapeSpectrum(int m_, Eigen::VectorXd l);

  void validate() const;  // throws ArgumentError on bad data
  double frobenius() const { return lambdas.norm(); }  // |A|
  ShapeSpectrum flipped() const;                       // orientation reversal
};

// Elementary symmetric functions S_0..S_m of the spectrum and the normalized
// means H_r = S_r / binom(m, r). S_at extends by zero above m so identities
// involving S_{m+1}, S_{m+2} are total.
struct SymTable {
  int m = 0;
  Eigen::VectorXd S;  // size m+1, S[0] = 1
  Eigen::VectorXd H;  // size m+1, H[0] = 1

  double S_at(int r) const { return (r >= 0 && r <= m) ? S[r] : 0.0; }
  double H_at(int r) const { return (r >= 0 && r <= m) ? H[r] : 0.0; }
};

// Newton transformation of order r, represented by its eigenvalues in the
// eigenbasis of the shape operator (P_r is a polynomial in A, so they share
// eigenbases).
struct NewtonOp {
  int m = 0;
  int r = 0;
  Eigen::VectorXd mu;  // eigenvalue of P_r paired with lambda_i

  double trace() const { return mu.sum(); }
  double spectral_norm() const { return mu.cwiseAbs().maxCoeff(); }
  // Matrix form in a supplied basis: columns of `basis` are the eigenvectors
  // of A in that order; returns basis * diag(mu) * basis^{-1}.
  Eigen::MatrixXd matrix(const Eigen::MatrixXd& basis) const;
};

// Coefficient recursion for prod_i (x + lambda_i): O(m^2), numerically
// stable, no determinant expansion.
SymTable sym_all(const ShapeSpectrum& spec);

// P_0 = I, P_r = S_r I - A P_{r-1}, evaluated on eigenvalues.
NewtonOp newton(const ShapeSpectrum& spec, int r);

struct TraceResiduals {
  double tr_P;    // |tr P_r - (m-r) S_r|
  double tr_AP;   // |tr A P_r - (r+1) S_{r+1}|
  double tr_AAP;  // |tr A^2 P_r - (S_1 S_{r+1} - (r+2) S_{r+2})|
  double scale;   // magnitude the residuals are relative to
  double max_relative() const;
};

TraceResiduals trace_identities(const ShapeSpectrum& spec, int r);

struct BoundReport {
  double frobenius_A;        // |A|
  double spectral_P;         // max |mu_i| of P_r
  bool s_bounds_hold;        // |S_k| <= binom(m,k) |A|^k for all k
  bool p_bound_holds;        // |P_r| <= (2^m - 1) |A|^r
  double worst_s_ratio;      // max_k |S_k| / (binom(m,k) |A|^k)
  double p_ratio;            // |P_r| / ((2^m - 1) |A|^r)
};

BoundReport norms_and_bounds(const ShapeSpectrum& spec, int r);

// Sufficient conditions for P_r to be non-negative definite, evaluated on a
// field of sampled spectra. "S identically zero" means
// |S| <= 1e-8 (1 + |A|^order) at every sample.
struct PositivityFlags {
  bool cond_a = false;  // S_{r+1} == 0, r odd (up to orientation)
  bool cond_b = false;  // S_{r+1} == 0, r even, S_r >= 0
  bool cond_c = false;  // r odd,  S_{r+1} == 0, S_{r+2} != 0
  bool cond_d = false;  // r even, S_{r+1} == 0, S_{r+2} != 0, S_r >= 0
  bool cond_e = false;  // some S_k > 0 everywhere (k > r) and a sample with
                        // all lambda_i >= 0
  bool p_r_nonneg = false;  // min eigenvalue of P_r >= -tol on every sample
  bool any() const { return cond_a || cond_b || cond_c || cond_d || cond_e; }
};

PositivityFlags positivity_class(std::span<const ShapeSpectrum> field, int r);

// Twice-traced Gauss relation: Scal = (m-1) lambda + 2 S_2 for a hypersurface
// of an Einstein ambient with constant lambda. S1 participates in the
// interface for symmetry with callers that carry full tables; the relation
// itself needs only S_2.
double scal_from_S2(double S1, double S2, const ambient::AmbientSpec& amb);

}  // namespace hyperlab::symfun
