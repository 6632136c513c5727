#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/errors.hpp"
#include "hyperlab/util.hpp"

namespace hyperlab::ambient {

enum class Kind { SpaceForm, Product, ConstantF, Schwarzschild };

// Ambient-space catalog entry. Space forms carry the curvature c; the other
// kinds carry the data needed to build the sectional-curvature upper bound F
// and the comparison function G.
struct AmbientSpec {
  Kind kind = Kind::SpaceForm;
  int dimension = 3;  // ambient dimension m+1

  double c = 0.0;                      // space form curvature
  double c1 = 0.0, c2 = 0.0;           // product factors
  int p1 = 0, p2 = 0;                  // product factor dimensions
  double f_value = 0.0;                // constant-F value
  double beta = 1.0;                   // Schwarzschild parameter

  std::optional<double> einstein_constant;
  double injectivity_radius = kInf;

  static AmbientSpec space_form(double c, int dimension);
  static AmbientSpec product(double c1, int p1, double c2, int p2);
  static AmbientSpec constant_f(double value, int dimension,
                                double injectivity_radius,
                                std::optional<double> einstein_constant = {});
  static AmbientSpec schwarzschild(double beta);

  bool is_einstein() const { return einstein_constant.has_value(); }
  // Requires the Einstein constant; throws UnsupportedAmbientError otherwise.
  double require_einstein() const;
  int hypersurface_dim() const { return dimension - 1; }
};

// Closed forms for the space-form comparison functions at curvature c.
struct Comparison {
  double value;       // S_c(t)
  double derivative;  // S_c'(t)
  double h;           // h_c(t)
  bool monotone_warning = false;  // c > 0 and t >= pi/(2 sqrt c)
};

Comparison comparison(double c, double t);

inline double sc(double c, double t) { return comparison(c, t).value; }
inline double dsc(double c, double t) { return comparison(c, t).derivative; }
inline double hc(double c, double t) { return comparison(c, t).h; }

// Comparison function G on [0, b): either the space-form closed form or a
// sampled RK4 solution of G'' + F G = 0 with G(0)=0, G'(0)=1 (the extremal
// admissible solution of the comparison inequality). Sampled functions are
// evaluated by cubic Hermite interpolation; evaluation is pure.
class ComparisonFn {
 public:
  enum class Provenance { ClosedFormSc, OdeIntegrated, ConstantOne };

  static ComparisonFn closed_form(double c, double domain_end = kInf);
  static ComparisonFn constant_one();
  static ComparisonFn sampled(std::vector<double> grid, std::vector<double> g,
                              std::vector<double> dg, bool truncated);

  double value(double t) const;
  double derivative(double t) const;
  double domain_end() const { return domain_end_; }
  bool truncated() const { return truncated_; }
  Provenance provenance() const { return provenance_; }

 private:
  Provenance provenance_ = Provenance::ClosedFormSc;
  double c_ = 0.0;
  double domain_end_ = kInf;
  bool truncated_ = false;
  std::vector<double> grid_, g_, dg_;  // sampled form (uniform grid)
};

// Sectional-curvature upper bound t -> F(t) for the cataloged non-space-form
// ambients. Space forms use S_c directly and are rejected here.
std::function<double(double)> einstein_F(const AmbientSpec& spec);

// Integrates G'' + F(t) G = 0, G(0)=0, G'(0)=1 with classical RK4 at fixed
// step. The domain is truncated at the first grid point where G' <= 0 (G must
// stay nondecreasing); the truncation point is recorded, never extrapolated.
ComparisonFn solve_G(const std::function<double(double)>& F, double t_max,
                     double step);

// Doubly warped Ricci-flat profile: psi'' = (beta/2) psi^{-2}, psi(0)=beta,
// psi'(0)=0, and phi = 2 beta psi'. Smoothness at the origin gives phi(0)=0,
// phi'(0)=1. F = 2 psi''/psi is the radial curvature bound.
struct SchwarzschildProfile {
  double beta;
  double step;
  std::vector<double> r, phi, psi, dpsi, ddpsi;

  double psi_at(double t) const;
  double dpsi_at(double t) const;
  double phi_at(double t) const;
  double F(double t) const;  // 2 psi''/psi = beta psi^{-3}
};

SchwarzschildProfile schwarzschild_profile(double beta, double r_max,
                                           double step = 1e-3);

// Comparison function G for any cataloged ambient: closed form for space
// forms, RK4-integrated for the others.
ComparisonFn comparison_fn(const AmbientSpec& spec, double t_max,
                           double step = 1e-3);

// The decay weight: G when the injectivity radius is infinite, the constant 1
// otherwise.
ComparisonFn decay_weight(const AmbientSpec& spec, double t_max,
                          double step = 1e-3);

}  // namespace hyperlab::ambient
