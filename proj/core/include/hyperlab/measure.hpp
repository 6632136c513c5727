#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/geom.hpp"

namespace hyperlab::measure {

using geom::Box;
using geom::DistanceField;
using geom::Surface;
using geom::SurfacePoint;

// Scalar field on a surface with chart-coordinate partial derivatives.
// Fields without gradient data leave `partials` empty; evaluators that need
// gradients then treat them as zero (constants) or reject.
struct ScalarField {
  std::function<double(const SurfacePoint&)> value;
  std::function<Eigen::VectorXd(const SurfacePoint&)> partials;

  static ScalarField constant(double v);
  bool has_gradient() const { return static_cast<bool>(partials); }
};

// Weight data for an inequality evaluation: the compactly supported test
// function u and the density exponent f.
struct WeightData {
  ScalarField u = ScalarField::constant(1.0);
  ScalarField f = ScalarField::constant(0.0);
};

// Quadrature patch: a box mapped into chart parameters. Patches are the unit
// of refinement; maps must be smooth on the open box.
struct MappedPatch {
  Box box;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;       // -> params
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // m x dim
  static MappedPatch identity(const Box& box);
};

// Boundary patch: an (m-1)-box mapped into chart parameters.
struct BoundaryPatch {
  Box box;  // dimension m-1 (0-dimensional boundaries enumerate points)
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
};

// Metric-ball bookkeeping carried by regions built as intrinsic balls.
struct BallInfo {
  Eigen::VectorXd center_param;
  double radius = 0.0;
  DistanceField distance;
};

struct Region {
  std::shared_ptr<const Surface> surface;
  std::vector<MappedPatch> patches;
  std::vector<BoundaryPatch> boundary;
  bool boundary_empty = false;   // closed-surface region: empty boundary
  bool truncated = false;        // requested extent exceeded the chart
  bool connected_hint = true;    // flood-fill check outcome (sampled)
  std::optional<BallInfo> ball;
  // Indicator-region membership (level-set fallback); null means the mapped
  // patches cover the region exactly.
  std::function<bool(const SurfacePoint&)> indicator;

  const Surface& surf() const { return *surface; }
};

// Region factories.
Region whole_surface(std::shared_ptr<const Surface> surface);
Region param_box(std::shared_ptr<const Surface> surface, const Box& box);
// Geodesic ball around the point with chart parameter u0. Catalog surfaces
// (plane, sphere, geodesic-sphere, cylinder) get exact regions; anything
// else falls back to an indicator region over a Dijkstra distance field.
Region intrinsic_ball(std::shared_ptr<const Surface> surface,
                      const Eigen::VectorXd& u0, double R,
                      double fallback_resolution = 0.02);

// The cutoff ramp u = clamp((R - dist)/eps, 0, 1) on a ball region, together
// with a copy of the region whose radial patches are split at the ramp kink
// so quadrature stays spectral on each piece.
struct RampData {
  ScalarField u;
  Region split_region;
};
RampData u_ramp(const Region& ball_region, double eps);

struct QuadOptions {
  int base_nodes = 4;
  int max_levels = 6;
  double rel_tol = 1e-6;
  bool throw_on_nonconvergence = true;
};

struct QuadResult {
  double value = 0.0;
  double achieved_rel = 0.0;
  int levels_used = 0;
  bool converged = true;
};

// Integral of integrand * e^{-f} over the region (weighted m-measure).
QuadResult integrate(const Region& region, const ScalarField& integrand,
                     const ScalarField& f, const QuadOptions& opts = {});

// Integral over the region boundary with the (m-1)-measure. Empty-boundary
// regions return 0 with the region's flag.
QuadResult integrate_boundary(const Region& region,
                              const ScalarField& integrand,
                              const ScalarField& f,
                              const QuadOptions& opts = {});

// Fixed-level quadrature (no refinement); exposed for exactness tests.
double integrate_fixed(const Region& region, const ScalarField& integrand,
                       const ScalarField& f, int nodes_per_axis);

// Sample positions (and the parameters they came from) used for diameters,
// enclosing centers, and hypothesis flags.
struct SampleSet {
  std::vector<Eigen::VectorXd> params;
  std::vector<Eigen::VectorXd> positions;
  std::vector<bool> on_boundary;
};
SampleSet sample_region(const Region& region, int interior_per_axis,
                        int boundary_per_axis, std::size_t budget = 20000);

// Extrinsic diameter: pairwise max over samples, then monotone local ascent
// in parameter space (hill climbing with shrinking steps).
struct DiameterResult {
  double value = 0.0;
  Eigen::VectorXd param_a, param_b;
};
DiameterResult extrinsic_diameter(const Region& region,
                                  std::size_t budget = 20000);

// Center of the (approximate) smallest enclosing ambient ball of the sample
// positions: projected-centroid start plus geodesic farthest-point descent.
Eigen::VectorXd enclosing_center(const Region& region,
                                 const SampleSet& samples, int iterations = 2000);

}  // namespace hyperlab::measure
