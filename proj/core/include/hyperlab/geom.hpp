#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/ambient.hpp"
#include "hyperlab/errors.hpp"
#include "hyperlab/symfun.hpp"

namespace hyperlab::geom {

struct Box {
  Eigen::VectorXd lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  double extent(int axis) const { return hi[axis] - lo[axis]; }
  bool contains(const Eigen::VectorXd& u, double slack = 0.0) const;
  Eigen::VectorXd center() const { return 0.5 * (lo + hi); }
};

// What a chart-box face means on the surface. Quadrature treats only
// Boundary faces as actual boundary of a region.
enum class EdgeKind { Boundary, Periodic, Degenerate };

// Pointwise geometric data assembled by a surface: fundamental forms, shape
// operator, its spectrum, and an I-orthonormal eigenframe of the shape
// operator (chart-basis components in the columns of `frame`).
struct SurfacePoint {
  Eigen::VectorXd param;
  Eigen::VectorXd position;  // ambient coordinates (model coords when c != 0)
  Eigen::VectorXd normal;    // unit normal; empty for model-embedded charts
  Eigen::MatrixXd first;     // I
  Eigen::MatrixXd second;    // II
  Eigen::MatrixXd shape;     // A = I^{-1} II in the chart basis
  Eigen::MatrixXd frame;     // columns: I-orthonormal eigenvectors of A
  symfun::ShapeSpectrum spectrum;  // eigenvalues aligned with frame columns
  double area_element = 0.0;       // sqrt(det I)
  double asymmetry = 0.0;          // II asymmetry before symmetrization

  const symfun::SymTable& sym() const;  // cached symmetric functions

 private:
  mutable std::shared_ptr<symfun::SymTable> sym_cache_;
};

// Catalog metadata used by region factories and the CLI.
struct CatalogInfo {
  std::string id;        // plane | sphere | geodesic-sphere | cylinder | ...
  double radius = 0.0;   // sphere / geodesic-sphere / cylinder radius
  double c = 0.0;        // ambient curvature for geodesic spheres
  int k = 0;             // cylinder sphere-factor dimension
  double intrinsic_radius = 0.0;  // sphere-like: radius of the round metric
};

struct DistanceField {
  Eigen::VectorXd base;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> partials;
  bool analytic = false;
};

class Surface {
 public:
  virtual ~Surface() = default;

  virtual int m() const = 0;
  virtual int ambient_dim() const = 0;
  virtual double ambient_c() const = 0;
  virtual const Box& domain() const = 0;
  virtual SurfacePoint at(const Eigen::VectorXd& u) const = 0;
  virtual Eigen::VectorXd position(const Eigen::VectorXd& u) const;
  virtual EdgeKind edge_kind(int axis, int side) const = 0;
  virtual bool compact() const = 0;
  virtual bool complete() const { return true; }
  virtual bool bounded() const { return compact(); }
  virtual std::string name() const = 0;
  virtual const CatalogInfo* catalog_info() const { return nullptr; }

  // Ambient distance between position vectors (Euclidean, great-circle, or
  // hyperboloid-model distance depending on the ambient curvature).
  double ambient_distance(const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) const;

  // Intrinsic distance from u0. Catalog surfaces override with closed forms;
  // the default builds an 8-neighbor grid graph over the parameter box with
  // metric edge lengths and runs Dijkstra (first-order accurate).
  virtual DistanceField distance_field(const Eigen::VectorXd& u0,
                                       double resolution) const;

  // G(rho) <grad rho, eta> for the homothetic-soliton support term, with rho
  // measured from the ambient origin (flat) or the model pole (geodesic
  // spheres). Empty when the surface cannot supply it.
  virtual std::optional<double> weighted_support(
      const SurfacePoint& pt, const ambient::ComparisonFn& G) const;

  // A copy of the surface re-charted so that the chart origin/pole passes
  // through position(u0); used by intrinsic-ball factories. Null when
  // unsupported.
  virtual std::shared_ptr<const Surface> recentered(
      const Eigen::VectorXd& u0) const {
    (void)u0;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Generic parametric chart in a flat ambient.

struct Jet {
  Eigen::VectorXd pos;               // ambient_dim
  Eigen::MatrixXd d1;                // ambient_dim x m
  std::vector<Eigen::MatrixXd> d2;   // per ambient coordinate, m x m
};
using JetFn = std::function<Jet(const Eigen::VectorXd&)>;
using PositionFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct ChartOptions {
  double normal_sign = 1.0;
  bool compact = false;
  bool complete = true;
  bool bounded = false;
  std::vector<std::array<EdgeKind, 2>> edges;  // per axis {lo, hi}
  std::optional<CatalogInfo> catalog;
};

class Chart : public Surface {
 public:
  Chart(std::string name, int m, int ambient_dim, Box domain, JetFn jet,
        ChartOptions opts);

  // Central finite differences from a position-only immersion; step h is
  // scaled by the domain extent.
  static JetFn fd_jet(PositionFn pos, int m, int ambient_dim, double h);

  int m() const override { return m_; }
  int ambient_dim() const override { return ambient_dim_; }
  double ambient_c() const override { return 0.0; }
  const Box& domain() const override { return domain_; }
  SurfacePoint at(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd position(const Eigen::VectorXd& u) const override;
  EdgeKind edge_kind(int axis, int side) const override;
  bool compact() const override { return opts_.compact; }
  bool complete() const override { return opts_.complete; }
  bool bounded() const override { return opts_.compact || opts_.bounded; }
  std::string name() const override { return name_; }
  const CatalogInfo* catalog_info() const override;
  std::optional<double> weighted_support(
      const SurfacePoint& pt, const ambient::ComparisonFn& G) const override;

  double normal_sign() const { return opts_.normal_sign; }

 protected:
  std::string name_;
  int m_, ambient_dim_;
  Box domain_;
  JetFn jet_;
  ChartOptions opts_;
};

// ---------------------------------------------------------------------------
// Unit-sphere chart jets (hyperspherical coordinates), used by the catalog.

struct SphereJet {
  Eigen::VectorXd omega;
  Eigen::MatrixXd d1;
  std::vector<Eigen::MatrixXd> d2;
};

SphereJet unit_sphere_jet(int k, const Eigen::VectorXd& angles);
Box unit_sphere_domain(int k);
std::vector<std::array<EdgeKind, 2>> unit_sphere_edges(int k);

// ---------------------------------------------------------------------------
// Ambient model geometry: distances, geodesic interpolation, projection.

struct ModelGeometry {
  double c = 0.0;
  explicit ModelGeometry(double c_) : c(c_) {}
  double distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::VectorXd geodesic(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                           double t) const;
  Eigen::VectorXd project(const Eigen::VectorXd& x) const;
  double minkowski(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
};

// ---------------------------------------------------------------------------
// Catalog.

std::shared_ptr<const Surface> make_plane(int m, double extent);
std::shared_ptr<const Surface> make_sphere(double R, int m);
std::shared_ptr<const Surface> make_geodesic_sphere(double R, double c, int m);
std::shared_ptr<const Surface> make_cylinder(double R, int k, int m,
                                             double z_extent);

struct HeightField {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess;
};
HeightField height_zero();
HeightField height_paraboloid(double scale);
HeightField height_sine(double scale);
std::shared_ptr<const Surface> make_graph(const HeightField& h, int m,
                                          double extent,
                                          bool analytic_jets = true,
                                          double fd_step = 1e-4);

// Profile jets for surfaces of revolution: s -> (x, x', x'', z, z', z'').
struct CurveJet {
  double x, dx, ddx, z, dz, ddz;
};
using CurveFn = std::function<CurveJet(double)>;
std::shared_ptr<const Surface> make_revolution(CurveFn curve, double s_lo,
                                               double s_hi, int m,
                                               std::string name,
                                               bool compact = false,
                                               double normal_sign = 1.0);

// Catalog dispatch by id; parameters looked up by name. Unknown ids and
// invalid parameters throw ArgumentError.
struct CatalogParams {
  double radius = 1.0;
  double c = 0.0;
  int m = 2;
  int k = 1;
  double extent = 2.0;
  double z_extent = 8.0;
  std::string height = "zero";
  double height_scale = 1.0;
};
std::shared_ptr<const Surface> catalog(const std::string& id,
                                       const CatalogParams& params);
std::vector<std::string> catalog_ids();
std::string catalog_doc(const std::string& id);

}  // namespace hyperlab::geom
