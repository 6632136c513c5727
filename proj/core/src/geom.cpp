#include "hyperlab/geom.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>

#include "hyperlab/util.hpp"

namespace hyperlab::geom {

bool Box::contains(const Eigen::VectorXd& u, double slack) const {
  if (u.size() != lo.size()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (u[i] < lo[i] - slack || u[i] > hi[i] + slack) return false;
  }
  return true;
}

const symfun::SymTable& SurfacePoint::sym() const {
  if (!sym_cache_) {
    sym_cache_ =
        std::make_shared<symfun::SymTable>(symfun::sym_all(spectrum));
  }
  return *sym_cache_;
}

// ---------------------------------------------------------------------------
// Model geometry

double ModelGeometry::minkowski(const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y) const {
  const int n = static_cast<int>(x.size());
  return x.head(n - 1).dot(y.head(n - 1)) - x[n - 1] * y[n - 1];
}

double ModelGeometry::distance(const Eigen::VectorXd& x,
                               const Eigen::VectorXd& y) const {
  if (c == 0.0) return (x - y).norm();
  if (c > 0.0) {
    const double r = 1.0 / std::sqrt(c);
    const double dot = std::clamp(x.dot(y) / (r * r), -1.0, 1.0);
    return r * std::acos(dot);
  }
  const double k = std::sqrt(-c);
  const double q = minkowski(x, y) * (k * k);
  return std::acosh(std::max(1.0, -q)) / k;
}

Eigen::VectorXd ModelGeometry::project(const Eigen::VectorXd& x) const {
  if (c == 0.0) return x;
  if (c > 0.0) {
    const double r = 1.0 / std::sqrt(c);
    return x * (r / x.norm());
  }
  const double k = std::sqrt(-c);
  const double q = minkowski(x, x);
  if (q >= 0.0)
    throw GeometryError("ModelGeometry: point not in the timelike cone");
  return x / (k * std::sqrt(-q));
}

Eigen::VectorXd ModelGeometry::geodesic(const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& y,
                                        double t) const {
  if (c == 0.0) return x + t * (y - x);
  if (c > 0.0) {
    const double r = 1.0 / std::sqrt(c);
    const Eigen::VectorXd xu = x / r, yu = y / r;
    const double ang = std::acos(std::clamp(xu.dot(yu), -1.0, 1.0));
    if (ang < 1e-9) return project(x + t * (y - x));
    return r * (std::sin((1.0 - t) * ang) * xu + std::sin(t * ang) * yu) /
           std::sin(ang);
  }
  const double k = std::sqrt(-c);
  const Eigen::VectorXd xu = x * k, yu = y * k;
  const double d = std::acosh(std::max(1.0, -minkowski(xu, yu)));
  if (d < 1e-9) return project(x + t * (y - x));
  return (std::sinh((1.0 - t) * d) * xu + std::sinh(t * d) * yu) /
         (std::sinh(d) * k);
}

// ---------------------------------------------------------------------------
// Surface defaults

Eigen::VectorXd Surface::position(const Eigen::VectorXd& u) const {
  return at(u).position;
}

double Surface::ambient_distance(const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& y) const {
  return ModelGeometry(ambient_c()).distance(x, y);
}

std::optional<double> Surface::weighted_support(
    const SurfacePoint& pt, const ambient::ComparisonFn& G) const {
  (void)pt;
  (void)G;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Unit-sphere jets (recursive hyperspherical chart)

SphereJet unit_sphere_jet(int k, const Eigen::VectorXd& angles) {
  if (k < 1) throw ArgumentError("unit_sphere_jet: k must be >= 1");
  if (angles.size() != k)
    throw ArgumentError("unit_sphere_jet: wrong number of angles");
  SphereJet jet;
  if (k == 1) {
    const double a = angles[0];
    jet.omega = Eigen::Vector2d(std::cos(a), std::sin(a));
    jet.d1 = Eigen::MatrixXd(2, 1);
    jet.d1 << -std::sin(a), std::cos(a);
    jet.d2.assign(2, Eigen::MatrixXd::Zero(1, 1));
    jet.d2[0](0, 0) = -std::cos(a);
    jet.d2[1](0, 0) = -std::sin(a);
    return jet;
  }
  const SphereJet inner = unit_sphere_jet(k - 1, angles.tail(k - 1));
  const double th = angles[0];
  const double s = std::sin(th), co = std::cos(th);
  const int n = k + 1;  // ambient coords

  jet.omega = Eigen::VectorXd(n);
  jet.omega.head(k) = s * inner.omega;
  jet.omega[k] = co;

  jet.d1 = Eigen::MatrixXd::Zero(n, k);
  jet.d1.col(0).head(k) = co * inner.omega;
  jet.d1(k, 0) = -s;
  for (int j = 1; j < k; ++j)
    jet.d1.col(j).head(k) = s * inner.d1.col(j - 1);

  jet.d2.assign(n, Eigen::MatrixXd::Zero(k, k));
  for (int c = 0; c < k; ++c) {
    jet.d2[c](0, 0) = -s * inner.omega[c];
    for (int j = 1; j < k; ++j) {
      const double v = co * inner.d1(c, j - 1);
      jet.d2[c](0, j) = v;
      jet.d2[c](j, 0) = v;
    }
    for (int i = 1; i < k; ++i)
      for (int j = 1; j < k; ++j)
        jet.d2[c](i, j) = s * inner.d2[c](i - 1, j - 1);
  }
  jet.d2[k](0, 0) = -co;
  return jet;
}

Box unit_sphere_domain(int k) {
  Box box;
  box.lo = Eigen::VectorXd(k);
  box.hi = Eigen::VectorXd(k);
  for (int i = 0; i < k - 1; ++i) {
    box.lo[i] = 0.0;
    box.hi[i] = kPi;
  }
  box.lo[k - 1] = 0.0;
  box.hi[k - 1] = 2.0 * kPi;
  return box;
}

std::vector<std::array<EdgeKind, 2>> unit_sphere_edges(int k) {
  std::vector<std::array<EdgeKind, 2>> edges(k);
  for (int i = 0; i < k - 1; ++i)
    edges[i] = {EdgeKind::Degenerate, EdgeKind::Degenerate};
  edges[k - 1] = {EdgeKind::Periodic, EdgeKind::Periodic};
  return edges;
}

// ---------------------------------------------------------------------------
// Generic flat chart

namespace {

// Generalized cross product of the columns of d1 ((m+1) x m): the unique (up
// to sign) vector orthogonal to all columns, continuous in the entries.
Eigen::VectorXd cofactor_normal(const Eigen::MatrixXd& d1) {
  const int n = static_cast<int>(d1.rows());
  const int m = static_cast<int>(d1.cols());
  Eigen::VectorXd normal(n);
  Eigen::MatrixXd minor(m, m);
  for (int a = 0; a < n; ++a) {
    int row = 0;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      minor.row(row++) = d1.row(b);
    }
    normal[a] = ((a % 2) == 0 ? 1.0 : -1.0) * minor.determinant();
  }
  return normal;
}

}  // namespace

Chart::Chart(std::string name, int m, int ambient_dim, Box domain, JetFn jet,
             ChartOptions opts)
    : name_(std::move(name)),
      m_(m),
      ambient_dim_(ambient_dim),
      domain_(std::move(domain)),
      jet_(std::move(jet)),
      opts_(std::move(opts)) {
  if (ambient_dim_ != m_ + 1)
    throw ArgumentError("Chart: flat charts need ambient_dim == m + 1");
  if (domain_.dim() != m_) throw ArgumentError("Chart: domain dim mismatch");
  if (opts_.edges.empty())
    opts_.edges.assign(m_, {EdgeKind::Boundary, EdgeKind::Boundary});
  if (static_cast<int>(opts_.edges.size()) != m_)
    throw ArgumentError("Chart: edge table dim mismatch");
}

JetFn Chart::fd_jet(PositionFn pos, int m, int ambient_dim, double h) {
  return [pos, m, ambient_dim, h](const Eigen::VectorXd& u) {
    Jet jet;
    jet.pos = pos(u);
    if (jet.pos.size() != ambient_dim)
      throw GeometryError("fd_jet: immersion returned wrong dimension");
    jet.d1 = Eigen::MatrixXd(ambient_dim, m);
    jet.d2.assign(ambient_dim, Eigen::MatrixXd::Zero(m, m));
    std::vector<Eigen::VectorXd> plus(m), minus(m);
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd up = u, um = u;
      up[i] += h;
      um[i] -= h;
      plus[i] = pos(up);
      minus[i] = pos(um);
      jet.d1.col(i) = (plus[i] - minus[i]) / (2.0 * h);
    }
    for (int i = 0; i < m; ++i) {
      const Eigen::VectorXd dii =
          (plus[i] - 2.0 * jet.pos + minus[i]) / (h * h);
      for (int c = 0; c < ambient_dim; ++c) jet.d2[c](i, i) = dii[c];
      for (int j = i + 1; j < m; ++j) {
        Eigen::VectorXd upp = u, upm = u, ump = u, umm = u;
        upp[i] += h; upp[j] += h;
        upm[i] += h; upm[j] -= h;
        ump[i] -= h; ump[j] += h;
        umm[i] -= h; umm[j] -= h;
        const Eigen::VectorXd dij =
            (pos(upp) - pos(upm) - pos(ump) + pos(umm)) / (4.0 * h * h);
        for (int c = 0; c < ambient_dim; ++c) {
          jet.d2[c](i, j) = dij[c];
          jet.d2[c](j, i) = dij[c];
        }
      }
    }
    return jet;
  };
}

SurfacePoint Chart::at(const Eigen::VectorXd& u) const {
  if (u.size() != m_) throw ArgumentError("Chart::at: parameter dim mismatch");
  const Jet jet = jet_(u);

  SurfacePoint pt;
  pt.param = u;
  pt.position = jet.pos;
  pt.first = jet.d1.transpose() * jet.d1;

  const double det = pt.first.determinant();
  const double scale = std::pow(pt.first.trace() / m_, m_);
  if (!(det > 1e-12 * std::max(scale, 1e-300)))
    throw GeometryError("Chart::at: rank-deficient immersion at a queried "
                        "parameter (Gram determinant too small)");

  Eigen::VectorXd n = cofactor_normal(jet.d1);
  n *= opts_.normal_sign / n.norm();
  pt.normal = n;

  Eigen::MatrixXd II(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      double v = 0.0;
      for (int c = 0; c < ambient_dim_; ++c) v += n[c] * jet.d2[c](i, j);
      II(i, j) = v;
    }
  pt.asymmetry = (II - II.transpose()).cwiseAbs().maxCoeff();
  II = 0.5 * (II + II.transpose());
  pt.second = II;

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(II, pt.first);
  if (es.info() != Eigen::Success)
    throw GeometryError("Chart::at: eigen decomposition failed");
  pt.frame = es.eigenvectors();  // I-orthonormal columns
  pt.spectrum = symfun::ShapeSpectrum(m_, es.eigenvalues());
  pt.shape = pt.first.llt().solve(II);
  pt.area_element = std::sqrt(det);
  return pt;
}

Eigen::VectorXd Chart::position(const Eigen::VectorXd& u) const {
  return jet_(u).pos;
}

EdgeKind Chart::edge_kind(int axis, int side) const {
  return opts_.edges.at(axis)[side];
}

const CatalogInfo* Chart::catalog_info() const {
  return opts_.catalog ? &*opts_.catalog : nullptr;
}

std::optional<double> Chart::weighted_support(
    const SurfacePoint& pt, const ambient::ComparisonFn& G) const {
  // Flat ambient: G(rho) <grad rho, eta> = (G(rho)/rho) <psi, eta>, with the
  // removable singularity at the origin filled by 0.
  const double rho = pt.position.norm();
  if (rho < 1e-14) return 0.0;
  return G.value(rho) / rho * pt.position.dot(pt.normal);
}

// ---------------------------------------------------------------------------
// Grid-graph distance field (default) and helpers

namespace {

struct GridSpec {
  int nx, ny;
  double hx, hy;
  bool wrap_x, wrap_y;
  Box box;
  int index(int i, int j) const { return i * ny + j; }
};

}  // namespace

DistanceField Surface::distance_field(const Eigen::VectorXd& u0,
                                      double resolution) const {
  if (m() != 2)
    throw ArgumentError(
        "distance_field: the grid-graph fallback supports m == 2 only");
  if (resolution <= 0.0)
    throw ArgumentError("distance_field: resolution must be positive");
  const Box& box = domain();
  if (!box.contains(u0, 1e-9))
    throw ArgumentError("distance_field: base point outside the chart");

  auto spec = std::make_shared<GridSpec>();
  spec->box = box;
  spec->wrap_x = edge_kind(0, 0) == EdgeKind::Periodic;
  spec->wrap_y = edge_kind(1, 0) == EdgeKind::Periodic;
  spec->nx = std::max(3, static_cast<int>(std::ceil(box.extent(0) / resolution)) + 1);
  spec->ny = std::max(3, static_cast<int>(std::ceil(box.extent(1) / resolution)) + 1);
  // Periodic axes drop the duplicated endpoint.
  const int cx = spec->wrap_x ? spec->nx - 1 : spec->nx;
  const int cy = spec->wrap_y ? spec->ny - 1 : spec->ny;
  spec->hx = box.extent(0) / (spec->nx - 1);
  spec->hy = box.extent(1) / (spec->ny - 1);

  // Metric at each node; interior margin keeps clear of degenerate edges.
  auto node_param = [spec, cx, cy](int i, int j) {
    Eigen::VectorXd u(2);
    u[0] = spec->box.lo[0] + i * spec->hx;
    u[1] = spec->box.lo[1] + j * spec->hy;
    const double eps0 = 1e-9 * spec->box.extent(0);
    const double eps1 = 1e-9 * spec->box.extent(1);
    u[0] = std::clamp(u[0], spec->box.lo[0] + eps0, spec->box.hi[0] - eps0);
    u[1] = std::clamp(u[1], spec->box.lo[1] + eps1, spec->box.hi[1] - eps1);
    (void)cx;
    (void)cy;
    return u;
  };

  std::vector<Eigen::Matrix2d> metric(static_cast<std::size_t>(cx) * cy);
  for (int i = 0; i < cx; ++i)
    for (int j = 0; j < cy; ++j) {
      Eigen::VectorXd u = node_param(i, j);
      Eigen::Matrix2d I;
      try {
        I = at(u).first;
      } catch (const GeometryError&) {
        I = Eigen::Matrix2d::Identity() * 1e-12;  // degenerate pole node
      }
      metric[static_cast<std::size_t>(i) * cy + j] = I;
    }

  auto metric_at = [&, cy](int i, int j) -> const Eigen::Matrix2d& {
    return metric[static_cast<std::size_t>(i) * cy + j];
  };

  // Dijkstra sweep over the 8-neighbor grid. Pure edge relaxation converges
  // to the graph metric, which over-measures by up to ~8% regardless of the
  // resolution; the two-point upwind update on the stencil triangles removes
  // the direction quantization and restores first-order convergence.
  const std::size_t nn = static_cast<std::size_t>(cx) * cy;
  std::vector<double> dist(nn, kInf);
  std::vector<Eigen::Matrix2d> inv_metric(nn);
  for (std::size_t i = 0; i < nn; ++i)
    inv_metric[i] = metric[i].inverse();

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  const int i0 = static_cast<int>(std::round((u0[0] - box.lo[0]) / spec->hx));
  const int j0 = static_cast<int>(std::round((u0[1] - box.lo[1]) / spec->hy));
  const int start = std::clamp(i0, 0, cx - 1) * cy + std::clamp(j0, 0, cy - 1);
  dist[start] = 0.0;
  heap.push({0.0, start});

  // Neighbor order: the 8 stencil directions, consecutive entries adjacent,
  // so (e, e+1) spans the 8 one-ring triangles.
  const int di[8] = {1, 1, 0, -1, -1, -1, 0, 1};
  const int dj[8] = {0, 1, 1, 1, 0, -1, -1, -1};

  auto neighbor = [&](int i, int j, int e, int& ni, int& nj) {
    ni = i + di[e];
    nj = j + dj[e];
    if (spec->wrap_x) ni = (ni + cx) % cx;
    if (spec->wrap_y) nj = (nj + cy) % cy;
    return ni >= 0 && ni < cx && nj >= 0 && nj < cy;
  };

  // Candidate value for node (i, j) from its currently known neighbors.
  auto relax = [&](int i, int j) {
    const int idx = i * cy + j;
    double best = dist[idx];
    double nd[8];
    bool ok[8];
    for (int e = 0; e < 8; ++e) {
      int ni, nj;
      ok[e] = neighbor(i, j, e, ni, nj);
      nd[e] = ok[e] ? dist[ni * cy + nj] : kInf;
      if (!std::isfinite(nd[e])) ok[e] = false;
    }
    const Eigen::Matrix2d& I = metric[idx];
    const Eigen::Matrix2d& Iinv = inv_metric[idx];
    for (int e = 0; e < 8; ++e) {
      if (!ok[e]) continue;
      const Eigen::Vector2d pa(di[e] * spec->hx, dj[e] * spec->hy);
      best = std::min(best, nd[e] + std::sqrt(pa.dot(I * pa)));
      const int e2 = (e + 1) % 8;
      if (!ok[e2]) continue;
      const Eigen::Vector2d pb(di[e2] * spec->hx, dj[e2] * spec->hy);
      Eigen::Matrix2d P;
      P.col(0) = pa;
      P.col(1) = pb;
      const Eigen::Matrix2d Pinv = P.inverse();
      const Eigen::Matrix2d Q = Pinv * Iinv * Pinv.transpose();
      const Eigen::Vector2d dv(nd[e], nd[e2]);
      const Eigen::Vector2d one(1.0, 1.0);
      const double a = one.dot(Q * one);
      const double b = -2.0 * one.dot(Q * dv);
      const double cq = dv.dot(Q * dv) - 1.0;
      const double disc = b * b - 4.0 * a * cq;
      if (disc < 0.0 || a <= 0.0) continue;
      const double u = (-b + std::sqrt(disc)) / (2.0 * a);
      if (u < std::max(nd[e], nd[e2])) continue;  // causality
      const Eigen::Vector2d w = Q * (dv - u * one);
      if (w[0] > 1e-14 || w[1] > 1e-14) continue;  // update from inside cone
      best = std::min(best, u);
    }
    return best;
  };

  while (!heap.empty()) {
    auto [d, idx] = heap.top();
    heap.pop();
    if (d > dist[idx] * (1 + 1e-15)) continue;
    const int i = idx / cy, j = idx % cy;
    for (int e = 0; e < 8; ++e) {
      int ni, nj;
      if (!neighbor(i, j, e, ni, nj)) continue;
      const int nidx = ni * cy + nj;
      const double cand = relax(ni, nj);
      if (cand < dist[nidx] * (1 - 1e-15)) {
        dist[nidx] = cand;
        heap.push({cand, nidx});
      }
    }
  }

  auto grid_value = std::make_shared<std::vector<double>>(std::move(dist));
  auto value = [spec, grid_value, cx, cy](const Eigen::VectorXd& u) {
    double fx = (u[0] - spec->box.lo[0]) / spec->hx;
    double fy = (u[1] - spec->box.lo[1]) / spec->hy;
    fx = std::clamp(fx, 0.0, static_cast<double>(cx - 1));
    fy = std::clamp(fy, 0.0, static_cast<double>(cy - 1));
    const int i = std::min(static_cast<int>(fx), cx - 2 < 0 ? 0 : cx - 2);
    const int j = std::min(static_cast<int>(fy), cy - 2 < 0 ? 0 : cy - 2);
    const double ax = fx - i, ay = fy - j;
    auto v = [&](int ii, int jj) {
      ii = std::min(ii, cx - 1);
      jj = std::min(jj, cy - 1);
      return (*grid_value)[static_cast<std::size_t>(ii) * cy + jj];
    };
    return (1 - ax) * (1 - ay) * v(i, j) + ax * (1 - ay) * v(i + 1, j) +
           (1 - ax) * ay * v(i, j + 1) + ax * ay * v(i + 1, j + 1);
  };

  DistanceField field;
  field.base = u0;
  field.analytic = false;
  field.value = value;
  field.partials = [value, spec](const Eigen::VectorXd& u) {
    Eigen::VectorXd g(2);
    for (int axis = 0; axis < 2; ++axis) {
      const double h = axis == 0 ? spec->hx : spec->hy;
      Eigen::VectorXd up = u, um = u;
      up[axis] = std::min(up[axis] + h, spec->box.hi[axis]);
      um[axis] = std::max(um[axis] - h, spec->box.lo[axis]);
      g[axis] = (value(up) - value(um)) / (up[axis] - um[axis]);
    }
    return g;
  };
  return field;
}

// ---------------------------------------------------------------------------
// Catalog charts

namespace {

double reference_normal_sign(const Chart& chart, const Eigen::VectorXd& u_ref,
                             const std::function<double(const SurfacePoint&)>&
                                 signed_indicator) {
  // Evaluate with sign +1 and flip if the indicator comes out negative.
  const SurfacePoint pt = chart.at(u_ref);
  return signed_indicator(pt) >= 0.0 ? 1.0 : -1.0;
}

class PlaneChart final : public Chart {
 public:
  PlaneChart(int m, double extent)
      : Chart("plane", m, m + 1, make_domain(m, extent), make_jet(m),
              make_opts(m)) {}

  DistanceField distance_field(const Eigen::VectorXd& u0,
                               double) const override {
    DistanceField f;
    f.base = u0;
    f.analytic = true;
    f.value = [u0](const Eigen::VectorXd& u) { return (u - u0).norm(); };
    f.partials = [u0](const Eigen::VectorXd& u) {
      const double d = (u - u0).norm();
      if (d < 1e-14) return Eigen::VectorXd::Zero(u.size()).eval();
      return ((u - u0) / d).eval();
    };
    return f;
  }

 private:
  static Box make_domain(int m, double extent) {
    Box box;
    box.lo = Eigen::VectorXd::Constant(m, -extent);
    box.hi = Eigen::VectorXd::Constant(m, extent);
    return box;
  }
  static JetFn make_jet(int m) {
    return [m](const Eigen::VectorXd& u) {
      Jet jet;
      jet.pos = Eigen::VectorXd::Zero(m + 1);
      jet.pos.head(m) = u;
      jet.d1 = Eigen::MatrixXd::Zero(m + 1, m);
      jet.d1.topRows(m).setIdentity();
      jet.d2.assign(m + 1, Eigen::MatrixXd::Zero(m, m));
      return jet;
    };
  }
  static ChartOptions make_opts(int m) {
    ChartOptions o;
    o.normal_sign = 1.0;
    o.compact = false;
    o.bounded = false;
    CatalogInfo info;
    info.id = "plane";
    o.catalog = info;
    o.edges.assign(m, {EdgeKind::Boundary, EdgeKind::Boundary});
    return o;
  }
};

JetFn sphere_jet_fn(double R, int m, const Eigen::MatrixXd& rot) {
  return [R, m, rot](const Eigen::VectorXd& u) {
    const SphereJet sj = unit_sphere_jet(m, u);
    Jet jet;
    jet.pos = R * (rot * sj.omega);
    jet.d1 = R * (rot * sj.d1);
    jet.d2.assign(m + 1, Eigen::MatrixXd::Zero(m, m));
    for (int c = 0; c < m + 1; ++c) {
      for (int b = 0; b < m + 1; ++b) {
        if (rot(c, b) == 0.0) continue;
        jet.d2[c] += R * rot(c, b) * sj.d2[b];
      }
    }
    return jet;
  };
}

// Orthogonal map sending the chart pole (last coordinate direction) to the
// given unit direction; Householder reflection, so determinant is -1 unless
// the directions already match.
std::pair<Eigen::MatrixXd, double> pole_to(const Eigen::VectorXd& dir) {
  const int n = static_cast<int>(dir.size());
  Eigen::VectorXd pole = Eigen::VectorXd::Zero(n);
  pole[n - 1] = 1.0;
  Eigen::VectorXd v = pole - dir;
  const double vv = v.squaredNorm();
  if (vv < 1e-24) return {Eigen::MatrixXd::Identity(n, n), 1.0};
  Eigen::MatrixXd H =
      Eigen::MatrixXd::Identity(n, n) - (2.0 / vv) * (v * v.transpose());
  return {H, -1.0};
}

class SphereChart final : public Chart {
 public:
  SphereChart(double R, int m, Eigen::MatrixXd rot, double det_rot)
      : Chart("sphere", m, m + 1, unit_sphere_domain(m),
              sphere_jet_fn(R, m, rot), make_opts(R, m, det_rot)),
        R_(R),
        rot_(std::move(rot)) {}

  DistanceField distance_field(const Eigen::VectorXd& u0,
                               double) const override {
    const Eigen::VectorXd w0 = unit_sphere_jet(m_, u0).omega;
    const double R = R_;
    const int m = m_;
    DistanceField f;
    f.base = u0;
    f.analytic = true;
    f.value = [R, m, w0](const Eigen::VectorXd& u) {
      const double dot =
          std::clamp(unit_sphere_jet(m, u).omega.dot(w0), -1.0, 1.0);
      return R * std::acos(dot);
    };
    f.partials = [R, m, w0](const Eigen::VectorXd& u) {
      const SphereJet sj = unit_sphere_jet(m, u);
      const double dot = std::clamp(sj.omega.dot(w0), -1.0, 1.0);
      const double sin_a = std::sqrt(std::max(1e-24, 1.0 - dot * dot));
      return (-R / sin_a * (sj.d1.transpose() * w0)).eval();
    };
    return f;
  }

  std::shared_ptr<const Surface> recentered(
      const Eigen::VectorXd& u0) const override {
    const Eigen::VectorXd dir = rot_ * unit_sphere_jet(m_, u0).omega;
    auto [H, detH] = pole_to(dir);
    return std::make_shared<SphereChart>(R_, m_, H,
                                         detH);
  }

 private:
  double R_;
  Eigen::MatrixXd rot_;

  static ChartOptions make_opts(double R, int m, double det_rot) {
    ChartOptions o;
    // Base sign calibrated so spheres carry positive curvature; ambient
    // reflections flip the cofactor normal, hence the det factor.
    o.normal_sign = base_sign(m) * det_rot;
    o.compact = true;
    o.edges = unit_sphere_edges(m);
    CatalogInfo info;
    info.id = "sphere";
    info.radius = R;
    info.c = 0.0;
    info.intrinsic_radius = R;
    o.catalog = info;
    return o;
  }

  static double base_sign(int m) {
    // Calibrate once per dimension: with sign +1, is the cofactor-normal
    // curvature of the unit sphere positive or negative?
    static auto probe = [](int mm) {
      ChartOptions o;
      o.normal_sign = 1.0;
      o.compact = true;
      o.edges = unit_sphere_edges(mm);
      Chart chart("probe", mm, mm + 1, unit_sphere_domain(mm),
                  sphere_jet_fn(1.0, mm, Eigen::MatrixXd::Identity(mm + 1, mm + 1)),
                  o);
      Eigen::VectorXd u = unit_sphere_domain(mm).center();
      return reference_normal_sign(
          chart, u, [](const SurfacePoint& pt) {
            return pt.spectrum.lambdas.sum();
          });
    };
    static std::vector<double> cache(8, 0.0);
    if (cache[m] == 0.0) cache[m] = probe(m);
    return cache[m];
  }
};

class CylinderChart final : public Chart {
 public:
  CylinderChart(double R, int k, int m, double z_extent)
      : Chart("cylinder", m, m + 1, make_domain(k, m, z_extent),
              make_jet(R, k, m), make_opts(R, k, m)),
        R_(R),
        k_(k) {}

  DistanceField distance_field(const Eigen::VectorXd& u0,
                               double) const override {
    const double R = R_;
    const int k = k_;
    const int m = m_;
    const Eigen::VectorXd w0 = unit_sphere_jet(k, u0.head(k)).omega;
    const Eigen::VectorXd z0 = u0.tail(m - k);
    DistanceField f;
    f.base = u0;
    f.analytic = true;
    f.value = [R, k, m, w0, z0](const Eigen::VectorXd& u) {
      const double dot =
          std::clamp(unit_sphere_jet(k, u.head(k)).omega.dot(w0), -1.0, 1.0);
      const double ds = R * std::acos(dot);
      const double dz = (u.tail(m - k) - z0).norm();
      return std::sqrt(ds * ds + dz * dz);
    };
    f.partials = [R, k, m, w0, z0](const Eigen::VectorXd& u) {
      const SphereJet sj = unit_sphere_jet(k, u.head(k));
      const double dot = std::clamp(sj.omega.dot(w0), -1.0, 1.0);
      const double ang = std::acos(dot);
      const double ds = R * ang;
      const Eigen::VectorXd dz = u.tail(m - k) - z0;
      const double d = std::sqrt(ds * ds + dz.squaredNorm());
      Eigen::VectorXd g = Eigen::VectorXd::Zero(m);
      if (d < 1e-14) return g;
      const double sin_a = std::sqrt(std::max(1e-24, 1.0 - dot * dot));
      g.head(k) = (ds / d) * (-R / sin_a) * (sj.d1.transpose() * w0);
      g.tail(m - k) = dz / d;
      return g;
    };
    return f;
  }

  std::shared_ptr<const Surface> recentered(
      const Eigen::VectorXd& u0) const override {
    // The cylinder is homogeneous: translate the z block and rotate the
    // sphere factor so u0 becomes the chart center. Only the k = 1 circle
    // factor needs the rotation (a phase shift handled by the periodic
    // coordinate), so recentering reduces to moving the box.
    if (k_ != 1) return nullptr;
    auto copy = std::make_shared<CylinderChart>(R_, k_, m_,
                                                0.5 * domain_.extent(1));
    Box box = copy->domain_;
    box.lo[0] = u0[0] - kPi;
    box.hi[0] = u0[0] + kPi;
    for (int a = 1; a < m_; ++a) {
      const double half = 0.5 * domain_.extent(a);
      box.lo[a] = u0[a] - half;
      box.hi[a] = u0[a] + half;
    }
    copy->domain_ = box;
    return copy;
  }

 private:
  double R_;
  int k_;

  static Box make_domain(int k, int m, double z_extent) {
    const Box sb = unit_sphere_domain(k);
    Box box;
    box.lo = Eigen::VectorXd(m);
    box.hi = Eigen::VectorXd(m);
    box.lo.head(k) = sb.lo;
    box.hi.head(k) = sb.hi;
    for (int a = k; a < m; ++a) {
      box.lo[a] = -z_extent;
      box.hi[a] = z_extent;
    }
    return box;
  }

  static JetFn make_jet(double R, int k, int m) {
    return [R, k, m](const Eigen::VectorXd& u) {
      const SphereJet sj = unit_sphere_jet(k, u.head(k));
      Jet jet;
      jet.pos = Eigen::VectorXd::Zero(m + 1);
      jet.pos.head(k + 1) = R * sj.omega;
      jet.pos.tail(m - k) = u.tail(m - k);
      jet.d1 = Eigen::MatrixXd::Zero(m + 1, m);
      jet.d1.topLeftCorner(k + 1, k) = R * sj.d1;
      jet.d1.bottomRightCorner(m - k, m - k).setIdentity();
      jet.d2.assign(m + 1, Eigen::MatrixXd::Zero(m, m));
      for (int c = 0; c < k + 1; ++c)
        jet.d2[c].topLeftCorner(k, k) = R * sj.d2[c];
      return jet;
    };
  }

  static ChartOptions make_opts(double R, int k, int m) {
    ChartOptions o;
    o.normal_sign = base_sign(R, k, m);
    o.compact = false;
    o.bounded = false;
    const auto se = unit_sphere_edges(k);
    o.edges.assign(m, {EdgeKind::Boundary, EdgeKind::Boundary});
    for (int a = 0; a < k; ++a) o.edges[a] = se[a];
    CatalogInfo info;
    info.id = "cylinder";
    info.radius = R;
    info.k = k;
    o.catalog = info;
    return o;
  }

  static double base_sign(double R, int k, int m) {
    ChartOptions o;
    o.normal_sign = 1.0;
    o.edges.assign(m, {EdgeKind::Boundary, EdgeKind::Boundary});
    Chart chart("probe", m, m + 1, make_domain(k, m, 1.0), make_jet(R, k, m),
                o);
    Eigen::VectorXd u = chart.domain().center();
    return reference_normal_sign(chart, u, [](const SurfacePoint& pt) {
      return pt.spectrum.lambdas.sum();
    });
  }
};

class GeodesicSphereChart final : public Surface {
 public:
  GeodesicSphereChart(double R, double c, int m, Eigen::MatrixXd rot)
      : R_(R), c_(c), m_(m), rot_(std::move(rot)),
        domain_(unit_sphere_domain(m)), edges_(unit_sphere_edges(m)) {
    if (R <= 0.0) throw ArgumentError("geodesic-sphere: radius must be > 0");
    if (c_ == 0.0)
      throw ArgumentError("geodesic-sphere: use the flat sphere for c == 0");
    if (c_ > 0.0 && R >= kPi / (2.0 * std::sqrt(c_)))
      throw ArgumentError(
          "geodesic-sphere: radius leaves the open upper hemisphere");
    const auto cmp = ambient::comparison(c_, R_);
    scale_ = cmp.value;
    lambda_ = cmp.derivative / cmp.value;
    info_.id = "geodesic-sphere";
    info_.radius = R_;
    info_.c = c_;
    info_.intrinsic_radius = scale_;
  }

  int m() const override { return m_; }
  int ambient_dim() const override { return m_ + 2; }
  double ambient_c() const override { return c_; }
  const Box& domain() const override { return domain_; }
  bool compact() const override { return true; }
  std::string name() const override { return "geodesic-sphere"; }
  const CatalogInfo* catalog_info() const override { return &info_; }
  EdgeKind edge_kind(int axis, int side) const override {
    return edges_.at(axis)[side];
  }

  SurfacePoint at(const Eigen::VectorXd& u) const override {
    const SphereJet sj = unit_sphere_jet(m_, u);
    SurfacePoint pt;
    pt.param = u;
    pt.position = embed(sj.omega);
    pt.first = (scale_ * scale_) * (sj.d1.transpose() * sj.d1);
    const double det = pt.first.determinant();
    const double scale = std::pow(pt.first.trace() / m_, m_);
    if (!(det > 1e-12 * std::max(scale, 1e-300)))
      throw GeometryError("geodesic-sphere: degenerate chart point");
    pt.second = lambda_ * pt.first;
    pt.shape = lambda_ * Eigen::MatrixXd::Identity(m_, m_);
    pt.spectrum =
        symfun::ShapeSpectrum(m_, Eigen::VectorXd::Constant(m_, lambda_));
    const Eigen::MatrixXd L = pt.first.llt().matrixL();
    pt.frame = L.transpose()
                   .triangularView<Eigen::Upper>()
                   .solve(Eigen::MatrixXd::Identity(m_, m_));
    pt.area_element = std::sqrt(det);
    return pt;
  }

  Eigen::VectorXd position(const Eigen::VectorXd& u) const override {
    return embed(unit_sphere_jet(m_, u).omega);
  }

  DistanceField distance_field(const Eigen::VectorXd& u0,
                               double) const override {
    const Eigen::VectorXd w0 = unit_sphere_jet(m_, u0).omega;
    const double a = scale_;
    const int m = m_;
    DistanceField f;
    f.base = u0;
    f.analytic = true;
    f.value = [a, m, w0](const Eigen::VectorXd& u) {
      const double dot =
          std::clamp(unit_sphere_jet(m, u).omega.dot(w0), -1.0, 1.0);
      return a * std::acos(dot);
    };
    f.partials = [a, m, w0](const Eigen::VectorXd& u) {
      const SphereJet sj = unit_sphere_jet(m, u);
      const double dot = std::clamp(sj.omega.dot(w0), -1.0, 1.0);
      const double sin_a = std::sqrt(std::max(1e-24, 1.0 - dot * dot));
      return (-a / sin_a * (sj.d1.transpose() * w0)).eval();
    };
    return f;
  }

  std::optional<double> weighted_support(
      const SurfacePoint&, const ambient::ComparisonFn& G) const override {
    // rho == R from the model pole and the inward normal faces the pole.
    return -G.value(R_);
  }

  std::shared_ptr<const Surface> recentered(
      const Eigen::VectorXd& u0) const override {
    const Eigen::VectorXd dir = rot_ * unit_sphere_jet(m_, u0).omega;
    auto [H, detH] = pole_to(dir);
    (void)detH;  // umbilic analytic spectra: no cofactor normal involved
    return std::make_shared<GeodesicSphereChart>(R_, c_, m_, H);
  }

 private:
  Eigen::VectorXd embed(const Eigen::VectorXd& omega) const {
    Eigen::VectorXd x(m_ + 2);
    const Eigen::VectorXd w = rot_ * omega;
    if (c_ > 0.0) {
      const double rc = std::sqrt(c_);
      x.head(m_ + 1) = (std::sin(rc * R_) / rc) * w;
      x[m_ + 1] = std::cos(rc * R_) / rc;
    } else {
      const double k = std::sqrt(-c_);
      x.head(m_ + 1) = (std::sinh(k * R_) / k) * w;
      x[m_ + 1] = std::cosh(k * R_) / k;
    }
    return x;
  }

  double R_, c_;
  int m_;
  Eigen::MatrixXd rot_;
  Box domain_;
  std::vector<std::array<EdgeKind, 2>> edges_;
  double scale_, lambda_;
  CatalogInfo info_;
};

class GraphChart final : public Chart {
 public:
  GraphChart(const HeightField& h, int m, double extent, bool analytic,
             double fd_step)
      : Chart("graph", m, m + 1, make_domain(m, extent),
              analytic ? analytic_jet(h, m)
                       : Chart::fd_jet(position_fn(h, m), m, m + 1,
                                        fd_step * extent),
              make_opts(m)) {}

 private:
  static Box make_domain(int m, double extent) {
    Box box;
    box.lo = Eigen::VectorXd::Constant(m, -extent);
    box.hi = Eigen::VectorXd::Constant(m, extent);
    return box;
  }
  static PositionFn position_fn(const HeightField& h, int m) {
    return [h, m](const Eigen::VectorXd& u) {
      Eigen::VectorXd p(m + 1);
      p.head(m) = u;
      p[m] = h.value(u);
      return p;
    };
  }
  static JetFn analytic_jet(const HeightField& h, int m) {
    return [h, m](const Eigen::VectorXd& u) {
      Jet jet;
      jet.pos = Eigen::VectorXd(m + 1);
      jet.pos.head(m) = u;
      jet.pos[m] = h.value(u);
      jet.d1 = Eigen::MatrixXd::Zero(m + 1, m);
      jet.d1.topRows(m).setIdentity();
      jet.d1.row(m) = h.grad(u).transpose();
      jet.d2.assign(m + 1, Eigen::MatrixXd::Zero(m, m));
      jet.d2[m] = h.hess(u);
      return jet;
    };
  }
  static ChartOptions make_opts(int m) {
    ChartOptions o;
    o.normal_sign = 1.0;  // upward normal: upward-opening bowls curve positive
    CatalogInfo info;
    info.id = "graph";
    o.catalog = info;
    o.edges.assign(m, {EdgeKind::Boundary, EdgeKind::Boundary});
    return o;
  }
};

class RevolutionChart final : public Chart {
 public:
  RevolutionChart(CurveFn curve, double s_lo, double s_hi, int m,
                  std::string label, bool compact, double user_sign)
      : Chart(std::move(label), m, m + 1, make_domain(s_lo, s_hi, m),
              make_jet(curve, m), make_opts(curve, s_lo, s_hi, m, compact,
                                            user_sign)) {}

 private:
  static Box make_domain(double s_lo, double s_hi, int m) {
    const Box sb = unit_sphere_domain(m - 1);
    Box box;
    box.lo = Eigen::VectorXd(m);
    box.hi = Eigen::VectorXd(m);
    box.lo[0] = s_lo;
    box.hi[0] = s_hi;
    box.lo.tail(m - 1) = sb.lo;
    box.hi.tail(m - 1) = sb.hi;
    return box;
  }

  static JetFn make_jet(CurveFn curve, int m) {
    return [curve, m](const Eigen::VectorXd& u) {
      const CurveJet cj = curve(u[0]);
      const SphereJet sj = unit_sphere_jet(m - 1, u.tail(m - 1));
      const int n = m + 1;
      Jet jet;
      jet.pos = Eigen::VectorXd(n);
      jet.pos.head(m) = cj.x * sj.omega;
      jet.pos[m] = cj.z;
      jet.d1 = Eigen::MatrixXd::Zero(n, m);
      jet.d1.col(0).head(m) = cj.dx * sj.omega;
      jet.d1(m, 0) = cj.dz;
      jet.d1.block(0, 1, m, m - 1) = cj.x * sj.d1;
      jet.d2.assign(n, Eigen::MatrixXd::Zero(m, m));
      for (int c = 0; c < m; ++c) {
        jet.d2[c](0, 0) = cj.ddx * sj.omega[c];
        for (int j = 1; j < m; ++j) {
          const double v = cj.dx * sj.d1(c, j - 1);
          jet.d2[c](0, j) = v;
          jet.d2[c](j, 0) = v;
        }
        for (int i = 1; i < m; ++i)
          for (int j = 1; j < m; ++j)
            jet.d2[c](i, j) = cj.x * sj.d2[c](i - 1, j - 1);
      }
      jet.d2[m](0, 0) = cj.ddz;
      return jet;
    };
  }

  static ChartOptions make_opts(const CurveFn& curve, double s_lo, double s_hi,
                                int m, bool compact, double user_sign) {
    ChartOptions o;
    o.compact = compact;
    o.bounded = compact;
    const auto se = unit_sphere_edges(m - 1);
    o.edges.assign(m, {EdgeKind::Boundary, EdgeKind::Boundary});
    for (int a = 1; a < m; ++a) o.edges[a] = se[a - 1];
    CatalogInfo info;
    info.id = "revolution";
    o.catalog = info;

    // Calibrate the cofactor normal against the profile-plane convention
    // eta = (-z' omega, x'): the orientation that makes spheres positive.
    o.normal_sign = 1.0;
    Chart probe("probe", m, m + 1, make_domain(s_lo, s_hi, m),
                make_jet(curve, m), o);
    Eigen::VectorXd u = probe.domain().center();
    const CurveJet cj = curve(u[0]);
    const SphereJet sj = unit_sphere_jet(m - 1, u.tail(m - 1));
    Eigen::VectorXd eta_ref(m + 1);
    eta_ref.head(m) = -cj.dz * sj.omega;
    eta_ref[m] = cj.dx;
    const SurfacePoint pt = probe.at(u);
    o.normal_sign = (pt.normal.dot(eta_ref) >= 0.0 ? 1.0 : -1.0) * user_sign;
    return o;
  }
};

}  // namespace

std::shared_ptr<const Surface> make_plane(int m, double extent) {
  if (m < 2 || extent <= 0.0) throw ArgumentError("make_plane: bad params");
  return std::make_shared<PlaneChart>(m, extent);
}

std::shared_ptr<const Surface> make_sphere(double R, int m) {
  if (m < 2 || R <= 0.0) throw ArgumentError("make_sphere: bad params");
  return std::make_shared<SphereChart>(
      R, m, Eigen::MatrixXd::Identity(m + 1, m + 1), 1.0);
}

std::shared_ptr<const Surface> make_geodesic_sphere(double R, double c,
                                                    int m) {
  if (m < 2 || R <= 0.0)
    throw ArgumentError("make_geodesic_sphere: bad params");
  if (c == 0.0) return make_sphere(R, m);
  return std::make_shared<GeodesicSphereChart>(
      R, c, m, Eigen::MatrixXd::Identity(m + 1, m + 1));
}

std::shared_ptr<const Surface> make_cylinder(double R, int k, int m,
                                             double z_extent) {
  if (m < 2 || R <= 0.0 || k < 1 || k >= m || z_extent <= 0.0)
    throw ArgumentError("make_cylinder: bad params");
  return std::make_shared<CylinderChart>(R, k, m, z_extent);
}

HeightField height_zero() {
  HeightField h;
  h.value = [](const Eigen::VectorXd&) { return 0.0; };
  h.grad = [](const Eigen::VectorXd& u) {
    return Eigen::VectorXd::Zero(u.size()).eval();
  };
  h.hess = [](const Eigen::VectorXd& u) {
    return Eigen::MatrixXd::Zero(u.size(), u.size()).eval();
  };
  return h;
}

HeightField height_paraboloid(double scale) {
  HeightField h;
  h.value = [scale](const Eigen::VectorXd& u) {
    return 0.5 * scale * u.squaredNorm();
  };
  h.grad = [scale](const Eigen::VectorXd& u) { return (scale * u).eval(); };
  h.hess = [scale](const Eigen::VectorXd& u) {
    return (scale *
            Eigen::MatrixXd::Identity(u.size(), u.size())).eval();
  };
  return h;
}

HeightField height_sine(double scale) {
  HeightField h;
  h.value = [scale](const Eigen::VectorXd& u) {
    double p = scale;
    for (int i = 0; i < u.size(); ++i) p *= std::sin(u[i]);
    return p;
  };
  h.grad = [scale](const Eigen::VectorXd& u) {
    Eigen::VectorXd g(u.size());
    for (int i = 0; i < u.size(); ++i) {
      double p = scale;
      for (int j = 0; j < u.size(); ++j)
        p *= (j == i) ? std::cos(u[j]) : std::sin(u[j]);
      g[i] = p;
    }
    return g;
  };
  h.hess = [scale](const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    Eigen::MatrixXd H(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double p = scale;
        for (int l = 0; l < n; ++l) {
          if (l == i && l == j) {
            p *= -std::sin(u[l]);
          } else if (l == i || l == j) {
            p *= std::cos(u[l]);
          } else {
            p *= std::sin(u[l]);
          }
        }
        H(i, j) = p;
      }
    return H;
  };
  return h;
}

std::shared_ptr<const Surface> make_graph(const HeightField& h, int m,
                                          double extent, bool analytic_jets,
                                          double fd_step) {
  if (m < 2 || extent <= 0.0) throw ArgumentError("make_graph: bad params");
  return std::make_shared<GraphChart>(h, m, extent, analytic_jets, fd_step);
}

std::shared_ptr<const Surface> make_revolution(CurveFn curve, double s_lo,
                                               double s_hi, int m,
                                               std::string name, bool compact,
                                               double normal_sign) {
  if (m < 2 || s_hi <= s_lo) throw ArgumentError("make_revolution: bad params");
  return std::make_shared<RevolutionChart>(std::move(curve), s_lo, s_hi, m,
                                           std::move(name), compact,
                                           normal_sign);
}

std::shared_ptr<const Surface> catalog(const std::string& id,
                                       const CatalogParams& p) {
  if (id == "plane") return make_plane(p.m, p.extent);
  if (id == "sphere") return make_sphere(p.radius, p.m);
  if (id == "geodesic-sphere") return make_geodesic_sphere(p.radius, p.c, p.m);
  if (id == "cylinder") return make_cylinder(p.radius, p.k, p.m, p.z_extent);
  if (id == "graph") {
    HeightField h;
    if (p.height == "zero") {
      h = height_zero();
    } else if (p.height == "paraboloid") {
      h = height_paraboloid(p.height_scale);
    } else if (p.height == "sine") {
      h = height_sine(p.height_scale);
    } else {
      throw ArgumentError("catalog: unknown graph height '" + p.height + "'");
    }
    return make_graph(h, p.m, p.extent);
  }
  if (id == "revolution") {
    // Named profile: a circle of the given radius (a sphere as a revolution
    // surface), mainly a pipeline cross-check target.
    const double R = p.radius;
    if (R <= 0.0) throw ArgumentError("catalog: revolution needs radius > 0");
    CurveFn circle = [R](double s) {
      CurveJet j;
      j.x = R * std::sin(s / R);
      j.dx = std::cos(s / R);
      j.ddx = -std::sin(s / R) / R;
      j.z = -R * std::cos(s / R);
      j.dz = std::sin(s / R);
      j.ddz = std::cos(s / R) / R;
      return j;
    };
    return make_revolution(circle, 0.05 * R, (kPi - 0.05) * R, p.m,
                           "revolution", false);
  }
  throw ArgumentError("catalog: unknown surface id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"plane", "sphere", "geodesic-sphere", "cylinder", "graph",
          "revolution"};
}

std::string catalog_doc(const std::string& id) {
  if (id == "plane") return "plane: m, extent (box half-width)";
  if (id == "sphere") return "sphere: radius, m";
  if (id == "geodesic-sphere")
    return "geodesic-sphere: radius, c (ambient curvature), m";
  if (id == "cylinder")
    return "cylinder: radius, k (sphere factor dim), m, z-extent";
  if (id == "graph")
    return "graph: m, extent, height in {zero, paraboloid, sine}, "
           "height-scale";
  if (id == "revolution")
    return "revolution: radius (circle profile), m";
  throw ArgumentError("catalog_doc: unknown surface id '" + id + "'");
}

}  // namespace hyperlab::geom
