#include "hyperlab/measure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hyperlab/util.hpp"

namespace hyperlab::measure {

ScalarField ScalarField::constant(double v) {
  ScalarField f;
  f.value = [v](const SurfacePoint&) { return v; };
  f.partials = [v](const SurfacePoint& pt) {
    (void)v;
    return Eigen::VectorXd::Zero(pt.param.size()).eval();
  };
  return f;
}

MappedPatch MappedPatch::identity(const Box& box) {
  MappedPatch p;
  p.box = box;
  p.map = [](const Eigen::VectorXd& t) { return t; };
  const int d = box.dim();
  p.jacobian = [d](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(d, d).eval();
  };
  return p;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre rules (Golub-Welsch), cached per node count.

namespace {

struct GLRule {
  Eigen::VectorXd nodes;    // on (-1, 1)
  Eigen::VectorXd weights;  // sum to 2
};

const GLRule& gl_rule(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GLRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = Eigen::VectorXd(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * v0 * v0;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Tensor-product sweep over a box with n nodes per axis; fn receives the box
// point and the product weight. Iteration order is row-major and the caller
// accumulates with compensated summation, so results are bit-stable.
template <class F>
void tensor_sweep(const Box& box, int n, F&& fn) {
  const int d = box.dim();
  const GLRule& rule = gl_rule(n);
  std::vector<int> idx(d, 0);
  Eigen::VectorXd t(d);
  for (;;) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      const double half = 0.5 * box.extent(a);
      t[a] = box.lo[a] + half * (1.0 + rule.nodes[idx[a]]);
      w *= half * rule.weights[idx[a]];
    }
    fn(t, w);
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++idx[a] < n) break;
      idx[a] = 0;
    }
    if (a < 0) break;
  }
}

double patch_sum(const Region& region, const MappedPatch& patch,
                 const ScalarField& integrand, const ScalarField& f, int n) {
  const Surface& surf = region.surf();
  KahanSum sum;
  tensor_sweep(patch.box, n, [&](const Eigen::VectorXd& t, double w) {
    const Eigen::VectorXd u = patch.map(t);
    const SurfacePoint pt = surf.at(u);
    if (region.indicator && !region.indicator(pt)) return;
    const double det = std::abs(patch.jacobian(t).determinant());
    const double g = integrand.value(pt) * std::exp(-f.value(pt));
    sum.add(w * g * pt.area_element * det);
  });
  return sum.value();
}

double boundary_patch_sum(const Region& region, const BoundaryPatch& patch,
                          const ScalarField& integrand, const ScalarField& f,
                          int n) {
  const Surface& surf = region.surf();
  KahanSum sum;
  if (patch.box.dim() == 0) return 0.0;
  tensor_sweep(patch.box, n, [&](const Eigen::VectorXd& t, double w) {
    const Eigen::VectorXd u = patch.map(t);
    const SurfacePoint pt = surf.at(u);
    const Eigen::MatrixXd J = patch.jacobian(t);
    const Eigen::MatrixXd pullback = J.transpose() * pt.first * J;
    const double measure = std::sqrt(std::max(0.0, pullback.determinant()));
    const double g = integrand.value(pt) * std::exp(-f.value(pt));
    sum.add(w * g * measure);
  });
  return sum.value();
}

QuadResult refine(const std::function<double(int)>& level_sum,
                  const QuadOptions& opts) {
  QuadResult out;
  double prev = 0.0;
  for (int level = 0; level < opts.max_levels; ++level) {
    const int n = opts.base_nodes << level;
    const double cur = level_sum(n);
    out.levels_used = level + 1;
    if (level > 0) {
      const double scale = std::max(std::abs(cur), std::abs(prev));
      const double delta = std::abs(cur - prev);
      out.value = cur;
      out.achieved_rel = scale > 0.0 ? delta / scale : 0.0;
      if (delta <= opts.rel_tol * scale || delta <= 1e-14 * (1.0 + scale)) {
        out.converged = true;
        return out;
      }
    }
    prev = cur;
    out.value = cur;
  }
  out.converged = false;
  if (opts.throw_on_nonconvergence) {
    throw ConvergenceError("quadrature did not reach the requested tolerance",
                           prev, out.value);
  }
  return out;
}

}  // namespace

QuadResult integrate(const Region& region, const ScalarField& integrand,
                     const ScalarField& f, const QuadOptions& opts) {
  return refine(
      [&](int n) {
        KahanSum total;
        for (const MappedPatch& patch : region.patches)
          total.add(patch_sum(region, patch, integrand, f, n));
        return total.value();
      },
      opts);
}

QuadResult integrate_boundary(const Region& region,
                              const ScalarField& integrand,
                              const ScalarField& f, const QuadOptions& opts) {
  if (region.boundary.empty()) {
    QuadResult out;
    out.value = 0.0;
    out.converged = true;
    return out;
  }
  return refine(
      [&](int n) {
        KahanSum total;
        for (const BoundaryPatch& patch : region.boundary)
          total.add(boundary_patch_sum(region, patch, integrand, f, n));
        return total.value();
      },
      opts);
}

double integrate_fixed(const Region& region, const ScalarField& integrand,
                       const ScalarField& f, int nodes_per_axis) {
  KahanSum total;
  for (const MappedPatch& patch : region.patches)
    total.add(patch_sum(region, patch, integrand, f, nodes_per_axis));
  return total.value();
}

// ---------------------------------------------------------------------------
// Region factories

namespace {

Box face_box(const Box& box, int axis) {
  Box out;
  const int d = box.dim();
  out.lo = Eigen::VectorXd(d - 1);
  out.hi = Eigen::VectorXd(d - 1);
  int j = 0;
  for (int a = 0; a < d; ++a) {
    if (a == axis) continue;
    out.lo[j] = box.lo[a];
    out.hi[j] = box.hi[a];
    ++j;
  }
  return out;
}

BoundaryPatch face_patch(const Box& box, int axis, double value) {
  BoundaryPatch p;
  p.box = face_box(box, axis);
  const int d = box.dim();
  p.map = [axis, value, d](const Eigen::VectorXd& t) {
    Eigen::VectorXd u(d);
    int j = 0;
    for (int a = 0; a < d; ++a) u[a] = (a == axis) ? value : t[j++];
    return u;
  };
  p.jacobian = [axis, d](const Eigen::VectorXd&) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(d, d - 1);
    int j = 0;
    for (int a = 0; a < d; ++a) {
      if (a == axis) continue;
      J(a, j++) = 1.0;
    }
    return J;
  };
  return p;
}

// Box faces that are genuine boundary: interior cuts always, chart-box faces
// only when the chart marks them Boundary (periodic seams and degenerate
// poles close up).
void add_box_boundary(Region& region, const Box& box) {
  const Surface& surf = region.surf();
  const Box& dom = surf.domain();
  for (int a = 0; a < box.dim(); ++a) {
    for (int side = 0; side < 2; ++side) {
      const double value = side == 0 ? box.lo[a] : box.hi[a];
      const double dom_value = side == 0 ? dom.lo[a] : dom.hi[a];
      const bool at_chart_edge =
          std::abs(value - dom_value) <= 1e-12 * (1.0 + std::abs(dom_value));
      if (at_chart_edge &&
          surf.edge_kind(a, side) != geom::EdgeKind::Boundary)
        continue;
      region.boundary.push_back(face_patch(box, a, value));
    }
  }
  region.boundary_empty = region.boundary.empty();
}

}  // namespace

Region whole_surface(std::shared_ptr<const Surface> surface) {
  Region region;
  region.surface = std::move(surface);
  const Box& dom = region.surf().domain();
  region.patches.push_back(MappedPatch::identity(dom));
  if (region.surf().compact()) {
    region.boundary_empty = true;
  } else {
    add_box_boundary(region, dom);
  }
  return region;
}

Region param_box(std::shared_ptr<const Surface> surface, const Box& box) {
  if (box.dim() != surface->m())
    throw ArgumentError("param_box: box dimension mismatch");
  Region region;
  region.surface = std::move(surface);
  region.patches.push_back(MappedPatch::identity(box));
  add_box_boundary(region, box);
  return region;
}

namespace {

// Polar ball patch around u0 in chart coordinates with a per-axis scaling:
// map(rho, ang) = u0 + rho * diag(scales) * omega(ang).
void add_polar_ball(Region& region, const Eigen::VectorXd& u0, double R,
                    const Eigen::VectorXd& scales) {
  const int m = static_cast<int>(u0.size());
  MappedPatch patch;
  if (m == 2) {
    patch.box.lo = Eigen::VectorXd(2);
    patch.box.hi = Eigen::VectorXd(2);
    patch.box.lo << 0.0, 0.0;
    patch.box.hi << R, 2.0 * kPi;
  } else {
    const Box sb = geom::unit_sphere_domain(m - 1);
    patch.box.lo = Eigen::VectorXd(m);
    patch.box.hi = Eigen::VectorXd(m);
    patch.box.lo[0] = 0.0;
    patch.box.hi[0] = R;
    patch.box.lo.tail(m - 1) = sb.lo;
    patch.box.hi.tail(m - 1) = sb.hi;
  }
  patch.map = [u0, scales, m](const Eigen::VectorXd& t) {
    const auto sj = geom::unit_sphere_jet(m - 1, t.tail(m - 1));
    return (u0 + t[0] * scales.cwiseProduct(sj.omega)).eval();
  };
  patch.jacobian = [scales, m](const Eigen::VectorXd& t) {
    const auto sj = geom::unit_sphere_jet(m - 1, t.tail(m - 1));
    Eigen::MatrixXd J(m, m);
    J.col(0) = scales.cwiseProduct(sj.omega);
    for (int j = 0; j < m - 1; ++j)
      J.col(j + 1) = t[0] * scales.cwiseProduct(sj.d1.col(j));
    return J;
  };
  region.patches.push_back(patch);

  BoundaryPatch bp;
  bp.box = m == 2 ? Box{Eigen::VectorXd::Zero(1),
                        Eigen::VectorXd::Constant(1, 2.0 * kPi)}
                  : geom::unit_sphere_domain(m - 1);
  bp.map = [u0, scales, R, m](const Eigen::VectorXd& ang) {
    const auto sj = geom::unit_sphere_jet(m - 1, ang);
    return (u0 + R * scales.cwiseProduct(sj.omega)).eval();
  };
  bp.jacobian = [scales, R, m](const Eigen::VectorXd& ang) {
    const auto sj = geom::unit_sphere_jet(m - 1, ang);
    Eigen::MatrixXd J(m, m - 1);
    for (int j = 0; j < m - 1; ++j)
      J.col(j) = R * scales.cwiseProduct(sj.d1.col(j));
    return J;
  };
  region.boundary.push_back(bp);
}

}  // namespace

Region intrinsic_ball(std::shared_ptr<const Surface> surface,
                      const Eigen::VectorXd& u0, double R,
                      double fallback_resolution) {
  if (R <= 0.0) throw ArgumentError("intrinsic_ball: radius must be > 0");
  const geom::CatalogInfo* info = surface->catalog_info();
  const std::string id = info ? info->id : "";
  const int m = surface->m();

  Region region;

  if (id == "plane") {
    region.surface = surface;
    add_polar_ball(region, u0, R, Eigen::VectorXd::Ones(m));
    for (int a = 0; a < m; ++a) {
      if (u0[a] - R < surface->domain().lo[a] ||
          u0[a] + R > surface->domain().hi[a])
        region.truncated = true;
    }
    BallInfo ball;
    ball.center_param = u0;
    ball.radius = R;
    ball.distance = surface->distance_field(u0, 0.0);
    region.ball = ball;
    return region;
  }

  if (id == "sphere" || id == "geodesic-sphere") {
    auto re = surface->recentered(u0);
    if (!re) throw GeometryError("intrinsic_ball: recentering failed");
    region.surface = re;
    const double r_int = info->intrinsic_radius;
    double theta_max = R / r_int;
    if (theta_max >= kPi) {
      theta_max = kPi;
      region.truncated = true;  // ball swallowed the whole sphere
    }
    Box box = re->domain();
    box.hi[0] = theta_max;
    region.patches.push_back(MappedPatch::identity(box));
    if (!region.truncated) {
      region.boundary.push_back(face_patch(box, 0, theta_max));
    } else {
      region.boundary_empty = true;
    }
    BallInfo ball;
    ball.center_param = Eigen::VectorXd::Zero(m);
    ball.radius = R;
    DistanceField dist;
    dist.base = ball.center_param;
    dist.analytic = true;
    dist.value = [r_int](const Eigen::VectorXd& u) { return r_int * u[0]; };
    dist.partials = [r_int, m](const Eigen::VectorXd&) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(m);
      g[0] = r_int;
      return g;
    };
    ball.distance = dist;
    region.ball = ball;
    return region;
  }

  if (id == "cylinder" && info->k == 1 && m == 2) {
    auto re = surface->recentered(u0);
    if (!re) throw GeometryError("intrinsic_ball: recentering failed");
    region.surface = re;
    const double Rc = info->radius;
    const double z_half = 0.5 * re->domain().extent(1);
    if (std::abs(R) > z_half) region.truncated = true;

    if (R <= kPi * Rc) {
      Eigen::VectorXd scales(2);
      scales << 1.0 / Rc, 1.0;
      add_polar_ball(region, u0, R, scales);
    } else {
      // Wrap-around ball: {|x| <= pi Rc, x^2 + z^2 < R^2} in unrolled
      // coordinates x = Rc (theta - theta0).
      MappedPatch patch;
      patch.box.lo = Eigen::VectorXd(2);
      patch.box.hi = Eigen::VectorXd(2);
      patch.box.lo << -kPi * Rc, -1.0;
      patch.box.hi << kPi * Rc, 1.0;
      const Eigen::VectorXd c0 = u0;
      patch.map = [c0, Rc, R](const Eigen::VectorXd& t) {
        const double g = std::sqrt(R * R - t[0] * t[0]);
        Eigen::VectorXd u(2);
        u[0] = c0[0] + t[0] / Rc;
        u[1] = c0[1] + t[1] * g;
        return u;
      };
      patch.jacobian = [R](const Eigen::VectorXd& t) {
        const double g = std::sqrt(R * R - t[0] * t[0]);
        Eigen::MatrixXd J(2, 2);
        J(0, 0) = 1.0;  // d theta / d x times Rc cancels below; see note
        J(0, 1) = 0.0;
        J(1, 0) = -t[1] * t[0] / g;
        J(1, 1) = g;
        return J;
      };
      // The theta scaling: d theta / d x = 1/Rc.
      auto base_map = patch.map;
      auto base_jac = patch.jacobian;
      const double rc = Rc;
      patch.jacobian = [base_jac, rc](const Eigen::VectorXd& t) {
        Eigen::MatrixXd J = base_jac(t);
        J.row(0) /= rc;
        return J;
      };
      region.patches.push_back(patch);

      for (int side = 0; side < 2; ++side) {
        BoundaryPatch bp;
        bp.box.lo = Eigen::VectorXd::Constant(1, -kPi * Rc);
        bp.box.hi = Eigen::VectorXd::Constant(1, kPi * Rc);
        const double sgn = side == 0 ? 1.0 : -1.0;
        bp.map = [c0, rc, R, sgn](const Eigen::VectorXd& t) {
          const double g = std::sqrt(R * R - t[0] * t[0]);
          Eigen::VectorXd u(2);
          u[0] = c0[0] + t[0] / rc;
          u[1] = c0[1] + sgn * g;
          return u;
        };
        bp.jacobian = [rc, R, sgn](const Eigen::VectorXd& t) {
          const double g = std::sqrt(R * R - t[0] * t[0]);
          Eigen::MatrixXd J(2, 1);
          J(0, 0) = 1.0 / rc;
          J(1, 0) = -sgn * t[0] / g;
          return J;
        };
        region.boundary.push_back(bp);
      }
    }
    BallInfo ball;
    ball.center_param = u0;
    ball.radius = R;
    ball.distance = re->distance_field(u0, 0.0);
    region.ball = ball;
    return region;
  }

  // Fallback: indicator region over a grid-graph distance field.
  region.surface = surface;
  DistanceField dist = surface->distance_field(u0, fallback_resolution);
  MappedPatch patch = MappedPatch::identity(surface->domain());
  region.patches.push_back(patch);
  region.indicator = [dist, R](const SurfacePoint& pt) {
    return dist.value(pt.param) < R;
  };
  BallInfo ball;
  ball.center_param = u0;
  ball.radius = R;
  ball.distance = dist;
  region.ball = ball;
  region.truncated = true;  // accuracy caveat: indicator quadrature
  return region;
}

RampData u_ramp(const Region& ball_region, double eps) {
  if (!ball_region.ball)
    throw ArgumentError("u_ramp: region does not carry ball data");
  if (eps <= 0.0) throw ArgumentError("u_ramp: eps must be positive");
  const BallInfo& ball = *ball_region.ball;
  const double R = ball.radius;
  const DistanceField dist = ball.distance;

  RampData out;
  out.u.value = [dist, R, eps](const SurfacePoint& pt) {
    const double d = dist.value(pt.param);
    return std::clamp((R - d) / eps, 0.0, 1.0);
  };
  out.u.partials = [dist, R, eps](const SurfacePoint& pt) {
    const double d = dist.value(pt.param);
    if (d >= R - eps && d < R)
      return (-(1.0 / eps) * dist.partials(pt.param)).eval();
    return Eigen::VectorXd::Zero(pt.param.size()).eval();
  };

  out.split_region = ball_region;
  out.split_region.patches.clear();
  for (const MappedPatch& patch : ball_region.patches) {
    // Ball patches carry the distance linearly along coordinate 0; split at
    // the ramp kink so each piece stays smooth. (Splitting a non-radial
    // patch would merely subdivide it, which is harmless.)
    const double r_hi = patch.box.hi[0];
    const double r_lo = patch.box.lo[0];
    const double scale = (R > 0) ? (r_hi - r_lo) / R : 1.0;
    const double split = r_lo + (R - eps) * scale;
    if (split <= r_lo || split >= r_hi) {
      out.split_region.patches.push_back(patch);
      continue;
    }
    MappedPatch inner = patch, outer = patch;
    inner.box.hi[0] = split;
    outer.box.lo[0] = split;
    out.split_region.patches.push_back(inner);
    out.split_region.patches.push_back(outer);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling, diameters, enclosing centers

SampleSet sample_region(const Region& region, int interior_per_axis,
                        int boundary_per_axis, std::size_t budget) {
  SampleSet out;
  const Surface& surf = region.surf();
  auto push = [&](const Eigen::VectorXd& u, bool on_bd) {
    if (out.params.size() >= budget) return;
    if (region.indicator) {
      SurfacePoint pt;
      try {
        pt = surf.at(u);
      } catch (const GeometryError&) {
        return;
      }
      if (!region.indicator(pt)) return;
      out.params.push_back(u);
      out.positions.push_back(pt.position);
      out.on_boundary.push_back(on_bd);
      return;
    }
    try {
      out.params.push_back(u);
      out.positions.push_back(surf.position(u));
      out.on_boundary.push_back(on_bd);
    } catch (const GeometryError&) {
    }
  };

  for (const MappedPatch& patch : region.patches) {
    const int d = patch.box.dim();
    std::vector<int> idx(d, 0);
    for (;;) {
      Eigen::VectorXd t(d);
      for (int a = 0; a < d; ++a) {
        t[a] = patch.box.lo[a] +
               patch.box.extent(a) * (idx[a] + 0.5) / interior_per_axis;
      }
      push(patch.map(t), false);
      int a = d - 1;
      for (; a >= 0; --a) {
        if (++idx[a] < interior_per_axis) break;
        idx[a] = 0;
      }
      if (a < 0) break;
    }
  }
  for (const BoundaryPatch& patch : region.boundary) {
    const int d = patch.box.dim();
    if (d == 0) continue;
    std::vector<int> idx(d, 0);
    for (;;) {
      Eigen::VectorXd t(d);
      for (int a = 0; a < d; ++a) {
        t[a] = patch.box.lo[a] +
               patch.box.extent(a) * (idx[a] + 0.5) / boundary_per_axis;
      }
      push(patch.map(t), true);
      int a = d - 1;
      for (; a >= 0; --a) {
        if (++idx[a] < boundary_per_axis) break;
        idx[a] = 0;
      }
      if (a < 0) break;
    }
  }
  return out;
}

namespace {

// A point of the region addressed through one of its patches; the pattern
// search moves in patch-box coordinates, which keeps every candidate inside
// the region regardless of how the patch maps into the chart.
struct PatchPoint {
  int patch = -1;      // index into region.patches, or ~boundary index
  Eigen::VectorXd t;   // patch-box coordinates
};

Eigen::VectorXd patch_param(const Region& region, const PatchPoint& pp) {
  if (pp.patch >= 0) return region.patches[pp.patch].map(pp.t);
  return region.boundary[~pp.patch].map(pp.t);
}

const Box& patch_box(const Region& region, const PatchPoint& pp) {
  if (pp.patch >= 0) return region.patches[pp.patch].box;
  return region.boundary[~pp.patch].box;
}

}  // namespace

DiameterResult extrinsic_diameter(const Region& region, std::size_t budget) {
  const Surface& surf = region.surf();
  const int per_axis = surf.m() == 2 ? 28 : 14;
  const int boundary_per_axis = surf.m() == 2 ? 64 : 20;

  // Sample both interior and boundary patches, remembering provenance.
  std::vector<PatchPoint> points;
  std::vector<Eigen::VectorXd> positions;
  auto sweep_box = [&](const Box& box, int n, int patch_id) {
    const int d = box.dim();
    if (d == 0) return;
    std::vector<int> idx(d, 0);
    for (;;) {
      if (positions.size() >= budget) return;
      PatchPoint pp;
      pp.patch = patch_id;
      pp.t = Eigen::VectorXd(d);
      for (int a = 0; a < d; ++a)
        pp.t[a] = box.lo[a] + box.extent(a) * (idx[a] + 0.5) / n;
      const Eigen::VectorXd u = patch_param(region, pp);
      bool ok = true;
      Eigen::VectorXd x;
      try {
        if (region.indicator) {
          const SurfacePoint pt = surf.at(u);
          ok = region.indicator(pt);
          x = pt.position;
        } else {
          x = surf.position(u);
        }
      } catch (const GeometryError&) {
        ok = false;
      }
      if (ok) {
        points.push_back(pp);
        positions.push_back(x);
      }
      int a = d - 1;
      for (; a >= 0; --a) {
        if (++idx[a] < n) break;
        idx[a] = 0;
      }
      if (a < 0) break;
    }
  };
  for (std::size_t p = 0; p < region.patches.size(); ++p)
    sweep_box(region.patches[p].box, per_axis, static_cast<int>(p));
  for (std::size_t b = 0; b < region.boundary.size(); ++b)
    sweep_box(region.boundary[b].box, boundary_per_axis,
              ~static_cast<int>(b));
  if (positions.size() < 2)
    throw ArgumentError("extrinsic_diameter: need at least two samples");

  std::size_t best_i = 0, best_j = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const double d = surf.ambient_distance(positions[i], positions[j]);
      if (d > best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }
  }

  // Monotone polish: alternating pattern search in patch coordinates.
  PatchPoint pa = points[best_i], pb = points[best_j];
  Eigen::VectorXd xa = positions[best_i], xb = positions[best_j];
  double step_a = 0.0, step_b = 0.0;
  {
    const Box& ba = patch_box(region, pa);
    const Box& bb = patch_box(region, pb);
    for (int a = 0; a < ba.dim(); ++a) step_a = std::max(step_a, ba.extent(a));
    for (int a = 0; a < bb.dim(); ++a) step_b = std::max(step_b, bb.extent(a));
  }
  double step = std::max(step_a, step_b) / 16.0;
  double cur = best;
  for (int iter = 0; iter < 200 && step > 1e-11; ++iter) {
    bool improved = false;
    for (int which = 0; which < 2; ++which) {
      PatchPoint& pp = which == 0 ? pa : pb;
      Eigen::VectorXd& x = which == 0 ? xa : xb;
      const Box& box = patch_box(region, pp);
      for (int a = 0; a < box.dim(); ++a) {
        for (double sgn : {1.0, -1.0}) {
          PatchPoint q = pp;
          q.t[a] = std::clamp(q.t[a] + sgn * step, box.lo[a], box.hi[a]);
          Eigen::VectorXd y;
          try {
            const Eigen::VectorXd u = patch_param(region, q);
            if (region.indicator) {
              const SurfacePoint pt = surf.at(u);
              if (!region.indicator(pt)) continue;
              y = pt.position;
            } else {
              y = surf.position(u);
            }
          } catch (const GeometryError&) {
            continue;
          }
          const double d = which == 0 ? surf.ambient_distance(y, xb)
                                      : surf.ambient_distance(xa, y);
          if (d > cur) {
            cur = d;
            pp = q;
            x = y;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  DiameterResult out;
  out.value = cur;
  out.param_a = patch_param(region, pa);
  out.param_b = patch_param(region, pb);
  return out;
}

Eigen::VectorXd enclosing_center(const Region& region, const SampleSet& samples,
                                 int iterations) {
  if (samples.positions.empty())
    throw ArgumentError("enclosing_center: empty sample set");
  const geom::ModelGeometry geo(region.surf().ambient_c());

  Eigen::VectorXd mean =
      Eigen::VectorXd::Zero(samples.positions.front().size());
  for (const auto& p : samples.positions) mean += p;
  mean /= static_cast<double>(samples.positions.size());
  Eigen::VectorXd x = geo.project(mean);

  for (int k = 1; k <= iterations; ++k) {
    double worst = -1.0;
    std::size_t far = 0;
    for (std::size_t i = 0; i < samples.positions.size(); ++i) {
      const double d = geo.distance(x, samples.positions[i]);
      if (d > worst) {
        worst = d;
        far = i;
      }
    }
    x = geo.geodesic(x, samples.positions[far], 1.0 / (k + 1.0));
  }
  return x;
}

}  // namespace hyperlab::measure
