#include "hyperlab/ambient.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlab::ambient {

AmbientSpec AmbientSpec::space_form(double c, int dimension) {
  if (dimension < 3)
    throw ArgumentError("space_form: ambient dimension must be >= 3");
  AmbientSpec s;
  s.kind = Kind::SpaceForm;
  s.dimension = dimension;
  s.c = c;
  s.einstein_constant = (dimension - 1) * c;
  // For c > 0 the model is the open upper hemisphere; radial distances stay
  // below pi/(2 sqrt c).
  s.injectivity_radius = c > 0.0 ? kPi / (2.0 * std::sqrt(c)) : kInf;
  return s;
}

AmbientSpec AmbientSpec::product(double c1, int p1, double c2, int p2) {
  if (p1 < 1 || p2 < 1)
    throw ArgumentError("product: factor dimensions must be >= 1");
  AmbientSpec s;
  s.kind = Kind::Product;
  s.dimension = p1 + p2;
  s.c1 = c1;
  s.c2 = c2;
  s.p1 = p1;
  s.p2 = p2;
  if ((p1 - 1) * c1 == (p2 - 1) * c2) s.einstein_constant = (p1 - 1) * c1;
  const double cmax = std::max(c1, c2);
  // A positively curved factor is compact and bounds the injectivity radius.
  double inj = kInf;
  if (c1 > 0.0) inj = std::min(inj, kPi / std::sqrt(c1));
  if (c2 > 0.0) inj = std::min(inj, kPi / std::sqrt(c2));
  (void)cmax;
  s.injectivity_radius = inj;
  return s;
}

AmbientSpec AmbientSpec::constant_f(double value, int dimension,
                                    double injectivity_radius,
                                    std::optional<double> einstein_constant) {
  AmbientSpec s;
  s.kind = Kind::ConstantF;
  s.dimension = dimension;
  s.f_value = value;
  s.injectivity_radius = injectivity_radius;
  s.einstein_constant = einstein_constant;
  return s;
}

AmbientSpec AmbientSpec::schwarzschild(double beta) {
  if (beta <= 0.0) throw ArgumentError("schwarzschild: beta must be positive");
  AmbientSpec s;
  s.kind = Kind::Schwarzschild;
  s.dimension = 4;  // R^2 x S^2
  s.beta = beta;
  s.einstein_constant = 0.0;  // Ricci-flat
  s.injectivity_radius = kInf;
  return s;
}

double AmbientSpec::require_einstein() const {
  if (!einstein_constant) {
    throw UnsupportedAmbientError(
        "ambient has no Einstein constant (non-Einstein product?)");
  }
  return *einstein_constant;
}

Comparison comparison(double c, double t) {
  if (t < 0.0) throw ArgumentError("comparison: distance t must be >= 0");
  Comparison out{};
  if (c == 0.0) {
    out.value = t;
    out.derivative = 1.0;
    out.h = t;
  } else if (c < 0.0) {
    const double k = std::sqrt(-c);
    out.value = std::sinh(k * t) / k;
    out.derivative = std::cosh(k * t);
    out.h = out.value;
  } else {
    const double k = std::sqrt(c);
    out.value = std::sin(k * t) / k;
    out.derivative = std::cos(k * t);
    out.h = 1.0;
    out.monotone_warning = t >= kPi / (2.0 * k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ComparisonFn

ComparisonFn ComparisonFn::closed_form(double c, double domain_end) {
  ComparisonFn f;
  f.provenance_ = Provenance::ClosedFormSc;
  f.c_ = c;
  f.domain_end_ = domain_end;
  if (c > 0.0) {
    // S_c decreases past pi/(2 sqrt c); clip the usable domain there.
    f.domain_end_ = std::min(domain_end, kPi / (2.0 * std::sqrt(c)));
    f.truncated_ = true;
  }
  return f;
}

ComparisonFn ComparisonFn::constant_one() {
  ComparisonFn f;
  f.provenance_ = Provenance::ConstantOne;
  f.domain_end_ = kInf;
  return f;
}

ComparisonFn ComparisonFn::sampled(std::vector<double> grid,
                                   std::vector<double> g,
                                   std::vector<double> dg, bool truncated) {
  if (grid.size() < 2 || grid.size() != g.size() || g.size() != dg.size())
    throw ArgumentError("ComparisonFn::sampled: inconsistent sample arrays");
  ComparisonFn f;
  f.provenance_ = Provenance::OdeIntegrated;
  f.domain_end_ = grid.back();
  f.truncated_ = truncated;
  f.grid_ = std::move(grid);
  f.g_ = std::move(g);
  f.dg_ = std::move(dg);
  return f;
}

namespace {

// Cubic Hermite on a uniform grid.
double hermite(const std::vector<double>& x, const std::vector<double>& y,
               const std::vector<double>& dy, double t, bool want_derivative) {
  const double h = x[1] - x[0];
  const auto n = x.size();
  double pos = (t - x[0]) / h;
  std::size_t i = static_cast<std::size_t>(std::clamp(
      pos, 0.0, static_cast<double>(n - 2)));
  i = std::min(i, n - 2);
  const double s = (t - x[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  if (!want_derivative) {
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y[i] + h * h10 * dy[i] + h01 * y[i + 1] + h * h11 * dy[i + 1];
  }
  const double d00 = (6 * s2 - 6 * s) / h;
  const double d10 = 3 * s2 - 4 * s + 1;
  const double d01 = (-6 * s2 + 6 * s) / h;
  const double d11 = 3 * s2 - 2 * s;
  return d00 * y[i] + d10 * dy[i] + d01 * y[i + 1] + d11 * dy[i + 1];
}

}  // namespace

double ComparisonFn::value(double t) const {
  switch (provenance_) {
    case Provenance::ConstantOne:
      return 1.0;
    case Provenance::ClosedFormSc:
      return comparison(c_, t).value;
    case Provenance::OdeIntegrated:
      if (t > domain_end_ * (1.0 + 1e-12))
        throw ArgumentError(
            "ComparisonFn: evaluation past the truncated domain end");
      return hermite(grid_, g_, dg_, t, false);
  }
  return 0.0;
}

double ComparisonFn::derivative(double t) const {
  switch (provenance_) {
    case Provenance::ConstantOne:
      return 0.0;
    case Provenance::ClosedFormSc:
      return comparison(c_, t).derivative;
    case Provenance::OdeIntegrated:
      if (t > domain_end_ * (1.0 + 1e-12))
        throw ArgumentError(
            "ComparisonFn: evaluation past the truncated domain end");
      return hermite(grid_, g_, dg_, t, true);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

std::function<double(double)> einstein_F(const AmbientSpec& spec) {
  switch (spec.kind) {
    case Kind::SpaceForm:
      throw ArgumentError("einstein_F: space forms use the closed form");
    case Kind::Product: {
      if (!spec.is_einstein())
        throw UnsupportedAmbientError(
            "einstein_F: product is not Einstein ((p1-1)c1 != (p2-1)c2)");
      const double cmax = std::max(spec.c1, spec.c2);
      return [cmax](double) { return cmax; };
    }
    case Kind::ConstantF: {
      const double v = spec.f_value;
      return [v](double) { return v; };
    }
    case Kind::Schwarzschild: {
      auto profile = std::make_shared<SchwarzschildProfile>(
          schwarzschild_profile(spec.beta, 64.0));
      return [profile](double t) { return profile->F(t); };
    }
  }
  throw ArgumentError("einstein_F: unknown ambient kind");
}

ComparisonFn solve_G(const std::function<double(double)>& F, double t_max,
                     double step) {
  if (step <= 0.0) throw ArgumentError("solve_G: step must be positive");
  if (t_max <= 0.0) throw ArgumentError("solve_G: t_max must be positive");
  const int n = static_cast<int>(std::ceil(t_max / step));
  const double h = t_max / n;

  std::vector<double> grid(n + 1), g(n + 1), dg(n + 1);
  double t = 0.0, y = 0.0, v = 1.0;
  grid[0] = 0.0;
  g[0] = y;
  dg[0] = v;

  auto check = [&](double tt) {
    const double f = F(tt);
    if (!std::isfinite(f))
      throw ConvergenceError("solve_G: F non-finite on the grid", tt, f);
    return f;
  };

  bool truncated = false;
  int last = n;
  for (int i = 0; i < n; ++i) {
    // RK4 on (y, v)' = (v, -F y).
    const double f0 = check(t);
    const double fh = check(t + 0.5 * h);
    const double f1 = check(t + h);
    const double k1y = v, k1v = -f0 * y;
    const double k2y = v + 0.5 * h * k1v, k2v = -fh * (y + 0.5 * h * k1y);
    const double k3y = v + 0.5 * h * k2v, k3v = -fh * (y + 0.5 * h * k2y);
    const double k4y = v + h * k3v, k4v = -f1 * (y + h * k3y);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    t = (i + 1) * h;
    if (v <= 0.0) {
      // G must stay nondecreasing: truncate at the last grid point where
      // G' was still positive and drop the overshoot step.
      truncated = true;
      last = i;
      break;
    }
    grid[i + 1] = t;
    g[i + 1] = y;
    dg[i + 1] = v;
  }
  grid.resize(last + 1);
  g.resize(last + 1);
  dg.resize(last + 1);

  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] + 1e-15 < g[i - 1])
      throw ConvergenceError("solve_G: integrated G is not nondecreasing",
                             g[i - 1], g[i]);
  }
  return ComparisonFn::sampled(std::move(grid), std::move(g), std::move(dg),
                               truncated);
}

// ---------------------------------------------------------------------------
// Schwarzschild profile

SchwarzschildProfile schwarzschild_profile(double beta, double r_max,
                                           double step) {
  if (beta <= 0.0)
    throw ArgumentError("schwarzschild_profile: beta must be positive");
  if (r_max <= 0.0 || step <= 0.0)
    throw ArgumentError("schwarzschild_profile: bad range or step");

  const int n = static_cast<int>(std::ceil(r_max / step));
  const double h = r_max / n;

  SchwarzschildProfile p;
  p.beta = beta;
  p.step = h;
  p.r.resize(n + 1);
  p.psi.resize(n + 1);
  p.dpsi.resize(n + 1);
  p.ddpsi.resize(n + 1);
  p.phi.resize(n + 1);

  auto accel = [beta](double psi) {
    if (psi <= 0.0)
      throw ConvergenceError("schwarzschild_profile: psi <= 0", psi, psi);
    return 0.5 * beta / (psi * psi);
  };

  double y = beta, v = 0.0;
  for (int i = 0; i <= n; ++i) {
    p.r[i] = i * h;
    p.psi[i] = y;
    p.dpsi[i] = v;
    p.ddpsi[i] = accel(y);
    p.phi[i] = 2.0 * beta * v;
    if (i == n) break;
    const double k1y = v, k1v = accel(y);
    const double k2y = v + 0.5 * h * k1v, k2v = accel(y + 0.5 * h * k1y);
    const double k3y = v + 0.5 * h * k2v, k3v = accel(y + 0.5 * h * k2y);
    const double k4y = v + h * k3v, k4v = accel(y + h * k3y);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  return p;
}

double SchwarzschildProfile::psi_at(double t) const {
  return hermite(r, psi, dpsi, t, false);
}

double SchwarzschildProfile::dpsi_at(double t) const {
  return hermite(r, psi, dpsi, t, true);
}

double SchwarzschildProfile::phi_at(double t) const {
  return 2.0 * beta * dpsi_at(t);
}

double SchwarzschildProfile::F(double t) const {
  const double p = psi_at(t);
  return beta / (p * p * p);
}

// ---------------------------------------------------------------------------

ComparisonFn comparison_fn(const AmbientSpec& spec, double t_max, double step) {
  if (spec.kind == Kind::SpaceForm) return ComparisonFn::closed_form(spec.c);
  return solve_G(einstein_F(spec), t_max, step);
}

ComparisonFn decay_weight(const AmbientSpec& spec, double t_max, double step) {
  if (std::isfinite(spec.injectivity_radius)) return ComparisonFn::constant_one();
  return comparison_fn(spec, t_max, step);
}

}  // namespace hyperlab::ambient
