#include "helisurf/numeric.hpp"

#include <cmath>

namespace helisurf {

namespace {

struct MotionJetAt {
  Matrix3<double> m, m1, m2;
  Vec3d tr, tr1, tr2;
};

MotionJetAt motion_derivatives(AxisKind axis, double h, double t) {
  MotionJetAt out;
  switch (axis) {
    case AxisKind::Timelike: {
      double c = std::cos(t), s = std::sin(t);
      out.m.m = {c, -s, 0, s, c, 0, 0, 0, 1};
      out.m1.m = {-s, -c, 0, c, -s, 0, 0, 0, 0};
      out.m2.m = {-c, s, 0, -s, -c, 0, 0, 0, 0};
      out.tr = {0, 0, h * t};
      out.tr1 = {0, 0, h};
      out.tr2 = {0, 0, 0};
      break;
    }
    case AxisKind::Spacelike: {
      double c = std::cosh(t), s = std::sinh(t);
      out.m.m = {1, 0, 0, 0, c, s, 0, s, c};
      out.m1.m = {0, 0, 0, 0, s, c, 0, c, s};
      out.m2.m = {0, 0, 0, 0, c, s, 0, s, c};
      out.tr = {h * t, 0, 0};
      out.tr1 = {h, 0, 0};
      out.tr2 = {0, 0, 0};
      break;
    }
    case AxisKind::Lightlike: {
      double q = t * t / 2;
      out.m.m = {1 - q, t, q, -t, 1, t, -q, t, 1 + q};
      out.m1.m = {-t, 1, t, -1, 0, 1, -t, 1, t};
      out.m2.m = {-1, 0, 1, 0, 0, 0, -1, 0, 1};
      out.tr = {h * (t * t * t / 3 - t), h * t * t, h * (t * t * t / 3 + t)};
      out.tr1 = {h * (t * t - 1), 2 * h * t, h * (t * t + 1)};
      out.tr2 = {2 * h * t, 2 * h, 2 * h * t};
      break;
    }
  }
  return out;
}

double require_value(const std::optional<Rational>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("numeric evaluation requires a concrete ") + what);
  return v->to_double();
}

}  // namespace

SurfaceEvaluator::SurfaceEvaluator(const HelicoidalSpec& spec) : spec_(spec) {
  validate_spec(spec);
  h_ = require_value(spec.pitch, "pitch h");
}

SurfaceEvaluator::CurveJet SurfaceEvaluator::curve_jet(double s) const {
  CurveJet out;
  if (const auto* g = std::get_if<PolyGraphSpec>(&spec_.curve)) {
    double f = 0, fp = 0, fpp = 0;
    for (int n = g->degree; n >= 0; --n) {
      double c = require_value(g->coeff(n), "polynomial coefficient");
      f = f * s + c;
      if (n >= 1) fp = fp * s + n * c;
      if (n >= 2) fpp = fpp * s + n * (n - 1) * c;
    }
    switch (spec_.axis) {
      case AxisKind::Timelike:
        out.p = {s, 0, f}; out.d1 = {1, 0, fp}; out.d2 = {0, 0, fpp};
        break;
      case AxisKind::Spacelike:
        out.p = {0, s, f}; out.d1 = {0, 1, fp}; out.d2 = {0, 0, fpp};
        break;
      case AxisKind::Lightlike:
        out.p = {f, s, f}; out.d1 = {fp, 1, fp}; out.d2 = {fpp, 0, fpp};
        break;
    }
    return out;
  }
  if (const auto* c = std::get_if<CircleSpec>(&spec_.curve)) {
    double r = require_value(c->radius, "radius r");
    double la = require_value(c->lambda_, "offset lambda");
    double mu = require_value(c->mu_, "offset mu");
    double ch = std::cosh(s), sh = std::sinh(s);
    double u0 = c->plus_branch ? la + r * ch : la + r * sh;
    double u1 = c->plus_branch ? r * sh : r * ch;
    double u2 = c->plus_branch ? r * ch : r * sh;
    double v0 = c->plus_branch ? mu + r * sh : mu + r * ch;
    double v1 = c->plus_branch ? r * ch : r * sh;
    double v2 = c->plus_branch ? r * sh : r * ch;
    if (spec_.axis == AxisKind::Timelike) {
      out.p = {u0, 0, v0}; out.d1 = {u1, 0, v1}; out.d2 = {u2, 0, v2};
    } else {
      out.p = {0, u0, v0}; out.d1 = {0, u1, v1}; out.d2 = {0, u2, v2};
    }
    return out;
  }
  if (const auto* lc = std::get_if<LightCircleSpec>(&spec_.curve)) {
    double cc = require_value(lc->scale, "scale c");
    double th = require_value(lc->theta_, "phase theta");
    double la = require_value(lc->lambda_, "offset lambda");
    double mu = require_value(lc->mu_, "offset mu");
    double p = la + cc * th * s + cc * s * s / 2;
    double p1 = cc * th + cc * s;
    out.p = {p, mu + cc * s, p};
    out.d1 = {p1, cc, p1};
    out.d2 = {cc, 0, cc};
    return out;
  }
  if (const auto* v = std::get_if<VerticalLineSpec>(&spec_.curve)) {
    double off = require_value(v->offset, "offset r");
    if (spec_.axis == AxisKind::Timelike) {
      out.p = {off, 0, s}; out.d1 = {0, 0, 1};
    } else {
      out.p = {0, off, s}; out.d1 = {0, 0, 1};
    }
    out.d2 = {0, 0, 0};
    return out;
  }
  const auto& hl = std::get<HorizontalLineSpec>(spec_.curve);
  double off = require_value(hl.offset, "offset b");
  out.p = {s, off, s};
  out.d1 = {1, 0, 1};
  out.d2 = {0, 0, 0};
  return out;
}

Vec3d SurfaceEvaluator::position(double s, double t) const {
  MotionJetAt g = motion_derivatives(spec_.axis, h_, t);
  return g.m.apply(curve_jet(s).p) + g.tr;
}

NumericFrame SurfaceEvaluator::assemble(const Vec3d& X, const Vec3d& Xs, const Vec3d& Xt,
                                        const Vec3d& Xss, const Vec3d& Xst,
                                        const Vec3d& Xtt, double s, double t) {
  NumericFrame out;
  out.X = X; out.Xs = Xs; out.Xt = Xt; out.Xss = Xss; out.Xst = Xst; out.Xtt = Xtt;
  out.E = minkowski_dot(Xs, Xs);
  out.F = minkowski_dot(Xs, Xt);
  out.G = minkowski_dot(Xt, Xt);
  out.W = out.E * out.G - out.F * out.F;
  if (std::abs(out.W) <= 1e-12) throw DegenerateMetric(s, t);
  out.epsilon = out.W < 0 ? 1 : -1;
  double root = std::sqrt(std::abs(out.W));
  Vec3d cr = lorentz_cross(Xs, Xt);
  out.N = (1.0 / root) * cr;
  out.e = minkowski_dot(out.N, Xss);
  out.f = minkowski_dot(out.N, Xst);
  out.g = minkowski_dot(out.N, Xtt);
  out.H = out.epsilon * (out.e * out.G - 2 * out.f * out.F + out.g * out.E) / (2 * out.W);
  out.K = out.epsilon * (out.e * out.g - out.f * out.f) / out.W;
  return out;
}

NumericFrame SurfaceEvaluator::frame(double s, double t) const {
  MotionJetAt g = motion_derivatives(spec_.axis, h_, t);
  CurveJet c = curve_jet(s);
  Vec3d X = g.m.apply(c.p) + g.tr;
  Vec3d Xs = g.m.apply(c.d1);
  Vec3d Xss = g.m.apply(c.d2);
  Vec3d Xt = g.m1.apply(c.p) + g.tr1;
  Vec3d Xst = g.m1.apply(c.d1);
  Vec3d Xtt = g.m2.apply(c.p) + g.tr2;
  return assemble(X, Xs, Xt, Xss, Xst, Xtt, s, t);
}

NumericFrame SurfaceEvaluator::fd_frame(double s, double t, double step) const {
  if (step < 1e-6 || step > 1e-3)
    throw std::invalid_argument("fd_frame: step must lie in [1e-6, 1e-3]");
  const double d = step;
  auto P = [&](double ss, double tt) { return position(ss, tt); };
  Vec3d X = P(s, t);
  Vec3d Xs = (1.0 / (2 * d)) * (P(s + d, t) - P(s - d, t));
  Vec3d Xt = (1.0 / (2 * d)) * (P(s, t + d) - P(s, t - d));
  Vec3d Xss = (1.0 / (d * d)) * (P(s + d, t) - 2.0 * X + P(s - d, t));
  Vec3d Xtt = (1.0 / (d * d)) * (P(s, t + d) - 2.0 * X + P(s, t - d));
  Vec3d Xst = (1.0 / (4 * d * d)) *
              (P(s + d, t + d) - P(s + d, t - d) - P(s - d, t + d) + P(s - d, t - d));
  return assemble(X, Xs, Xt, Xss, Xst, Xtt, s, t);
}

std::pair<double, double> SurfaceEvaluator::curvatures(double s, double t) const {
  NumericFrame f = frame(s, t);
  return {f.H, f.K};
}

WeingartenMatrix SurfaceEvaluator::weingarten(double s, double t) const {
  NumericFrame fr = frame(s, t);
  WeingartenMatrix out;
  // A = I^{-1} II in the (X_s, X_t) basis.
  double inv = 1.0 / fr.W;
  out.a[0][0] = inv * (fr.G * fr.e - fr.F * fr.f);
  out.a[0][1] = inv * (fr.G * fr.f - fr.F * fr.g);
  out.a[1][0] = inv * (fr.E * fr.f - fr.F * fr.e);
  out.a[1][1] = inv * (fr.E * fr.g - fr.F * fr.f);
  out.trace = out.a[0][0] + out.a[1][1];
  out.det = out.a[0][0] * out.a[1][1] - out.a[0][1] * out.a[1][0];
  double half = out.trace / 2;
  out.discriminant = half * half - out.det;
  double d00 = out.a[0][0] - half, d11 = out.a[1][1] - half;
  out.defect_norm = std::sqrt(d00 * d00 + d11 * d11 + out.a[0][1] * out.a[0][1] +
                              out.a[1][0] * out.a[1][0]);
  out.non_diagonalizable = out.discriminant < 1e-8 && out.defect_norm > 1e-6;
  return out;
}

std::vector<Vec3d> sample_grid(const HelicoidalSpec& spec, double s_min, double s_max,
                               double t_min, double t_max, int n_s, int n_t) {
  if (n_s < 2 || n_t < 2) throw std::invalid_argument("sample_grid: need at least 2x2");
  if (!(s_min < s_max) || !(t_min < t_max))
    throw std::invalid_argument("sample_grid: empty parameter range");
  SurfaceEvaluator eval(spec);
  std::vector<Vec3d> out;
  out.reserve(static_cast<std::size_t>(n_s) * static_cast<std::size_t>(n_t));
  for (int i = 0; i < n_s; ++i) {
    double s = s_min + (s_max - s_min) * i / (n_s - 1);
    for (int j = 0; j < n_t; ++j) {
      double t = t_min + (t_max - t_min) * j / (n_t - 1);
      out.push_back(eval.position(s, t));
    }
  }
  return out;
}

}  // namespace helisurf
