#include "helisurf/motion.hpp"

#include <cmath>

namespace helisurf {

const char* to_string(AxisKind a) {
  switch (a) {
    case AxisKind::Timelike: return "timelike";
    case AxisKind::Spacelike: return "spacelike";
    default: return "lightlike";
  }
}

std::optional<AxisKind> axis_from_string(std::string_view name) {
  if (name == "timelike") return AxisKind::Timelike;
  if (name == "spacelike") return AxisKind::Spacelike;
  if (name == "lightlike") return AxisKind::Lightlike;
  return std::nullopt;
}

Vec3q axis_direction(AxisKind axis) {
  switch (axis) {
    case AxisKind::Timelike: return {0, 0, 1};
    case AxisKind::Spacelike: return {1, 0, 0};
    default: return {1, 0, 1};
  }
}

namespace {

RigidMotion motion_unchecked(AxisKind axis, double h, double t) {
  RigidMotion out;
  switch (axis) {
    case AxisKind::Timelike: {
      double c = std::cos(t), s = std::sin(t);
      out.linear.m = {c, -s, 0, s, c, 0, 0, 0, 1};
      out.translation = {0, 0, h * t};
      break;
    }
    case AxisKind::Spacelike: {
      double c = std::cosh(t), s = std::sinh(t);
      out.linear.m = {1, 0, 0, 0, c, s, 0, s, c};
      out.translation = {h * t, 0, 0};
      break;
    }
    case AxisKind::Lightlike: {
      double q = t * t / 2;
      out.linear.m = {1 - q, t, q, -t, 1, t, -q, t, 1 + q};
      out.translation = {h * (t * t * t / 3 - t), h * t * t, h * (t * t * t / 3 + t)};
      break;
    }
  }
  return out;
}

}  // namespace

RigidMotion motion(AxisKind axis, double h, double t) {
  if (h == 0)
    throw std::invalid_argument("motion: pitch h = 0 is rotational, not helicoidal");
  return motion_unchecked(axis, h, t);
}

RigidMotion rotation(AxisKind axis, double t) { return motion_unchecked(axis, 0.0, t); }

Vec3d rotation_orbit(AxisKind axis, const Vec3d& p, double t) {
  return rotation(axis, t).apply(p);
}

RigidMotionQ motion_lightlike_exact(const Rational& h, const Rational& t) {
  RigidMotionQ out;
  Rational q = t * t / Rational(2);
  Rational cube3 = t * t * t / Rational(3);
  out.linear.m = {Rational(1) - q, t, q, -t, Rational(1), t, -q, t, Rational(1) + q};
  out.translation = {h * (cube3 - t), h * t * t, h * (cube3 + t)};
  return out;
}

Vec3q rotation_orbit_lightlike_exact(const Vec3q& p, const Rational& t) {
  return motion_lightlike_exact(Rational(0), t).apply(p);
}

Matrix3<Rational> rotation_linear_exact(AxisKind axis, const Rational& tau) {
  Matrix3<Rational> out;
  Rational one(1), tau2 = tau * tau;
  switch (axis) {
    case AxisKind::Timelike: {
      Rational d = one + tau2;
      Rational c = (one - tau2) / d, s = (tau + tau) / d;
      out.m = {c, -s, Rational(0), s, c, Rational(0), Rational(0), Rational(0), one};
      break;
    }
    case AxisKind::Spacelike: {
      if (tau2 == one)
        throw std::invalid_argument("rotation_linear_exact: |tau| = 1 is not on the hyperbola");
      Rational d = one - tau2;
      Rational c = (one + tau2) / d, s = (tau + tau) / d;
      out.m = {one, Rational(0), Rational(0), Rational(0), c, s, Rational(0), s, c};
      break;
    }
    case AxisKind::Lightlike: {
      Rational q = tau2 / Rational(2);
      out.m = {one - q, tau, q, -tau, one, tau, -q, tau, one + q};
      break;
    }
  }
  return out;
}

Vec3q axis_projection(AxisKind axis, const Vec3q& p) {
  switch (axis) {
    case AxisKind::Timelike: return {0, 0, p.z};
    case AxisKind::Spacelike: return {p.x, 0, 0};
    default:
      throw std::invalid_argument(
          "axis_projection: metric projection onto a lightlike line is undefined");
  }
}

}  // namespace helisurf
