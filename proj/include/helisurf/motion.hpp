#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "helisurf/minkowski.hpp"

namespace helisurf {

/// Canonical axes: timelike <(0,0,1)>, spacelike <(1,0,0)>, lightlike <(1,0,1)>.
enum class AxisKind { Timelike, Spacelike, Lightlike };

const char* to_string(AxisKind a);
std::optional<AxisKind> axis_from_string(std::string_view name);
Vec3q axis_direction(AxisKind axis);

/// One element phi_t of a helicoidal motion group: x -> linear*x + translation.
struct RigidMotion {
  Matrix3<double> linear;
  Vec3d translation;

  Vec3d apply(const Vec3d& p) const { return linear.apply(p) + translation; }
};

/// phi_t for the group with the given axis and pitch. Helicoidal groups require
/// h != 0; pass h = 0 only through rotation()/rotation_orbit().
RigidMotion motion(AxisKind axis, double h, double t);

/// Pure rotation about the canonical axis (the h = 0 group).
RigidMotion rotation(AxisKind axis, double t);

/// Orbit of p under the rotation group: a Euclidean circle (timelike axis),
/// hyperbola branch or null line (spacelike axis), or parabola (lightlike axis).
Vec3d rotation_orbit(AxisKind axis, const Vec3d& p, double t);

/// Exact lightlike-axis motion; the matrix and translation are polynomial in t.
struct RigidMotionQ {
  Matrix3<Rational> linear;
  Vec3q translation;

  Vec3q apply(const Vec3q& p) const { return linear.apply(p) + translation; }
};
RigidMotionQ motion_lightlike_exact(const Rational& h, const Rational& t);
Vec3q rotation_orbit_lightlike_exact(const Vec3q& p, const Rational& t);

/// Exact linear part through a rational point of the rotation group:
/// timelike axis uses (cos,sin) = ((1-tau^2)/(1+tau^2), 2tau/(1+tau^2)),
/// spacelike uses (cosh,sinh) = ((1+tau^2)/(1-tau^2), 2tau/(1-tau^2)), |tau| != 1,
/// lightlike substitutes t = tau directly. All three preserve the inner product
/// exactly over the rationals.
Matrix3<Rational> rotation_linear_exact(AxisKind axis, const Rational& tau);

/// First and second t-derivatives of the motion group at t = 0.
/// A1 is skew-adjoint for the Minkowski metric.
template <class S>
struct MotionJet {
  Matrix3<S> a1, a2;
  Vec3<S> v1, v2;
};

template <class S>
MotionJet<S> motion_jet(AxisKind axis, const S& h) {
  MotionJet<S> jet;
  const S zero{};
  const S one{1};
  switch (axis) {
    case AxisKind::Timelike:
      jet.a1.m = {zero, zero - one, zero, one, zero, zero, zero, zero, zero};
      jet.a2.m = {zero - one, zero, zero, zero, zero - one, zero, zero, zero, zero};
      jet.v1 = {zero, zero, h};
      jet.v2 = {zero, zero, zero};
      break;
    case AxisKind::Spacelike:
      jet.a1.m = {zero, zero, zero, zero, zero, one, zero, one, zero};
      jet.a2.m = {zero, zero, zero, zero, one, zero, zero, zero, one};
      jet.v1 = {h, zero, zero};
      jet.v2 = {zero, zero, zero};
      break;
    case AxisKind::Lightlike:
      jet.a1.m = {zero, one, zero, zero - one, zero, one, zero, one, zero};
      jet.a2.m = {zero - one, zero, one, zero, zero, zero, zero - one, zero, one};
      jet.v1 = {zero - h, zero, h};
      jet.v2 = {zero, h + h, zero};
      break;
  }
  return jet;
}

/// Metric projection of p onto the axis line; undefined for the lightlike axis
/// (the induced metric on the line degenerates), so that case is rejected.
Vec3q axis_projection(AxisKind axis, const Vec3q& p);

}  // namespace helisurf
