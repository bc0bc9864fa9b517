#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "helisurf/motion.hpp"
#include "helisurf/symexpr.hpp"

namespace helisurf {

/// Graph of a polynomial f(s) = sum a_n s^n. A coefficient left unset stays
/// symbolic (the parameter a_n); a set coefficient is that exact rational.
/// Side condition: a_m != 0 (checked numerically when concrete, assumed when
/// symbolic).
struct PolyGraphSpec {
  int degree = 0;
  std::vector<std::optional<Rational>> coeffs;  // size degree+1; empty -> all symbolic

  std::optional<Rational> coeff(int n) const {
    if (n < static_cast<int>(coeffs.size())) return coeffs[static_cast<std::size_t>(n)];
    return std::nullopt;
  }
};

/// Hyperbola branch in the generating plane of a timelike or spacelike axis:
/// plus branch (r cosh, r sinh) offset by (lambda, mu), minus branch with
/// cosh/sinh swapped. The phase is absorbed into u = s + theta.
struct CircleSpec {
  bool plus_branch = true;
  std::optional<Rational> radius;   // r != 0
  std::optional<Rational> lambda_;  // center offset, first plane coordinate
  std::optional<Rational> mu_;      // center offset, second plane coordinate
};

/// Parabola orbit in the degenerate plane of the lightlike axis, rotated by
/// theta and translated by (lambda, mu, lambda).
struct LightCircleSpec {
  std::optional<Rational> scale;  // c != 0
  std::optional<Rational> theta_;
  std::optional<Rational> lambda_;
  std::optional<Rational> mu_;
};

/// Degenerate generating curve running along the axis-parallel direction:
/// timelike axis (r, 0, s), spacelike axis (0, r, s).
struct VerticalLineSpec {
  std::optional<Rational> offset;  // parameter r
};

/// Degenerate generating curve along the null direction of the lightlike
/// axis: (s, b, s).
struct HorizontalLineSpec {
  std::optional<Rational> offset;  // parameter b
};

using CurveSpec = std::variant<PolyGraphSpec, CircleSpec, LightCircleSpec,
                               VerticalLineSpec, HorizontalLineSpec>;

struct HelicoidalSpec {
  AxisKind axis = AxisKind::Timelike;
  std::optional<Rational> pitch;  // unset -> symbolic parameter h; must be nonzero
  CurveSpec curve;
};

/// Validates axis/curve compatibility and nonzero side conditions.
/// Throws std::invalid_argument with a reason on failure.
void validate_spec(const HelicoidalSpec& spec);

/// gamma(s) as a symbolic triple in the plane determined by the axis:
/// timelike PolyGraph (s, 0, f), spacelike (0, s, f), lightlike (f, s, f);
/// circles per their hyperbola/parabola forms; lines per their variants.
Vec3<SymExpr> build_curve(const CurveSpec& curve, AxisKind axis);

/// Pitch as a symbolic coefficient: the parameter h or the concrete rational.
ParamPoly pitch_poly(const HelicoidalSpec& spec);

/// All concrete values carried by the spec, as numeric parameter bindings
/// (used to evaluate symbolic results at sample points).
ParamBindingsD concrete_bindings(const HelicoidalSpec& spec);

/// Canonical CLI descriptor of the curve, e.g. "poly:0,1", "circle:+",
/// "vline:2", "hline:1/3".
std::string curve_descriptor(const CurveSpec& curve);

}  // namespace helisurf
