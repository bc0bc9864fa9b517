#include "helisurf/curve.hpp"

#include <stdexcept>

namespace helisurf {

namespace {

ParamPoly coeff_or_param(const std::optional<Rational>& v, Param p) {
  return v ? ParamPoly(*v) : pvar(p);
}

/// f(s) with symbolic/concrete coefficients, PolyMode.
SymExpr graph_poly(const PolyGraphSpec& g) {
  SymExpr f;
  for (int n = 0; n <= g.degree; ++n)
    f = f + SymExpr::s_power(n, coeff_or_param(g.coeff(n), poly_coeff_param(n)));
  return f;
}

SymExpr hyp_const(const ParamPoly& c) { return SymExpr::cosh_term(0, c); }

}  // namespace

void validate_spec(const HelicoidalSpec& spec) {
  if (spec.pitch && spec.pitch->is_zero())
    throw std::invalid_argument("helicoidal spec: pitch h must be nonzero");
  if (const auto* g = std::get_if<PolyGraphSpec>(&spec.curve)) {
    if (g->degree < 0 || g->degree > kMaxPolyDegree)
      throw std::invalid_argument("poly graph: degree out of range");
    if (!g->coeffs.empty() && static_cast<int>(g->coeffs.size()) != g->degree + 1)
      throw std::invalid_argument("poly graph: coefficient count does not match degree");
    if (g->degree > 0) {
      auto top = g->coeff(g->degree);
      if (top && top->is_zero())
        throw std::invalid_argument("poly graph: leading coefficient must be nonzero");
    }
    return;
  }
  if (const auto* c = std::get_if<CircleSpec>(&spec.curve)) {
    if (spec.axis == AxisKind::Lightlike)
      throw std::invalid_argument("circle curve: hyperbola branches need a timelike or spacelike axis");
    if (c->radius && c->radius->is_zero())
      throw std::invalid_argument("circle curve: radius r must be nonzero");
    return;
  }
  if (const auto* lc = std::get_if<LightCircleSpec>(&spec.curve)) {
    if (spec.axis != AxisKind::Lightlike)
      throw std::invalid_argument("light circle curve: requires the lightlike axis");
    if (lc->scale && lc->scale->is_zero())
      throw std::invalid_argument("light circle curve: scale c must be nonzero");
    return;
  }
  if (const auto* v = std::get_if<VerticalLineSpec>(&spec.curve)) {
    if (spec.axis == AxisKind::Lightlike)
      throw std::invalid_argument("vertical line curve: requires a timelike or spacelike axis");
    if (spec.axis == AxisKind::Timelike && v->offset && v->offset->is_zero())
      throw std::invalid_argument("vertical line curve: cylinder radius r must be nonzero");
    return;
  }
  if (std::holds_alternative<HorizontalLineSpec>(spec.curve)) {
    if (spec.axis != AxisKind::Lightlike)
      throw std::invalid_argument("horizontal line curve: requires the lightlike axis");
    return;
  }
}

Vec3<SymExpr> build_curve(const CurveSpec& curve, AxisKind axis) {
  if (const auto* g = std::get_if<PolyGraphSpec>(&curve)) {
    SymExpr f = graph_poly(*g);
    SymExpr s = SymExpr::s();
    switch (axis) {
      case AxisKind::Timelike: return {s, SymExpr::zero(), f};
      case AxisKind::Spacelike: return {SymExpr::zero(), s, f};
      default: return {f, s, f};
    }
  }
  if (const auto* c = std::get_if<CircleSpec>(&curve)) {
    ParamPoly r = coeff_or_param(c->radius, Param::r);
    ParamPoly la = coeff_or_param(c->lambda_, Param::lambda);
    ParamPoly mu = coeff_or_param(c->mu_, Param::mu);
    SymExpr first = hyp_const(la) + (c->plus_branch ? SymExpr::cosh_term(1, r)
                                                    : SymExpr::sinh_term(1, r));
    SymExpr second = hyp_const(mu) + (c->plus_branch ? SymExpr::sinh_term(1, r)
                                                     : SymExpr::cosh_term(1, r));
    if (axis == AxisKind::Timelike) return {first, SymExpr::zero(), second};
    return {SymExpr::zero(), first, second};
  }
  if (const auto* lc = std::get_if<LightCircleSpec>(&curve)) {
    ParamPoly cc = coeff_or_param(lc->scale, Param::c);
    ParamPoly th = coeff_or_param(lc->theta_, Param::theta);
    ParamPoly la = coeff_or_param(lc->lambda_, Param::lambda);
    ParamPoly mu = coeff_or_param(lc->mu_, Param::mu);
    // Rotation by theta of (c s^2/2, c s, c s^2/2) plus (lambda, mu, lambda):
    // the null components collapse to lambda + c*theta*s + c s^2/2.
    SymExpr null_part = SymExpr::constant(la) + SymExpr::s_power(1, cc * th) +
                        SymExpr::s_power(2, Rational(1, 2) * cc);
    SymExpr mid = SymExpr::constant(mu) + SymExpr::s_power(1, cc);
    return {null_part, mid, null_part};
  }
  if (const auto* v = std::get_if<VerticalLineSpec>(&curve)) {
    // Timelike axis: cylinder radius r (nonzero); spacelike axis: offset b
    // (b = 0 is the helicoid of the third kind).
    ParamPoly off =
        coeff_or_param(v->offset, axis == AxisKind::Timelike ? Param::r : Param::b);
    SymExpr s = SymExpr::s();
    if (axis == AxisKind::Timelike) return {SymExpr::constant(off), SymExpr::zero(), s};
    return {SymExpr::zero(), SymExpr::constant(off), s};
  }
  const auto& hline = std::get<HorizontalLineSpec>(curve);
  ParamPoly off = coeff_or_param(hline.offset, Param::b);
  SymExpr s = SymExpr::s();
  return {s, SymExpr::constant(off), s};
}

ParamPoly pitch_poly(const HelicoidalSpec& spec) {
  return spec.pitch ? ParamPoly(*spec.pitch) : pvar(Param::h);
}

ParamBindingsD concrete_bindings(const HelicoidalSpec& spec) {
  ParamBindingsD out;
  auto put = [&out](Param p, const std::optional<Rational>& v) {
    if (v) out[p] = v->to_double();
  };
  put(Param::h, spec.pitch);
  if (const auto* g = std::get_if<PolyGraphSpec>(&spec.curve)) {
    for (int n = 0; n <= g->degree; ++n) put(poly_coeff_param(n), g->coeff(n));
  } else if (const auto* c = std::get_if<CircleSpec>(&spec.curve)) {
    put(Param::r, c->radius);
    put(Param::lambda, c->lambda_);
    put(Param::mu, c->mu_);
  } else if (const auto* lc = std::get_if<LightCircleSpec>(&spec.curve)) {
    put(Param::c, lc->scale);
    put(Param::theta, lc->theta_);
    put(Param::lambda, lc->lambda_);
    put(Param::mu, lc->mu_);
  } else if (const auto* v = std::get_if<VerticalLineSpec>(&spec.curve)) {
    put(spec.axis == AxisKind::Timelike ? Param::r : Param::b, v->offset);
  } else if (const auto* hl = std::get_if<HorizontalLineSpec>(&spec.curve)) {
    put(Param::b, hl->offset);
  }
  return out;
}

std::string curve_descriptor(const CurveSpec& curve) {
  if (const auto* g = std::get_if<PolyGraphSpec>(&curve)) {
    std::string out = "poly:";
    for (int n = 0; n <= g->degree; ++n) {
      if (n > 0) out += ",";
      auto c = g->coeff(n);
      out += c ? c->to_string() : std::string(param_name(poly_coeff_param(n)));
    }
    return out;
  }
  if (const auto* c = std::get_if<CircleSpec>(&curve))
    return c->plus_branch ? "circle:+" : "circle:-";
  if (std::holds_alternative<LightCircleSpec>(curve)) return "circle:+";
  if (const auto* v = std::get_if<VerticalLineSpec>(&curve))
    return "vline:" + (v->offset ? v->offset->to_string() : std::string("r"));
  const auto& hl = std::get<HorizontalLineSpec>(curve);
  return "hline:" + (hl.offset ? hl.offset->to_string() : std::string("b"));
}

}  // namespace helisurf
