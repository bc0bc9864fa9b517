#include "helisurf/surface.hpp"

#include <stdexcept>

namespace helisurf {

namespace {

Vec3<SymExpr> diff(const Vec3<SymExpr>& v) { return {v.x.diff(), v.y.diff(), v.z.diff()}; }

Vec3<SymExpr> apply_jet_matrix(const Matrix3<ParamPoly>& m, const Vec3<SymExpr>& v) {
  auto row = [&](int r) {
    return v.x.scaled(m.at(r, 0)) + v.y.scaled(m.at(r, 1)) + v.z.scaled(m.at(r, 2));
  };
  return {row(0), row(1), row(2)};
}

SymExpr as_const(const ParamPoly& c, bool hyp) {
  return hyp ? SymExpr::cosh_term(0, c) : SymExpr::constant(c);
}

Vec3<SymExpr> add_const(const Vec3<SymExpr>& v, const Vec3<ParamPoly>& c, bool hyp) {
  return {v.x + as_const(c.x, hyp), v.y + as_const(c.y, hyp), v.z + as_const(c.z, hyp)};
}

}  // namespace

FrameT0 frame_t0(const HelicoidalSpec& spec) {
  validate_spec(spec);
  Vec3<SymExpr> gamma = build_curve(spec.curve, spec.axis);
  bool hyp = gamma.x.is_hyp() || gamma.y.is_hyp() || gamma.z.is_hyp();
  MotionJet<ParamPoly> jet = motion_jet<ParamPoly>(spec.axis, pitch_poly(spec));

  FrameT0 f;
  f.Xs = diff(gamma);
  f.Xss = diff(f.Xs);
  f.Xt = add_const(apply_jet_matrix(jet.a1, gamma), jet.v1, hyp);
  f.Xst = apply_jet_matrix(jet.a1, f.Xs);
  f.Xtt = add_const(apply_jet_matrix(jet.a2, gamma), jet.v2, hyp);
  return f;
}

CurvatureBundle curvature_bundle(const HelicoidalSpec& spec) {
  FrameT0 f = frame_t0(spec);
  CurvatureBundle b;
  b.E = minkowski_dot(f.Xs, f.Xs);
  b.F = minkowski_dot(f.Xs, f.Xt);
  b.G = minkowski_dot(f.Xt, f.Xt);
  b.W = b.E * b.G - b.F * b.F;
  b.Duu = det3(f.Xs, f.Xt, f.Xss);
  b.Duv = det3(f.Xs, f.Xt, f.Xst);
  b.Dvv = det3(f.Xs, f.Xt, f.Xtt);
  SymExpr two_F = b.F.scaled(ParamPoly(Rational(2)));
  b.H1 = b.G * b.Duu - two_F * b.Duv + b.E * b.Dvv;
  b.K1 = b.Duu * b.Dvv - b.Duv * b.Duv;
  return b;
}

SymExpr condition_cmc_zero(const CurvatureBundle& b) { return b.H1; }

SymExpr condition_cmc_nonzero(const CurvatureBundle& b, int sigma) {
  if (sigma != 1 && sigma != -1)
    throw std::invalid_argument("condition_cmc_nonzero: sigma must be +1 or -1");
  ParamPoly four_H2 = ParamPoly(Rational(4 * sigma)) * pvar(Param::H, 2);
  return b.W.pow(3).scaled(four_H2) - b.H1 * b.H1;
}

SymExpr condition_cgc(const CurvatureBundle& b) {
  return b.W.pow(2).scaled(pvar(Param::K)) + b.K1;
}

SymExpr condition_hk_equal(const CurvatureBundle& b) {
  return b.H1 * b.H1 - (b.W * b.K1).scaled(ParamPoly(Rational(4)));
}

}  // namespace helisurf
