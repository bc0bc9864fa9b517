#pragma once

#include "helisurf/curve.hpp"

namespace helisurf {

/// Surface partial derivatives at t = 0 for X(s,t) = M(t) gamma(s) + T(t):
/// X_s = gamma', X_t = A1 gamma + v1, X_ss = gamma'', X_st = A1 gamma',
/// X_tt = A2 gamma + v2, with (A1, v1, A2, v2) the motion jet.
struct FrameT0 {
  Vec3<SymExpr> Xs, Xt, Xss, Xst, Xtt;
};

FrameT0 frame_t0(const HelicoidalSpec& spec);

/// Fundamental quantities at t = 0. Everything polynomial: W = EG - F^2,
/// D_uu = det(X_s, X_t, X_ss) and friends, H1 = G D_uu - 2F D_uv + E D_vv,
/// K1 = D_uu D_vv - D_uv^2. The square roots of the curvature formulas never
/// appear here; H = -H1 / (2 |W|^(3/2)) and K = -K1 / W^2 are formed only in
/// the numeric module.
struct CurvatureBundle {
  SymExpr E, F, G, W;
  SymExpr Duu, Duv, Dvv;
  SymExpr H1, K1;
};

CurvatureBundle curvature_bundle(const HelicoidalSpec& spec);

/// H = 0 condition: H1 itself.
SymExpr condition_cmc_zero(const CurvatureBundle& b);

/// Constant H != 0 condition 4 H^2 |W|^3 - H1^2, with |W|^3 = sigma W^3.
/// sigma = +1 assumes a spacelike surface (W > 0), sigma = -1 timelike.
SymExpr condition_cmc_nonzero(const CurvatureBundle& b, int sigma);

/// Constant Gauss curvature condition K W^2 + K1 with K a free parameter.
SymExpr condition_cgc(const CurvatureBundle& b);

/// H^2 - K = 0 condition for timelike surfaces: H1^2 - 4 W K1.
SymExpr condition_hk_equal(const CurvatureBundle& b);

}  // namespace helisurf
