#pragma once

#include <stdexcept>
#include <vector>

#include "helisurf/curve.hpp"

namespace helisurf {

/// Raised at sample points where |EG - F^2| <= 1e-12: the induced metric
/// degenerates there and no curvature data exists.
class DegenerateMetric : public std::runtime_error {
 public:
  explicit DegenerateMetric(double s, double t)
      : std::runtime_error("degenerate metric (|EG-F^2| <= 1e-12) at s=" +
                           std::to_string(s) + ", t=" + std::to_string(t)) {}
};

struct NumericFrame {
  Vec3d X, Xs, Xt, Xss, Xst, Xtt;
  Vec3d N;
  double E = 0, F = 0, G = 0;
  double e = 0, f = 0, g = 0;
  double W = 0;
  int epsilon = 0;  // <N,N>; +1 timelike surface (W < 0), -1 spacelike (W > 0)
  double H = 0, K = 0;
};

/// Shape operator in the (X_s, X_t) basis together with its spectral data.
struct WeingartenMatrix {
  double a[2][2] = {{0, 0}, {0, 0}};
  double trace = 0;
  double det = 0;
  double discriminant = 0;      // (trace/2)^2 - det
  double defect_norm = 0;       // Frobenius norm of A - (trace/2) I
  bool non_diagonalizable = false;
};

/// Floating-point evaluator for one concrete helicoidal surface. Derivatives
/// are closed-form (polynomial, trigonometric and hyperbolic pieces are
/// differentiated by hand per axis kind); fd_frame provides the independent
/// finite-difference oracle.
class SurfaceEvaluator {
 public:
  explicit SurfaceEvaluator(const HelicoidalSpec& spec);

  Vec3d position(double s, double t) const;
  NumericFrame frame(double s, double t) const;
  NumericFrame fd_frame(double s, double t, double step) const;
  /// (H, K) at a nondegenerate point.
  std::pair<double, double> curvatures(double s, double t) const;
  WeingartenMatrix weingarten(double s, double t) const;

  const HelicoidalSpec& spec() const { return spec_; }

 private:
  struct CurveJet {
    Vec3d p, d1, d2;
  };
  CurveJet curve_jet(double s) const;
  static NumericFrame assemble(const Vec3d& X, const Vec3d& Xs, const Vec3d& Xt,
                               const Vec3d& Xss, const Vec3d& Xst, const Vec3d& Xtt,
                               double s, double t);

  HelicoidalSpec spec_;
  double h_ = 0;
};

/// Row-major (s rows, t columns) grid of surface points; n_s, n_t >= 2 and
/// nonempty ranges required.
std::vector<Vec3d> sample_grid(const HelicoidalSpec& spec, double s_min, double s_max,
                               double t_min, double t_max, int n_s, int n_t);

}  // namespace helisurf
