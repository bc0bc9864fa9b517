#include <doctest.h>

#include <cmath>

#include "helisurf/numeric.hpp"
#include "helisurf/surface.hpp"
#include "test_util.hpp"

using namespace helisurf;
using testutil::RationalGen;
using testutil::rel_err;

namespace {

HelicoidalSpec poly_spec(AxisKind axis, std::vector<Rational> coeffs, Rational h) {
  PolyGraphSpec g;
  g.degree = static_cast<int>(coeffs.size()) - 1;
  for (auto& c : coeffs) g.coeffs.emplace_back(c);
  return {axis, h, g};
}

HelicoidalSpec hyperbolic_cylinder(bool plus, Rational r, Rational h = Rational(1)) {
  return {AxisKind::Spacelike, h, CircleSpec{plus, r, Rational(0), Rational(0)}};
}

}  // namespace

TEST_CASE("eval_surface matches the printed parametrizations") {
  // Helicoid of first kind (f = 0, h = 1) at (1, 0).
  SurfaceEvaluator first(poly_spec(AxisKind::Timelike, {Rational(0)}, Rational(1)));
  Vec3d p = first.position(1.0, 0.0);
  CHECK(p.x == doctest::Approx(1.0));
  CHECK(p.y == doctest::Approx(0.0));
  CHECK(p.z == doctest::Approx(0.0));

  // Timelike axis, f(s) = s + 1, h = 1 at (0, pi/2): (0, 0, 1 + pi/2).
  SurfaceEvaluator ruled(poly_spec(AxisKind::Timelike, {Rational(1), Rational(1)}, Rational(1)));
  Vec3d q = ruled.position(0.0, M_PI / 2);
  CHECK(std::abs(q.x) < 1e-15);
  CHECK(std::abs(q.y) < 1e-15);
  CHECK(q.z == doctest::Approx(1.0 + M_PI / 2));

  // Hyperbolic cylinder r = 1 at (0, 0): gamma(0) = (0, 1, 0).
  SurfaceEvaluator cyl(hyperbolic_cylinder(true, Rational(1)));
  Vec3d c = cyl.position(0.0, 0.0);
  CHECK(c.x == doctest::Approx(0.0));
  CHECK(c.y == doctest::Approx(1.0));
  CHECK(c.z == doctest::Approx(0.0));
}

TEST_CASE("frame invariants: unit normal, tangency, metric sign") {
  RationalGen gen(301);
  std::vector<HelicoidalSpec> specs = {
      hyperbolic_cylinder(true, Rational(2)),
      poly_spec(AxisKind::Spacelike, {Rational(2), Rational(1)}, Rational(1)),
      poly_spec(AxisKind::Timelike, {Rational(0), Rational(1)}, Rational(3)),
      poly_spec(AxisKind::Lightlike, {Rational(1)}, Rational(1)),
  };
  for (const auto& spec : specs) {
    SurfaceEvaluator eval(spec);
    for (int i = 0; i < 10; ++i) {
      double s = gen.next_double(0.5, 2.0), t = gen.next_double(-1.0, 1.0);
      NumericFrame f = eval.frame(s, t);
      CHECK(std::abs(minkowski_dot(f.N, f.N) - f.epsilon) < 1e-10);
      CHECK(std::abs(minkowski_dot(f.N, f.Xs)) < 1e-10);
      CHECK(std::abs(minkowski_dot(f.N, f.Xt)) < 1e-10);
      CHECK((f.W < 0 ? 1 : -1) == f.epsilon);
    }
  }
}

TEST_CASE("constant metric determinants of the ruled examples") {
  // Spacelike axis, a1 = 1, a0 = 2, h = 1: W = -a0^2 = -4.
  SurfaceEvaluator sp(poly_spec(AxisKind::Spacelike, {Rational(2), Rational(1)}, Rational(1)));
  // Timelike axis, a1 = 1, h = 3: W = -h^2 = -9.
  SurfaceEvaluator tl(poly_spec(AxisKind::Timelike, {Rational(0), Rational(1)}, Rational(3)));
  RationalGen gen(303);
  for (int i = 0; i < 10; ++i) {
    double s = gen.next_double(-2, 2), t = gen.next_double(-2, 2);
    CHECK(rel_err(sp.frame(s, t).W, -4.0) < 1e-12);
    CHECK(rel_err(tl.frame(s, t).W, -9.0) < 1e-12);
    CHECK(sp.frame(s, t).epsilon == 1);
    CHECK(tl.frame(s, t).epsilon == 1);
  }
  // Hyperbolic cylinder r = 2: W = -h^2 r^2 < 0, timelike surface.
  SurfaceEvaluator cyl(hyperbolic_cylinder(true, Rational(2)));
  for (int i = 0; i < 5; ++i) {
    NumericFrame f = cyl.frame(gen.next_double(-1, 1), gen.next_double(-1, 1));
    CHECK(f.W < 0);
    CHECK(f.epsilon == 1);
    CHECK(rel_err(f.W, -4.0) < 1e-12);
  }
}

TEST_CASE("curvature values of the catalog examples") {
  RationalGen gen(305);
  SUBCASE("hyperbolic cylinder r=2: |H| = 1/4, K = 0") {
    SurfaceEvaluator eval(hyperbolic_cylinder(true, Rational(2)));
    for (int i = 0; i < 10; ++i) {
      auto [H, K] = eval.curvatures(gen.next_double(-1.5, 1.5), gen.next_double(-1.5, 1.5));
      CHECK(std::abs(std::abs(H) - 0.25) < 1e-9);
      CHECK(std::abs(K) < 1e-9);
    }
  }
  SUBCASE("X = (s cos t, s sin t, s + 1 + 2t): |H| = 1/2, K = 1/4") {
    SurfaceEvaluator eval(poly_spec(AxisKind::Timelike, {Rational(1), Rational(1)}, Rational(2)));
    for (int i = 0; i < 10; ++i) {
      auto [H, K] = eval.curvatures(gen.next_double(-2, 2), gen.next_double(-2, 2));
      CHECK(std::abs(std::abs(H) - 0.5) < 1e-9);
      CHECK(std::abs(K - 0.25) < 1e-9);
    }
  }
  SUBCASE("Cayley surface: H = 0") {
    SurfaceEvaluator eval(poly_spec(AxisKind::Lightlike, {Rational(1)}, Rational(1)));
    for (int i = 0; i < 10; ++i) {
      auto [H, K] = eval.curvatures(gen.next_double(0.5, 3.0), gen.next_double(-1, 1));
      CHECK(std::abs(H) < 1e-9);
      (void)K;
    }
  }
}

TEST_CASE("degenerate metric points raise") {
  // Helicoid of first kind has W = s^2 - h^2; s = h is degenerate.
  SurfaceEvaluator eval(poly_spec(AxisKind::Timelike, {Rational(0)}, Rational(1)));
  CHECK_THROWS_AS(eval.frame(1.0, 0.3), DegenerateMetric);
  CHECK_NOTHROW(eval.frame(2.0, 0.3));
}

TEST_CASE("fd oracle step range is validated") {
  SurfaceEvaluator eval(poly_spec(AxisKind::Timelike, {Rational(0)}, Rational(1)));
  CHECK_THROWS_AS(eval.fd_frame(2.0, 0.0, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(eval.fd_frame(2.0, 0.0, 1e-2), std::invalid_argument);
}

TEST_CASE("analytic frames match the finite-difference oracle") {
  RationalGen gen(307);
  std::vector<HelicoidalSpec> specs = {
      // Helicoid of second kind.
      poly_spec(AxisKind::Spacelike, {Rational(0)}, Rational(1)),
      // Parabolic null cylinder.
      {AxisKind::Lightlike, Rational(1), HorizontalLineSpec{Rational(1)}},
      // Lorentzian cylinder.
      {AxisKind::Timelike, Rational(1), VerticalLineSpec{Rational(2)}},
      // Lightlike-axis circle.
      {AxisKind::Lightlike, Rational(1),
       LightCircleSpec{Rational(1), Rational(1, 2), Rational(1, 3), Rational(-1)}},
      // Off-center timelike-axis circle.
      {AxisKind::Timelike, Rational(2), CircleSpec{true, Rational(1), Rational(3), Rational(1)}},
      // Cubic graph over a spacelike axis.
      poly_spec(AxisKind::Spacelike, {Rational(0), Rational(1, 4), Rational(0), Rational(1, 8)},
                Rational(2)),
  };
  for (const auto& spec : specs) {
    SurfaceEvaluator eval(spec);
    int checked = 0;
    while (checked < 20) {
      double s = gen.next_double(-0.45, 0.45), t = gen.next_double(-0.45, 0.45);
      NumericFrame a, b;
      try {
        a = eval.frame(s, t);
        b = eval.fd_frame(s, t, 1e-4);
      } catch (const DegenerateMetric&) {
        continue;
      }
      ++checked;
      auto close3 = [](const Vec3d& u, const Vec3d& v) {
        CHECK(rel_err(u.x, v.x) < 1e-6);
        CHECK(rel_err(u.y, v.y) < 1e-6);
        CHECK(rel_err(u.z, v.z) < 1e-6);
      };
      close3(a.Xs, b.Xs);
      close3(a.Xt, b.Xt);
      close3(a.Xss, b.Xss);
      close3(a.Xst, b.Xst);
      close3(a.Xtt, b.Xtt);
      CHECK(rel_err(a.H, b.H) < 1e-5);
      CHECK(rel_err(a.K, b.K) < 1e-5);
    }
  }
}

TEST_CASE("curvatures are invariant along helicoidal orbits") {
  std::vector<HelicoidalSpec> specs = {
      hyperbolic_cylinder(true, Rational(2)),
      hyperbolic_cylinder(false, Rational(1)),
      poly_spec(AxisKind::Timelike, {Rational(1), Rational(1)}, Rational(2)),
      poly_spec(AxisKind::Lightlike, {Rational(1)}, Rational(1)),
  };
  for (const auto& spec : specs) {
    SurfaceEvaluator eval(spec);
    for (int i = 0; i < 10; ++i) {
      double s = 0.6 + 0.15 * i;
      auto [H0, K0] = eval.curvatures(s, 0.0);
      for (int j = 0; j < 10; ++j) {
        double t = -1.0 + 0.22 * j;
        auto [H, K] = eval.curvatures(s, t);
        CHECK(std::abs(H - H0) < 1e-9);
        CHECK(std::abs(K - K0) < 1e-9);
      }
    }
  }
}

TEST_CASE("shape operator discriminant H^2 - epsilon K") {
  RationalGen gen(311);
  SUBCASE("nonnegative on spacelike regions (real spectrum)") {
    // On spacelike points the shape operator is diagonalizable, so
    // H^2 - eps K = ((k1 - k2)/2)^2 >= 0.
    struct Window {
      HelicoidalSpec spec;
      double s_lo, s_hi;
    };
    std::vector<Window> windows = {
        {poly_spec(AxisKind::Timelike, {Rational(0)}, Rational(1)), 1.3, 3.0},
        {poly_spec(AxisKind::Spacelike, {Rational(0)}, Rational(1)), -0.8, 0.8},
        {poly_spec(AxisKind::Lightlike, {Rational(0)}, Rational(1)), -3.0, -0.5},
        {hyperbolic_cylinder(false, Rational(1)), -2.0, 2.0},
    };
    for (const auto& w : windows) {
      SurfaceEvaluator eval(w.spec);
      for (int i = 0; i < 25; ++i) {
        double s = gen.next_double(w.s_lo, w.s_hi), t = gen.next_double(-2, 2);
        NumericFrame f = eval.frame(s, t);
        CHECK(f.epsilon == -1);
        CHECK(f.H * f.H - f.epsilon * f.K >= -1e-10);
      }
    }
  }
  SUBCASE("nonnegative on the flat and H^2 = K families everywhere") {
    std::vector<HelicoidalSpec> specs = {
        hyperbolic_cylinder(true, Rational(1)),
        {AxisKind::Timelike, Rational(1), VerticalLineSpec{Rational(2)}},
        {AxisKind::Lightlike, Rational(1), HorizontalLineSpec{Rational(1)}},
        poly_spec(AxisKind::Timelike, {Rational(1), Rational(1)}, Rational(2)),
        poly_spec(AxisKind::Spacelike, {Rational(2), Rational(1)}, Rational(1)),
    };
    for (const auto& spec : specs) {
      SurfaceEvaluator eval(spec);
      int checked = 0;
      while (checked < 25) {
        double s = gen.next_double(-3, 3), t = gen.next_double(-2, 2);
        try {
          NumericFrame f = eval.frame(s, t);
          CHECK(f.H * f.H - f.epsilon * f.K >= -1e-10);
          ++checked;
        } catch (const DegenerateMetric&) {
        }
      }
    }
  }
  SUBCASE("timelike minimal surfaces can have complex principal curvatures") {
    // The helicoid of third kind is timelike with H = 0 and K = h^2/W^2 > 0,
    // so its shape operator has complex spectrum and the discriminant is
    // negative. This bounds how far the nonnegativity above can extend.
    SurfaceEvaluator third({AxisKind::Spacelike, Rational(1), VerticalLineSpec{Rational(0)}});
    for (int i = 0; i < 10; ++i) {
      NumericFrame f = third.frame(gen.next_double(-2, 2), gen.next_double(-2, 2));
      CHECK(f.epsilon == 1);
      CHECK(std::abs(f.H) < 1e-12);
      CHECK(f.K > 0);
      CHECK(f.H * f.H - f.epsilon * f.K < -1e-3);
    }
  }
}

TEST_CASE("symbolic bundle at t=0 agrees with the numeric frame") {
  RationalGen gen(313);
  std::vector<HelicoidalSpec> specs = {
      poly_spec(AxisKind::Timelike, {Rational(1, 2), Rational(2), Rational(1, 3)}, Rational(1)),
      poly_spec(AxisKind::Spacelike, {Rational(1), Rational(1, 2)}, Rational(3, 2)),
      poly_spec(AxisKind::Lightlike, {Rational(0), Rational(1), Rational(1, 4)}, Rational(1)),
      hyperbolic_cylinder(true, Rational(2)),
      {AxisKind::Lightlike, Rational(1),
       LightCircleSpec{Rational(1), Rational(1, 2), Rational(0), Rational(1)}},
  };
  for (const auto& spec : specs) {
    CurvatureBundle bundle = curvature_bundle(spec);
    SurfaceEvaluator eval(spec);
    auto bind = concrete_bindings(spec);
    int checked = 0;
    while (checked < 10) {
      double s = gen.next_double(0.3, 1.8);
      NumericFrame f;
      try {
        f = eval.frame(s, 0.0);
      } catch (const DegenerateMetric&) {
        continue;
      }
      ++checked;
      CHECK(rel_err(bundle.E.eval_double(s, bind), f.E) < 1e-10);
      CHECK(rel_err(bundle.F.eval_double(s, bind), f.F) < 1e-10);
      CHECK(rel_err(bundle.G.eval_double(s, bind), f.G) < 1e-10);
      CHECK(rel_err(bundle.W.eval_double(s, bind), f.W) < 1e-10);
      // H from the determinant forms: H = -H1 / (2 |W|^(3/2)).
      double W = f.W;
      double H_sym = -bundle.H1.eval_double(s, bind) /
                     (2 * std::pow(std::abs(W), 1.5));
      double K_sym = -bundle.K1.eval_double(s, bind) / (W * W);
      CHECK(rel_err(H_sym, f.H) < 1e-10);
      CHECK(rel_err(K_sym, f.K) < 1e-10);
    }
  }
}

TEST_CASE("weingarten identities and degeneracy detection") {
  RationalGen gen(317);
  SUBCASE("trace and determinant identities at random points") {
    std::vector<HelicoidalSpec> specs = {
        hyperbolic_cylinder(true, Rational(2)),
        poly_spec(AxisKind::Timelike, {Rational(0), Rational(2)}, Rational(1)),
        poly_spec(AxisKind::Spacelike, {Rational(2), Rational(1)}, Rational(1)),
    };
    for (const auto& spec : specs) {
      SurfaceEvaluator eval(spec);
      int checked = 0;
      while (checked < 15) {
        double s = gen.next_double(-2, 2), t = gen.next_double(-2, 2);
        try {
          NumericFrame f = eval.frame(s, t);
          WeingartenMatrix w = eval.weingarten(s, t);
          CHECK(std::abs(w.trace - 2 * f.epsilon * f.H) < 1e-8);
          CHECK(std::abs(w.det - f.epsilon * f.K) < 1e-8);
          ++checked;
        } catch (const DegenerateMetric&) {
        }
      }
    }
  }
  SUBCASE("ruled H^2 = K surfaces are non-umbilical and non-diagonalizable") {
    SurfaceEvaluator tl(poly_spec(AxisKind::Timelike, {Rational(0), Rational(1)}, Rational(1)));
    SurfaceEvaluator sp(poly_spec(AxisKind::Spacelike, {Rational(1), Rational(1)}, Rational(1)));
    for (int i = 0; i < 10; ++i) {
      double s = gen.next_double(-2, 2), t = gen.next_double(-2, 2);
      for (SurfaceEvaluator* eval : {&tl, &sp}) {
        WeingartenMatrix w = eval->weingarten(s, t);
        CHECK(w.discriminant < 1e-8);
        CHECK(w.defect_norm > 1e-6);
        CHECK(w.non_diagonalizable);
      }
    }
    // The spacelike family has both eigenvalues zero but A != 0.
    WeingartenMatrix w = sp.weingarten(0.5, 0.25);
    CHECK(std::abs(w.trace) < 1e-9);
    CHECK(std::abs(w.det) < 1e-9);
    CHECK(w.defect_norm > 1e-6);
  }
  SUBCASE("Lorentzian cylinder r=1: |trace| = 2|H| = 1, det = 0") {
    SurfaceEvaluator cyl({AxisKind::Timelike, Rational(1), VerticalLineSpec{Rational(1)}});
    for (int i = 0; i < 5; ++i) {
      WeingartenMatrix w = cyl.weingarten(gen.next_double(-1, 1), gen.next_double(-1, 1));
      CHECK(std::abs(std::abs(w.trace) - 1.0) < 1e-9);
      CHECK(std::abs(w.det) < 1e-9);
    }
  }
}

TEST_CASE("sample_grid shapes and validation") {
  HelicoidalSpec cayley = poly_spec(AxisKind::Lightlike, {Rational(0)}, Rational(1));
  auto grid = sample_grid(cayley, 0.5, 2.5, -1.0, 1.0, 2, 2);
  REQUIRE(grid.size() == 4);
  SurfaceEvaluator eval(cayley);
  Vec3d c00 = eval.position(0.5, -1.0), c11 = eval.position(2.5, 1.0);
  CHECK(grid.front().x == doctest::Approx(c00.x));
  CHECK(grid.front().z == doctest::Approx(c00.z));
  CHECK(grid.back().y == doctest::Approx(c11.y));

  CHECK(sample_grid(cayley, 0.5, 2.5, -1, 1, 50, 50).size() == 2500);
  CHECK_THROWS_AS(sample_grid(cayley, 1.0, 1.0, -1, 1, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(sample_grid(cayley, 0.5, 2.5, -1, 1, 1, 5), std::invalid_argument);
}
