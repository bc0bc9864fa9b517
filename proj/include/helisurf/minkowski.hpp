#pragma once

#include <array>
#include <cmath>

#include "helisurf/rational.hpp"

namespace helisurf {

// Scalar model: any commutative ring type with +, -, *, default-constructed zero.
// Instantiated with double, Rational, ParamPoly and SymExpr.
template <class S>
struct Vec3 {
  S x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(const S& c, const Vec3& v) { return {c * v.x, c * v.y, c * v.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// Indefinite inner product of signature (+,+,-): <u,v> = ux vx + uy vy - uz vz.
template <class S>
S minkowski_dot(const Vec3<S>& u, const Vec3<S>& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

/// Cross product characterized by <u x v, w> = det(u,v,w) for all w.
/// Componentwise: (uy vz - uz vy, uz vx - ux vz, -(ux vy - uy vx)).
template <class S>
Vec3<S> lorentz_cross(const Vec3<S>& u, const Vec3<S>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          S{} - (u.x * v.y - u.y * v.x)};
}

/// Ordinary determinant of the matrix with rows u, v, w.
template <class S>
S det3(const Vec3<S>& u, const Vec3<S>& v, const Vec3<S>& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
         u.z * (v.x * w.y - v.y * w.x);
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

/// Zero vector is classified spacelike.
inline CausalCharacter causal_character(const Vec3<Rational>& v) {
  Rational q = minkowski_dot(v, v);
  if (q.sign() > 0) return CausalCharacter::Spacelike;
  if (q.sign() < 0) return CausalCharacter::Timelike;
  bool zero = v.x.is_zero() && v.y.is_zero() && v.z.is_zero();
  return zero ? CausalCharacter::Spacelike : CausalCharacter::Lightlike;
}

inline CausalCharacter causal_character(const Vec3<double>& v) {
  double q = minkowski_dot(v, v);
  if (q > 0) return CausalCharacter::Spacelike;
  if (q < 0) return CausalCharacter::Timelike;
  bool zero = v.x == 0 && v.y == 0 && v.z == 0;
  return zero ? CausalCharacter::Spacelike : CausalCharacter::Lightlike;
}

inline const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    default: return "lightlike";
  }
}

/// Row-major 3x3 matrix over the same scalar models as Vec3.
template <class S>
struct Matrix3 {
  std::array<S, 9> m{};

  const S& at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  S& at(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

  static Matrix3 identity() {
    Matrix3 id;
    id.at(0, 0) = S{1};
    id.at(1, 1) = S{1};
    id.at(2, 2) = S{1};
    return id;
  }

  Vec3<S> apply(const Vec3<S>& v) const {
    return {at(0, 0) * v.x + at(0, 1) * v.y + at(0, 2) * v.z,
            at(1, 0) * v.x + at(1, 1) * v.y + at(1, 2) * v.z,
            at(2, 0) * v.x + at(2, 1) * v.y + at(2, 2) * v.z};
  }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        S acc{};
        for (int k = 0; k < 3; ++k) acc = acc + a.at(r, k) * b.at(k, c);
        out.at(r, c) = acc;
      }
    return out;
  }

  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.m == b.m; }
};

using Vec3d = Vec3<double>;
using Vec3q = Vec3<Rational>;

inline Vec3d to_double(const Vec3q& v) {
  return {v.x.to_double(), v.y.to_double(), v.z.to_double()};
}

}  // namespace helisurf
