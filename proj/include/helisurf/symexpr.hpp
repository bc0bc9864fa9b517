#pragma once

#include <map>
#include <utility>
#include <vector>

#include "helisurf/parampoly.hpp"

namespace helisurf {

/// One basis element of a SymExpr: s^n, cosh(k*u) or sinh(k*u) with u = s+theta.
struct BasisRef {
  enum class Kind { PowS, Cosh, Sinh };
  Kind kind = Kind::PowS;
  int index = 0;

  auto operator<=>(const BasisRef&) const = default;
  std::string to_string() const;
};

struct LeadingTerm {
  BasisRef basis;
  ParamPoly coeff;
  /// HypMode only: the sinh coefficient at the same frequency (zero otherwise).
  ParamPoly sinh_partner;
};

/// One equation per nonzero basis coefficient; all must vanish iff the source
/// expression is identically zero.
struct CoefficientSystem {
  std::vector<std::pair<BasisRef, ParamPoly>> equations;
};

/// Closed symbolic expression class: either a polynomial in s (PolyMode) or a
/// finite combination sum_k A_k cosh(k*u) + B_k sinh(k*u) (HypMode), with
/// coefficients in the parameter ring. Products never leave the class; HypMode
/// multiplication expands through the product-to-sum identities.
class SymExpr {
 public:
  enum class Mode { Poly, Hyp };

  SymExpr() : mode_(Mode::Poly) {}
  static SymExpr zero() { return SymExpr(); }
  static SymExpr constant(const ParamPoly& c);
  static SymExpr constant(const Rational& c) { return constant(ParamPoly(c)); }
  static SymExpr s_power(int n, const ParamPoly& c);
  static SymExpr s() { return s_power(1, ParamPoly(Rational(1))); }
  static SymExpr cosh_term(int k, const ParamPoly& a);
  static SymExpr sinh_term(int k, const ParamPoly& b);

  Mode mode() const { return mode_; }
  bool is_zero() const;
  bool is_hyp() const { return mode_ == Mode::Hyp; }

  SymExpr operator-() const;
  friend SymExpr operator+(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator-(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend bool operator==(const SymExpr& a, const SymExpr& b);

  SymExpr scaled(const ParamPoly& c) const;
  SymExpr pow(unsigned e) const;
  /// d/ds. PolyMode shifts powers; HypMode maps A_k cosh -> k A_k sinh etc.
  SymExpr diff() const;

  CoefficientSystem extract_coefficients() const;
  /// Highest basis coefficient; throws on the zero expression.
  LeadingTerm leading_term() const;
  ParamPoly coefficient(const BasisRef& ref) const;
  int degree() const;  // max stored index

  SymExpr substitute(Param p, const Rational& value) const;
  SymExpr substitute(Param p, const ParamPoly& value) const;
  /// p -> num/den with one global denominator clearing across the expression.
  SymExpr substitute_rational(Param p, const ParamPoly& num, const ParamPoly& den) const;
  /// p^2 -> num/den with global clearing; odd powers of p keep one factor.
  SymExpr substitute_square_rational(Param p, const ParamPoly& num,
                                     const ParamPoly& den) const;

  /// Divides out the rational content and common parameter monomial of all
  /// coefficients. Returns the normalized expression; reports what was removed.
  SymExpr normalized(Rational* content_out = nullptr, Monomial* monomial_out = nullptr) const;

  double eval_double(double s_value, const ParamBindingsD& values) const;
  /// PolyMode only (HypMode values are transcendental in s).
  Rational eval_exact(const Rational& s_value, const ParamBindings& values) const;

  std::string to_string() const;

 private:
  void trim();
  static void require_same_mode(const SymExpr& a, const SymExpr& b);

  Mode mode_;
  std::vector<ParamPoly> poly_;                          // PolyMode: index = power of s
  std::map<int, std::pair<ParamPoly, ParamPoly>> hyp_;   // HypMode: k -> (A_k, B_k)
};

inline SymExpr operator*(const ParamPoly& c, const SymExpr& e) { return e.scaled(c); }

}  // namespace helisurf
