#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "helisurf/rational.hpp"

namespace helisurf {

/// Fixed parameter universe. h is the pitch, H and K are the target curvature
/// constants, r/lambda/mu/c/theta describe circles, b is the offset of a
/// degenerate line curve, a0..a9 are polynomial graph coefficients.
enum class Param : std::uint8_t {
  h,
  H,
  K,
  r,
  lambda,
  mu,
  c,
  theta,
  b,
  a0,
  a1,
  a2,
  a3,
  a4,
  a5,
  a6,
  a7,
  a8,
  a9,
};

inline constexpr std::size_t kParamCount = 19;
inline constexpr int kMaxPolyDegree = 9;

const char* param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);
Param poly_coeff_param(int n);  // a0 + n, n in [0, kMaxPolyDegree]
int poly_coeff_index(Param p);  // inverse of the above, -1 if not an a_n

/// Exponent vector of one monomial in the parameters.
struct Monomial {
  std::array<std::uint8_t, kParamCount> exp{};

  auto operator<=>(const Monomial&) const = default;
  int degree() const;
  int exponent(Param p) const { return exp[static_cast<std::size_t>(p)]; }
  bool is_unit() const { return degree() == 0; }
  bool all_even() const;
  Monomial times(const Monomial& o) const;
  /// Componentwise min; the gcd of two monomials.
  Monomial gcd(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // this / o, requires o.divides(*this)
  std::string to_string() const;
};

using ParamBindings = std::map<Param, Rational>;
using ParamBindingsD = std::map<Param, double>;

/// Element of Q[h, H, K, r, lambda, mu, c, theta, b, a0..a9], stored as a
/// canonical sorted term map with no zero coefficients.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(long n) : ParamPoly(Rational(n)) {}  // NOLINT: ring literal
  explicit ParamPoly(const Rational& c);
  static ParamPoly variable(Param p, int exponent = 1);
  static ParamPoly from_term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Requires is_constant().
  Rational constant_value() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ == b.terms_;
  }

  ParamPoly scaled(const Rational& c) const;
  ParamPoly pow(unsigned e) const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  int degree_in(Param p) const;
  int total_degree() const;
  std::set<Param> vars() const;
  bool only_even_powers_of(Param p) const;

  /// Positive gcd of all coefficients (zero polynomial -> 0).
  Rational content() const;
  /// Componentwise-min exponent vector over all terms.
  Monomial monomial_gcd() const;
  ParamPoly divide_by_monomial(const Monomial& m) const;

  /// Exact multivariate division: returns this / d if the remainder is zero.
  std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;

  ParamPoly substitute(Param p, const Rational& value) const;
  ParamPoly substitute(Param p, const ParamPoly& value) const;
  /// Substitutes p -> num/den and clears denominators: multiplies the result
  /// by den^deg_p(this). Sound for equations compared against zero.
  ParamPoly substitute_rational(Param p, const ParamPoly& num, const ParamPoly& den) const;
  /// Substitutes p^2 -> num/den (odd powers of p keep one factor of p) and
  /// clears denominators by den^(max stored p-exponent / 2).
  ParamPoly substitute_square_rational(Param p, const ParamPoly& num,
                                       const ParamPoly& den) const;

  Rational eval(const ParamBindings& values) const;
  double eval_double(const ParamBindingsD& values) const;

  /// Collects by powers of p: result[d] is the coefficient of p^d.
  std::vector<ParamPoly> collect(Param p) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

inline ParamPoly operator*(const Rational& c, const ParamPoly& p) { return p.scaled(c); }

/// Shorthand used throughout tests and classifier code.
ParamPoly pvar(Param p, int exponent = 1);

}  // namespace helisurf
