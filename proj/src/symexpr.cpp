#include "helisurf/symexpr.hpp"

#include <cmath>
#include <stdexcept>

namespace helisurf {

std::string BasisRef::to_string() const {
  switch (kind) {
    case Kind::PowS:
      if (index == 0) return "1";
      if (index == 1) return "s";
      return "s^" + std::to_string(index);
    case Kind::Cosh: return "cosh(" + std::to_string(index) + "*u)";
    default: return "sinh(" + std::to_string(index) + "*u)";
  }
}

SymExpr SymExpr::constant(const ParamPoly& c) {
  SymExpr out;
  if (!c.is_zero()) out.poly_.push_back(c);
  return out;
}

SymExpr SymExpr::s_power(int n, const ParamPoly& c) {
  if (n < 0) throw std::invalid_argument("SymExpr: negative power of s");
  SymExpr out;
  if (c.is_zero()) return out;
  out.poly_.resize(static_cast<std::size_t>(n) + 1);
  out.poly_[static_cast<std::size_t>(n)] = c;
  return out;
}

SymExpr SymExpr::cosh_term(int k, const ParamPoly& a) {
  if (k < 0) throw std::invalid_argument("SymExpr: negative frequency");
  SymExpr out;
  out.mode_ = Mode::Hyp;
  if (!a.is_zero()) out.hyp_[k] = {a, ParamPoly()};
  return out;
}

SymExpr SymExpr::sinh_term(int k, const ParamPoly& b) {
  if (k <= 0) throw std::invalid_argument("SymExpr: sinh frequency must be positive");
  SymExpr out;
  out.mode_ = Mode::Hyp;
  if (!b.is_zero()) out.hyp_[k] = {ParamPoly(), b};
  return out;
}

bool SymExpr::is_zero() const {
  return mode_ == Mode::Poly ? poly_.empty() : hyp_.empty();
}

void SymExpr::trim() {
  if (mode_ == Mode::Poly) {
    while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
  } else {
    for (auto it = hyp_.begin(); it != hyp_.end();) {
      if (it->second.first.is_zero() && it->second.second.is_zero())
        it = hyp_.erase(it);
      else
        ++it;
    }
  }
}

void SymExpr::require_same_mode(const SymExpr& a, const SymExpr& b) {
  if (a.mode_ != b.mode_)
    throw std::invalid_argument("SymExpr: mixed PolyMode/HypMode operands");
}

SymExpr SymExpr::operator-() const { return scaled(ParamPoly(Rational(-1))); }

SymExpr operator+(const SymExpr& a, const SymExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  SymExpr::require_same_mode(a, b);
  SymExpr out = a;
  if (a.mode_ == SymExpr::Mode::Poly) {
    if (out.poly_.size() < b.poly_.size()) out.poly_.resize(b.poly_.size());
    for (std::size_t i = 0; i < b.poly_.size(); ++i) out.poly_[i] += b.poly_[i];
  } else {
    for (const auto& [k, ab] : b.hyp_) {
      auto& slot = out.hyp_[k];
      slot.first += ab.first;
      slot.second += ab.second;
    }
  }
  out.trim();
  return out;
}

SymExpr operator-(const SymExpr& a, const SymExpr& b) { return a + (-b); }

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  if (a.is_zero() || b.is_zero()) return SymExpr::zero();
  SymExpr::require_same_mode(a, b);
  SymExpr out;
  out.mode_ = a.mode_;
  if (a.mode_ == SymExpr::Mode::Poly) {
    out.poly_.resize(a.poly_.size() + b.poly_.size() - 1);
    for (std::size_t i = 0; i < a.poly_.size(); ++i) {
      if (a.poly_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.poly_.size(); ++j) {
        if (b.poly_[j].is_zero()) continue;
        out.poly_[i + j] += a.poly_[i] * b.poly_[j];
      }
    }
  } else {
    // cosh(j)cosh(k) = (cosh(j+k) + cosh(|j-k|))/2
    // sinh(j)sinh(k) = (cosh(j+k) - cosh(|j-k|))/2
    // sinh(j)cosh(k) = (sinh(j+k) + sgn(j-k) sinh(|j-k|))/2
    const Rational half(1, 2);
    auto add_cosh = [&out](int k, const ParamPoly& v) {
      if (!v.is_zero()) out.hyp_[k].first += v;
    };
    auto add_sinh = [&out](int k, const ParamPoly& v) {
      if (k == 0 || v.is_zero()) return;  // sinh(0) = 0
      out.hyp_[k].second += v;
    };
    for (const auto& [j, ajbj] : a.hyp_) {
      const auto& [Aj, Bj] = ajbj;
      for (const auto& [k, akbk] : b.hyp_) {
        const auto& [Ak, Bk] = akbk;
        int sum = j + k;
        int dif = std::abs(j - k);
        int sgn_jk = (j > k) ? 1 : (j < k ? -1 : 0);
        if (!Aj.is_zero() && !Ak.is_zero()) {
          ParamPoly p = (Aj * Ak).scaled(half);
          add_cosh(sum, p);
          add_cosh(dif, p);
        }
        if (!Bj.is_zero() && !Bk.is_zero()) {
          ParamPoly p = (Bj * Bk).scaled(half);
          add_cosh(sum, p);
          add_cosh(dif, -p);
        }
        if (!Bj.is_zero() && !Ak.is_zero()) {
          ParamPoly p = (Bj * Ak).scaled(half);
          add_sinh(sum, p);
          if (sgn_jk > 0) add_sinh(dif, p);
          if (sgn_jk < 0) add_sinh(dif, -p);
        }
        if (!Aj.is_zero() && !Bk.is_zero()) {
          ParamPoly p = (Aj * Bk).scaled(half);
          add_sinh(sum, p);
          if (sgn_jk < 0) add_sinh(dif, p);
          if (sgn_jk > 0) add_sinh(dif, -p);
        }
      }
    }
  }
  out.trim();
  return out;
}

bool operator==(const SymExpr& a, const SymExpr& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.mode_ != b.mode_) return false;
  return a.mode_ == SymExpr::Mode::Poly ? a.poly_ == b.poly_ : a.hyp_ == b.hyp_;
}

SymExpr SymExpr::scaled(const ParamPoly& c) const {
  SymExpr out;
  out.mode_ = mode_;
  if (c.is_zero()) {
    out.mode_ = Mode::Poly;
    return out;
  }
  if (mode_ == Mode::Poly) {
    out.poly_.reserve(poly_.size());
    for (const auto& p : poly_) out.poly_.push_back(p * c);
  } else {
    for (const auto& [k, ab] : hyp_) out.hyp_[k] = {ab.first * c, ab.second * c};
  }
  out.trim();
  return out;
}

SymExpr SymExpr::pow(unsigned e) const {
  SymExpr out = SymExpr::constant(Rational(1));
  if (mode_ == Mode::Hyp) out = SymExpr::cosh_term(0, ParamPoly(Rational(1)));
  SymExpr base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

SymExpr SymExpr::diff() const {
  SymExpr out;
  out.mode_ = mode_;
  if (mode_ == Mode::Poly) {
    if (poly_.size() <= 1) return SymExpr::zero();
    out.poly_.resize(poly_.size() - 1);
    for (std::size_t n = 1; n < poly_.size(); ++n)
      out.poly_[n - 1] = poly_[n].scaled(Rational(static_cast<long>(n)));
  } else {
    for (const auto& [k, ab] : hyp_) {
      if (k == 0) continue;
      Rational kk(static_cast<long>(k));
      out.hyp_[k] = {ab.second.scaled(kk), ab.first.scaled(kk)};
    }
  }
  out.trim();
  return out;
}

CoefficientSystem SymExpr::extract_coefficients() const {
  CoefficientSystem out;
  if (mode_ == Mode::Poly) {
    for (std::size_t n = 0; n < poly_.size(); ++n)
      if (!poly_[n].is_zero())
        out.equations.push_back({{BasisRef::Kind::PowS, static_cast<int>(n)}, poly_[n]});
  } else {
    for (const auto& [k, ab] : hyp_) {
      if (!ab.first.is_zero())
        out.equations.push_back({{BasisRef::Kind::Cosh, k}, ab.first});
      if (!ab.second.is_zero())
        out.equations.push_back({{BasisRef::Kind::Sinh, k}, ab.second});
    }
  }
  return out;
}

LeadingTerm SymExpr::leading_term() const {
  if (is_zero()) throw std::domain_error("SymExpr: no leading term of the zero expression");
  LeadingTerm out;
  if (mode_ == Mode::Poly) {
    out.basis = {BasisRef::Kind::PowS, static_cast<int>(poly_.size()) - 1};
    out.coeff = poly_.back();
  } else {
    const auto& [k, ab] = *hyp_.rbegin();
    if (!ab.first.is_zero()) {
      out.basis = {BasisRef::Kind::Cosh, k};
      out.coeff = ab.first;
      out.sinh_partner = ab.second;
    } else {
      out.basis = {BasisRef::Kind::Sinh, k};
      out.coeff = ab.second;
    }
  }
  return out;
}

ParamPoly SymExpr::coefficient(const BasisRef& ref) const {
  if (mode_ == Mode::Poly) {
    if (ref.kind != BasisRef::Kind::PowS) return ParamPoly();
    auto n = static_cast<std::size_t>(ref.index);
    return n < poly_.size() ? poly_[n] : ParamPoly();
  }
  auto it = hyp_.find(ref.index);
  if (it == hyp_.end()) return ParamPoly();
  if (ref.kind == BasisRef::Kind::Cosh) return it->second.first;
  if (ref.kind == BasisRef::Kind::Sinh) return it->second.second;
  return ParamPoly();
}

int SymExpr::degree() const {
  if (is_zero()) return -1;
  return mode_ == Mode::Poly ? static_cast<int>(poly_.size()) - 1 : hyp_.rbegin()->first;
}

namespace {
template <class F>
SymExpr map_coefficients(const SymExpr& e, F&& f) {
  auto system = e.extract_coefficients();
  SymExpr out;
  bool hyp = e.is_hyp();
  if (hyp) out = SymExpr::cosh_term(0, ParamPoly());
  for (const auto& [ref, coeff] : system.equations) {
    ParamPoly mapped = f(coeff);
    if (mapped.is_zero()) continue;
    switch (ref.kind) {
      case BasisRef::Kind::PowS: out = out + SymExpr::s_power(ref.index, mapped); break;
      case BasisRef::Kind::Cosh: out = out + SymExpr::cosh_term(ref.index, mapped); break;
      case BasisRef::Kind::Sinh: out = out + SymExpr::sinh_term(ref.index, mapped); break;
    }
  }
  return out;
}
}  // namespace

SymExpr SymExpr::substitute(Param p, const Rational& value) const {
  return map_coefficients(*this, [&](const ParamPoly& c) { return c.substitute(p, value); });
}

SymExpr SymExpr::substitute(Param p, const ParamPoly& value) const {
  return map_coefficients(*this, [&](const ParamPoly& c) { return c.substitute(p, value); });
}

SymExpr SymExpr::substitute_rational(Param p, const ParamPoly& num,
                                     const ParamPoly& den) const {
  unsigned top = 0;
  for (const auto& [ref, c] : extract_coefficients().equations)
    top = std::max(top, static_cast<unsigned>(c.degree_in(p)));
  return map_coefficients(*this, [&](const ParamPoly& c) {
    auto by_power = c.collect(p);
    ParamPoly out;
    for (unsigned d = 0; d < by_power.size(); ++d) {
      if (by_power[d].is_zero()) continue;
      out += by_power[d] * num.pow(d) * den.pow(top - d);
    }
    return out;
  });
}

SymExpr SymExpr::substitute_square_rational(Param p, const ParamPoly& num,
                                            const ParamPoly& den) const {
  unsigned top = 0;
  for (const auto& [ref, c] : extract_coefficients().equations)
    top = std::max(top, static_cast<unsigned>(c.degree_in(p) / 2));
  return map_coefficients(*this, [&](const ParamPoly& c) {
    ParamPoly out;
    for (const auto& [m, coef] : c.terms()) {
      unsigned half = static_cast<unsigned>(m.exponent(p) / 2);
      Monomial mm = m;
      mm.exp[static_cast<std::size_t>(p)] =
          static_cast<std::uint8_t>(m.exponent(p) % 2);
      out += ParamPoly::from_term(mm, coef) * num.pow(half) * den.pow(top - half);
    }
    return out;
  });
}

SymExpr SymExpr::normalized(Rational* content_out, Monomial* monomial_out) const {
  auto system = extract_coefficients();
  Rational content(0);
  Monomial mono;
  bool first = true;
  for (const auto& [ref, c] : system.equations) {
    content = Rational::gcd(content, c.content());
    mono = first ? c.monomial_gcd() : mono.gcd(c.monomial_gcd());
    first = false;
  }
  if (first) {
    if (content_out) *content_out = Rational(0);
    if (monomial_out) *monomial_out = Monomial{};
    return *this;
  }
  if (content_out) *content_out = content;
  if (monomial_out) *monomial_out = mono;
  Rational inv = content.reciprocal();
  return map_coefficients(*this, [&](const ParamPoly& c) {
    return c.divide_by_monomial(mono).scaled(inv);
  });
}

double SymExpr::eval_double(double s_value, const ParamBindingsD& values) const {
  double acc = 0;
  if (mode_ == Mode::Poly) {
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it)
      acc = acc * s_value + it->eval_double(values);
  } else {
    auto theta_it = values.find(Param::theta);
    double u = s_value + (theta_it == values.end() ? 0.0 : theta_it->second);
    for (const auto& [k, ab] : hyp_) {
      acc += ab.first.eval_double(values) * std::cosh(k * u);
      acc += ab.second.eval_double(values) * std::sinh(k * u);
    }
  }
  return acc;
}

Rational SymExpr::eval_exact(const Rational& s_value, const ParamBindings& values) const {
  if (mode_ != Mode::Poly)
    throw std::invalid_argument("SymExpr::eval_exact: HypMode is not rational-valued");
  Rational acc(0);
  for (auto it = poly_.rbegin(); it != poly_.rend(); ++it)
    acc = acc * s_value + it->eval(values);
  return acc;
}

std::string SymExpr::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const ParamPoly& c, const std::string& basis) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    bool wrap = c.term_count() > 1;
    std::string cs = c.to_string();
    if (basis.empty()) {
      out += wrap ? "(" + cs + ")" : cs;
      return;
    }
    if (cs == "1") {
      out += basis;
    } else if (cs == "-1") {
      out += "-" + basis;
    } else {
      out += (wrap ? "(" + cs + ")" : cs) + "*" + basis;
    }
  };
  if (mode_ == Mode::Poly) {
    for (std::size_t n = 0; n < poly_.size(); ++n) {
      std::string basis = n == 0 ? "" : (n == 1 ? "s" : "s^" + std::to_string(n));
      append(poly_[n], basis);
    }
  } else {
    for (const auto& [k, ab] : hyp_) {
      append(ab.first, k == 0 ? "" : "cosh(" + std::to_string(k) + "*u)");
      append(ab.second, "sinh(" + std::to_string(k) + "*u)");
    }
  }
  return out;
}

}  // namespace helisurf
