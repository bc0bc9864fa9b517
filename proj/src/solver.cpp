#include "helisurf/solver.hpp"

#include <algorithm>

namespace helisurf {

namespace {
constexpr int kMaxDepth = 16;
}

std::string nonzero_to_string(const NonzeroSet& set) {
  std::string out = "{";
  bool first = true;
  for (Param p : set) {
    if (!first) out += ", ";
    out += std::string(param_name(p)) + " != 0";
    first = false;
  }
  return out + "}";
}

NormalizedEq normalize_equation(const ParamPoly& poly, const NonzeroSet& nonzero) {
  NormalizedEq out;
  if (poly.is_zero()) return out;
  out.content = poly.content();
  out.monomial = poly.monomial_gcd();
  out.residual = poly.divide_by_monomial(out.monomial).scaled(out.content.reciprocal());
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (out.monomial.exp[i] == 0) continue;
    Param p = static_cast<Param>(i);
    if (nonzero.count(p))
      out.assumed_divisors.push_back(p);
    else
      out.zero_candidates.push_back(p);
  }
  return out;
}

DefiniteForm definite_even_form(const ParamPoly& p) {
  DefiniteForm out;
  if (p.is_zero()) return out;
  int sign = 0;
  for (const auto& [m, c] : p.terms()) {
    if (!m.all_even()) return out;
    if (sign == 0) sign = c.sign();
    if (c.sign() != sign) return out;
    if (m.is_unit()) out.has_constant = true;
  }
  out.definite = true;
  out.sign = sign;
  return out;
}

bool certified_nonzero(const ParamPoly& p, const NonzeroSet& nonzero) {
  if (p.is_zero()) return false;
  NormalizedEq n = normalize_equation(p, nonzero);
  if (!n.zero_candidates.empty()) return false;
  if (n.residual.is_constant()) return true;
  DefiniteForm d = definite_even_form(n.residual);
  if (!d.definite) return false;
  if (d.has_constant) return true;
  for (Param v : n.residual.vars())
    if (nonzero.count(v)) return true;
  return false;
}

namespace {

/// Rational roots of a univariate polynomial (coefficients rational, the
/// only variable is `p`), with multiplicity collapsed.
std::vector<Rational> rational_roots(const ParamPoly& poly, Param p) {
  std::vector<ParamPoly> coeffs = poly.collect(p);
  std::vector<Rational> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_constant()) return {};
    c[i] = coeffs[i].constant_value();
  }
  // Clear denominators to integers.
  mpz_class lcm_den = 1;
  for (const auto& q : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                  q.raw().get_den().get_mpz_t());
  std::vector<mpz_class> ic(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    ic[i] = c[i].raw().get_num() * (lcm_den / c[i].raw().get_den());
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.size() <= 1) return {};
  // Strip trailing zero roots (p | poly was already removed by the monomial
  // gcd, but stay safe).
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<Rational> roots;
  if (low > 0) roots.push_back(Rational(0));
  std::vector<mpz_class> work(ic.begin() + static_cast<long>(low), ic.end());
  auto divisors = [](const mpz_class& v) {
    std::vector<mpz_class> out;
    mpz_class a = ::abs(v);
    for (mpz_class d = 1; d * d <= a; ++d) {
      if (a % d == 0) {
        out.push_back(d);
        out.push_back(a / d);
      }
    }
    return out;
  };
  auto eval_at = [](const std::vector<mpz_class>& cs, const Rational& x) {
    Rational acc(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
      acc = acc * x + Rational(mpq_class(*it));
    return acc;
  };
  bool progress = true;
  while (progress && work.size() > 1) {
    progress = false;
    for (const mpz_class& pnum : divisors(work.front())) {
      for (const mpz_class& qden : divisors(work.back())) {
        for (int sgn : {1, -1}) {
          Rational cand(mpq_class(sgn * pnum, qden));
          if (!eval_at(work, cand).is_zero()) continue;
          if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
          // Deflate by synthetic division with the rational root.
          std::vector<Rational> quot(work.size() - 1);
          Rational carry(0);
          for (std::size_t i = work.size(); i-- > 1;) {
            carry = Rational(mpq_class(work[i])) + carry * cand;
            quot[i - 1] = carry;
          }
          mpz_class lcm2 = 1;
          for (const auto& q : quot)
            mpz_lcm(lcm2.get_mpz_t(), lcm2.get_mpz_t(), q.raw().get_den().get_mpz_t());
          work.resize(quot.size());
          for (std::size_t i = 0; i < quot.size(); ++i)
            work[i] = quot[i].raw().get_num() * (lcm2 / quot[i].raw().get_den());
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (work.size() > 1) return {};  // an irrational factor is left: caller treats as stuck
  return roots;
}

/// Exponent-halved copy: p^(2k) or p^(2k+1) -> p^k (the odd unit is dropped,
/// callers only use this when every power of p is even).
ParamPoly halve_exponents(const ParamPoly& poly, Param p) {
  ParamPoly out;
  for (const auto& [m, c] : poly.terms()) {
    Monomial mm = m;
    mm.exp[static_cast<std::size_t>(p)] =
        static_cast<std::uint8_t>(m.exponent(p) / 2);
    out += ParamPoly::from_term(mm, c);
  }
  return out;
}

/// Tries to solve `poly` (viewed in var `p`, possibly exponent-halved) as a
/// linear equation with a certified-nonzero pivot.
bool try_linear(const ParamPoly& poly, Param p, const NonzeroSet& nonzero,
                EquationAnalysis* out, bool squared) {
  if (poly.degree_in(p) != 1) return false;
  auto by_power = poly.collect(p);
  const ParamPoly& pivot = by_power[1];
  if (!certified_nonzero(pivot, nonzero)) return false;
  out->kind = EquationAnalysis::Kind::LinearSolve;
  out->param = p;
  out->squared = squared;
  out->num = -by_power[0];
  out->den = pivot;
  // Cancel a common polynomial factor when one side divides the other.
  if (!out->num.is_zero()) {
    if (auto q = out->den.divide_exact(out->num)) {
      out->den = *q;
      out->num = ParamPoly(Rational(1));
    } else if (auto q2 = out->num.divide_exact(out->den)) {
      out->num = *q2;
      out->den = ParamPoly(Rational(1));
    }
  }
  return true;
}

}  // namespace

EquationAnalysis analyze_residual(const ParamPoly& residual, const NonzeroSet& nonzero,
                                  const std::set<Param>& bound) {
  EquationAnalysis out;
  if (residual.is_constant()) {
    out.kind = EquationAnalysis::Kind::NeverZero;
    return out;
  }
  DefiniteForm def = definite_even_form(residual);
  if (def.definite) {
    if (def.has_constant) {
      out.kind = EquationAnalysis::Kind::NeverZero;
      return out;
    }
    for (Param v : residual.vars()) {
      if (nonzero.count(v)) {
        out.kind = EquationAnalysis::Kind::NeverZero;
        return out;
      }
    }
    out.kind = EquationAnalysis::Kind::AllVarsZero;
    for (Param v : residual.vars()) out.vars_to_zero.push_back(v);
    return out;
  }
  std::set<Param> vars = residual.vars();
  if (vars.size() == 1) {
    Param p = *vars.begin();
    if (bound.count(p)) {
      out.kind = EquationAnalysis::Kind::Stuck;
      return out;
    }
    bool even = residual.only_even_powers_of(p);
    ParamPoly poly = even ? halve_exponents(residual, p) : residual;
    auto roots = rational_roots(poly, p);
    if (!roots.empty()) {
      out.kind = EquationAnalysis::Kind::Roots;
      out.param = p;
      out.squared = even;
      out.roots = roots;
      return out;
    }
    out.kind = EquationAnalysis::Kind::Stuck;
    return out;
  }
  // Multi-variable: prefer solving for an unbound non-assumed parameter,
  // then fall back to assumed ones (canonical order within each group).
  std::vector<Param> order;
  for (Param v : vars)
    if (!bound.count(v) && !nonzero.count(v)) order.push_back(v);
  for (Param v : vars)
    if (!bound.count(v) && nonzero.count(v)) order.push_back(v);
  for (Param p : order) {
    if (try_linear(residual, p, nonzero, &out, false)) return out;
  }
  for (Param p : order) {
    if (!residual.only_even_powers_of(p)) continue;
    ParamPoly halved = halve_exponents(residual, p);
    if (try_linear(halved, p, nonzero, &out, true)) return out;
  }
  out.kind = EquationAnalysis::Kind::Stuck;
  return out;
}

std::string BindingValue::render(Param p) const {
  std::string name = param_name(p);
  auto ratio_str = [](const ParamPoly& n, const ParamPoly& d) {
    std::string ns = n.term_count() > 1 ? "(" + n.to_string() + ")" : n.to_string();
    if (d.is_constant() && d.constant_value().is_one()) return ns;
    std::string ds = d.term_count() > 1 ? "(" + d.to_string() + ")" : d.to_string();
    return ns + "/" + ds;
  };
  switch (kind) {
    case Kind::Value:
      return name + " = " + value.to_string();
    case Kind::Ratio:
      return name + " = " + ratio_str(num, den);
    case Kind::SquareRatio: {
      // Prefer |p| = sqrt form when both sides are perfect squares.
      auto sqrt_poly = [](const ParamPoly& q, ParamPoly* root) {
        if (q.term_count() != 1) return false;
        const auto& [m, c] = *q.terms().begin();
        Rational croot;
        if (!c.sqrt_exact(&croot)) return false;
        if (!m.all_even()) return false;
        Monomial half;
        for (std::size_t i = 0; i < kParamCount; ++i)
          half.exp[i] = static_cast<std::uint8_t>(m.exp[i] / 2);
        *root = ParamPoly::from_term(half, croot);
        return true;
      };
      ParamPoly ns, ds;
      if (sqrt_poly(num, &ns) && sqrt_poly(den, &ds))
        return "|" + name + "| = " + ratio_str(ns, ds);
      return name + "^2 = " + ratio_str(num, den);
    }
  }
  return name;
}

ParamPoly apply_bindings(const ParamPoly& poly, const BindingMap& bindings) {
  ParamPoly out = poly;
  for (const auto& [p, b] : bindings) {
    switch (b.kind) {
      case BindingValue::Kind::Value: out = out.substitute(p, b.value); break;
      case BindingValue::Kind::Ratio: out = out.substitute_rational(p, b.num, b.den); break;
      case BindingValue::Kind::SquareRatio:
        out = out.substitute_square_rational(p, b.num, b.den);
        break;
    }
  }
  return out;
}

SymExpr apply_bindings(const SymExpr& expr, const BindingMap& bindings) {
  SymExpr out = expr;
  for (const auto& [p, b] : bindings) {
    switch (b.kind) {
      case BindingValue::Kind::Value: out = out.substitute(p, b.value); break;
      case BindingValue::Kind::Ratio: out = out.substitute_rational(p, b.num, b.den); break;
      case BindingValue::Kind::SquareRatio:
        out = out.substitute_square_rational(p, b.num, b.den);
        break;
    }
  }
  return out;
}

bool ContradictionCertificate::verify(const NonzeroSet& nonzero) const {
  if (content.is_zero()) return false;
  ParamPoly rebuilt = ParamPoly::from_term(monomial, content) * residual;
  if (!(rebuilt == raw)) return false;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    Param p = static_cast<Param>(i);
    if (monomial.exp[i] > 0 &&
        std::find(assumptions.begin(), assumptions.end(), p) == assumptions.end())
      return false;
  }
  if (kind == Kind::Monomial) return residual.is_constant() && !residual.is_zero();
  DefiniteForm d = definite_even_form(residual);
  if (!d.definite) return false;
  if (d.has_constant) return true;
  for (Param v : residual.vars())
    if (nonzero.count(v) &&
        std::find(assumptions.begin(), assumptions.end(), v) != assumptions.end())
      return true;
  return false;
}

namespace {

std::vector<Equation> extract_equations(const SymExpr& expr) {
  std::vector<Equation> out;
  for (const auto& [ref, poly] : expr.extract_coefficients().equations)
    out.push_back({ref, poly});
  // Highest basis last so the solver pops the paper's leading coefficient
  // first; cosh sorts after sinh at equal frequency.
  std::sort(out.begin(), out.end(), [](const Equation& a, const Equation& b) {
    if (a.basis.index != b.basis.index) return a.basis.index < b.basis.index;
    return a.basis.kind == BasisRef::Kind::Sinh && b.basis.kind == BasisRef::Kind::Cosh;
  });
  return out;
}

std::string join_path(const std::string& path, const std::string& step) {
  return path.empty() ? step : path + ", " + step;
}

}  // namespace

SolveOutcome FactorSolver::run() {
  SolveOutcome out;
  solve({}, "", 0, out);
  return out;
}

void FactorSolver::accept_family(const BindingMap& bindings, const std::string& path,
                                 SolveOutcome& out) {
  // Exact verification: the bound condition must vanish identically.
  SymExpr check = apply_bindings(condition_, bindings);
  if (!check.is_zero())
    throw std::logic_error("FactorSolver: candidate family failed exact substitution");
  SymExpr w_sub = apply_bindings(metric_w_, bindings);
  if (w_sub.is_zero()) {
    out.degenerate_rejections.push_back(
        path.empty() ? "metric determinant vanishes identically"
                     : path + " -> metric determinant vanishes identically");
    return;
  }
  SolutionFamily fam;
  fam.bindings = bindings;
  fam.path = path;
  fam.residual_conditions = degeneracy_conditions(w_sub, 0);
  out.families.push_back(std::move(fam));
}

std::vector<std::string> FactorSolver::degeneracy_conditions(const SymExpr& w_sub,
                                                             int depth) {
  // Solve W = 0 under the same assumptions; each solution is a degeneracy
  // locus the family must avoid.
  if (depth > 0) return {};
  std::vector<std::string> out;
  FactorSolver sub(nonzero_, w_sub, SymExpr::constant(Rational(1)));
  SolveOutcome res;
  try {
    res = sub.run();
  } catch (const std::logic_error&) {
    return {"W != 0 (locus not classified)"};
  }
  if (!res.unresolved.empty()) return {"W != 0 (locus not classified)"};
  for (const auto& fam : res.families) {
    std::string cond;
    for (const auto& [p, b] : fam.bindings) {
      std::string one = "not(" + b.render(p) + ")";
      cond = cond.empty() ? one : cond + " or " + one;
    }
    if (!cond.empty()) out.push_back(cond);
  }
  return out;
}

void FactorSolver::solve(const BindingMap& bindings, const std::string& path, int depth,
                         SolveOutcome& out) {
  if (depth > kMaxDepth) {
    out.unresolved.push_back(join_path(path, "depth limit reached"));
    return;
  }
  SymExpr bound = apply_bindings(condition_, bindings);
  std::vector<Equation> eqs = extract_equations(bound);
  if (eqs.empty()) {
    accept_family(bindings, path, out);
    return;
  }
  const Equation eq = eqs.back();  // highest basis index first
  NormalizedEq norm = normalize_equation(eq.poly, nonzero_);
  std::set<Param> bound_params;
  for (const auto& [p, b] : bindings) bound_params.insert(p);
  EquationAnalysis analysis =
      analyze_residual(norm.residual, nonzero_, bound_params);

  auto descend = [&](Param p, BindingValue v) {
    BindingMap next = bindings;
    next[p] = v;
    solve(next, join_path(path, v.render(p)), depth + 1, out);
  };

  bool residual_can_vanish = true;
  switch (analysis.kind) {
    case EquationAnalysis::Kind::NeverZero:
      residual_can_vanish = false;
      break;
    case EquationAnalysis::Kind::AllVarsZero: {
      BindingMap next = bindings;
      std::string step;
      for (Param p : analysis.vars_to_zero) {
        next[p] = BindingValue{BindingValue::Kind::Value, Rational(0), {}, {}};
        step = join_path(step, std::string(param_name(p)) + " = 0");
      }
      solve(next, join_path(path, step), depth + 1, out);
      break;
    }
    case EquationAnalysis::Kind::Roots:
      for (const Rational& root : analysis.roots) {
        if (analysis.squared) {
          if (root.sign() < 0) continue;  // p^2 = negative: no real branch
          if (root.is_zero() && nonzero_.count(analysis.param)) continue;
          Rational sq;
          if (root.sqrt_exact(&sq)) {
            descend(analysis.param, {BindingValue::Kind::Value, sq, {}, {}});
            if (!sq.is_zero())
              descend(analysis.param, {BindingValue::Kind::Value, -sq, {}, {}});
          } else {
            descend(analysis.param, {BindingValue::Kind::SquareRatio, Rational(0),
                                     ParamPoly(root), ParamPoly(Rational(1))});
          }
        } else {
          if (nonzero_.count(analysis.param) && root.is_zero()) continue;
          descend(analysis.param, {BindingValue::Kind::Value, root, {}, {}});
        }
      }
      break;
    case EquationAnalysis::Kind::LinearSolve:
      descend(analysis.param,
              {analysis.squared ? BindingValue::Kind::SquareRatio : BindingValue::Kind::Ratio,
               Rational(0), analysis.num, analysis.den});
      break;
    case EquationAnalysis::Kind::Stuck: {
      std::string dump = join_path(path, "stuck on " + eq.basis.to_string() + ": " +
                                             eq.poly.to_string());
      out.unresolved.push_back(dump);
      break;
    }
  }

  // Monomial zero-branches: the equation also vanishes when a non-assumed
  // monomial parameter is zero.
  for (Param p : norm.zero_candidates)
    descend(p, BindingValue{BindingValue::Kind::Value, Rational(0), {}, {}});

  if (!residual_can_vanish && norm.zero_candidates.empty()) {
    ContradictionCertificate cert;
    cert.basis = eq.basis;
    cert.raw = eq.poly;
    cert.content = norm.content;
    cert.monomial = norm.monomial;
    cert.residual = norm.residual;
    cert.kind = norm.residual.is_constant() ? ContradictionCertificate::Kind::Monomial
                                            : ContradictionCertificate::Kind::Positivity;
    cert.assumptions = norm.assumed_divisors;
    if (cert.kind == ContradictionCertificate::Kind::Positivity) {
      DefiniteForm d = definite_even_form(norm.residual);
      if (!d.has_constant)
        for (Param v : norm.residual.vars())
          if (nonzero_.count(v)) cert.assumptions.push_back(v);
    }
    cert.path = path;
    if (!cert.verify(nonzero_))
      throw std::logic_error("FactorSolver: certificate failed its exact re-check");
    out.certificates.push_back(std::move(cert));
  }
}

}  // namespace helisurf
