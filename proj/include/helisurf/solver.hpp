#pragma once

#include <set>
#include <string>
#include <vector>

#include "helisurf/symexpr.hpp"

namespace helisurf {

/// Parameters assumed nonzero while solving (pitch h always; H, K, r, c,
/// a_m per context). Certificates cite the subset they rely on.
using NonzeroSet = std::set<Param>;

std::string nonzero_to_string(const NonzeroSet& set);

/// One basis coefficient equation that must vanish.
struct Equation {
  BasisRef basis;
  ParamPoly poly;
};

/// Result of stripping the rational content and parameter monomial off an
/// equation. zero_candidates are monomial parameters not assumed nonzero
/// (each gives a "param = 0" branch); assumed_divisors were divided out.
struct NormalizedEq {
  Rational content{0};
  Monomial monomial;
  ParamPoly residual;
  std::vector<Param> zero_candidates;
  std::vector<Param> assumed_divisors;
};

NormalizedEq normalize_equation(const ParamPoly& poly, const NonzeroSet& nonzero);

/// Definite even form: every monomial has all-even exponents and all
/// coefficients share one sign, so over the reals the polynomial vanishes
/// only when all its variables do (never, if a constant term is present).
struct DefiniteForm {
  bool definite = false;
  bool has_constant = false;
  int sign = 0;
};
DefiniteForm definite_even_form(const ParamPoly& p);

/// True when the assumptions force p != 0 pointwise: a nonzero constant, a
/// monomial of assumed-nonzero parameters, a definite form with a constant
/// term, or a definite form containing an assumed-nonzero variable.
bool certified_nonzero(const ParamPoly& p, const NonzeroSet& nonzero);

/// How one equation can vanish (after normalization).
struct EquationAnalysis {
  enum class Kind {
    NeverZero,     // cannot vanish under the assumptions
    AllVarsZero,   // definite form: vanishes iff all vars_to_zero vanish
    Roots,         // univariate in `param`: p = root (or p^2 = root if squared)
    LinearSolve,   // linear in `param` (or param^2): p = num/den
    Stuck,
  };
  Kind kind = Kind::Stuck;
  std::vector<Param> vars_to_zero;
  Param param = Param::h;
  bool squared = false;
  std::vector<Rational> roots;
  ParamPoly num, den;
};

EquationAnalysis analyze_residual(const ParamPoly& residual, const NonzeroSet& nonzero,
                                  const std::set<Param>& bound);

/// Value bound to a parameter by the solver.
struct BindingValue {
  enum class Kind { Value, Ratio, SquareRatio };
  Kind kind = Kind::Value;
  Rational value{0};
  ParamPoly num, den;  // Ratio: p = num/den; SquareRatio: p^2 = num/den

  std::string render(Param p) const;
};
using BindingMap = std::map<Param, BindingValue>;

ParamPoly apply_bindings(const ParamPoly& poly, const BindingMap& bindings);
SymExpr apply_bindings(const SymExpr& expr, const BindingMap& bindings);

/// Contradiction certificate: one equation that cannot vanish under the
/// recorded nonzero assumptions, reached along `path` of prior bindings.
struct ContradictionCertificate {
  BasisRef basis;
  ParamPoly raw;                  // the equation as it stood in the branch
  Rational content{0};            // positive content divided out
  Monomial monomial;              // parameter monomial divided out
  ParamPoly residual;             // certified-nonzero remainder
  enum class Kind { Monomial, Positivity } kind = Kind::Monomial;
  std::vector<Param> assumptions; // nonzero assumptions the certificate uses
  std::string path;

  /// Exact re-check: content * monomial * residual == raw, and the residual
  /// is a nonzero rational (Monomial) or a definite even form (Positivity).
  bool verify(const NonzeroSet& nonzero) const;
};

struct SolutionFamily {
  BindingMap bindings;
  std::vector<std::string> residual_conditions;  // e.g. "a0 != 0"
  std::string surface_id;
  std::string path;
};

struct SolveOutcome {
  std::vector<ContradictionCertificate> certificates;
  std::vector<SolutionFamily> families;
  std::vector<std::string> degenerate_rejections;  // W vanished identically
  std::vector<std::string> unresolved;             // raw stuck systems
};

/// Restricted factor-search solver for the coefficient systems of the
/// classification proofs: content/monomial stripping with zero-branching,
/// definite-form certificates, rational roots of univariate factors,
/// linear solves with certified-nonzero pivots, and even-power reduction.
/// Every candidate family is verified by exact substitution into the source
/// condition and checked against degeneracy of W.
class FactorSolver {
 public:
  FactorSolver(NonzeroSet nonzero, SymExpr condition, SymExpr metric_w)
      : nonzero_(std::move(nonzero)),
        condition_(std::move(condition)),
        metric_w_(std::move(metric_w)) {}

  SolveOutcome run();

 private:
  void solve(const BindingMap& bindings, const std::string& path, int depth,
             SolveOutcome& out);
  void accept_family(const BindingMap& bindings, const std::string& path,
                     SolveOutcome& out);
  std::vector<std::string> degeneracy_conditions(const SymExpr& w_sub, int depth);

  NonzeroSet nonzero_;
  SymExpr condition_;
  SymExpr metric_w_;
};

}  // namespace helisurf
