#include "helisurf/parampoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace helisurf {

namespace {
constexpr std::array<const char*, kParamCount> kNames = {
    "h", "H", "K", "r", "lambda", "mu", "c", "theta", "b",
    "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9"};
}

const char* param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (name == kNames[i]) return static_cast<Param>(i);
  return std::nullopt;
}

Param poly_coeff_param(int n) {
  if (n < 0 || n > kMaxPolyDegree)
    throw std::invalid_argument("poly_coeff_param: index out of range");
  return static_cast<Param>(static_cast<int>(Param::a0) + n);
}

int poly_coeff_index(Param p) {
  int i = static_cast<int>(p) - static_cast<int>(Param::a0);
  return (i >= 0 && i <= kMaxPolyDegree) ? i : -1;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::all_even() const {
  for (auto e : exp)
    if (e % 2 != 0) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    int e = exp[i] + o.exp[i];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    out.exp[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial out;
  for (std::size_t i = 0; i < kParamCount; ++i) out.exp[i] = std::min(exp[i], o.exp[i]);
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (o.exp[i] > exp[i]) throw std::invalid_argument("Monomial::divide: not divisible");
    out.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[i];
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out;
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(Param p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("ParamPoly::variable: negative exponent");
  ParamPoly out;
  if (exponent == 0) return ParamPoly(Rational(1));
  Monomial m;
  m.exp[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(exponent);
  out.terms_.emplace(m, Rational(1));
  return out;
}

ParamPoly ParamPoly::from_term(const Monomial& m, const Rational& c) {
  ParamPoly out;
  if (!c.is_zero()) out.terms_.emplace(m, c);
  return out;
}

ParamPoly pvar(Param p, int exponent) { return ParamPoly::variable(p, exponent); }

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("ParamPoly: not a constant");
  return constant_term();
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly out(Rational(1));
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

int ParamPoly::degree_in(Param p) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(p));
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Param> ParamPoly::vars() const {
  std::set<Param> out;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < kParamCount; ++i)
      if (m.exp[i] > 0) out.insert(static_cast<Param>(i));
  return out;
}

bool ParamPoly::only_even_powers_of(Param p) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(p) % 2 != 0) return false;
  return true;
}

Rational ParamPoly::content() const {
  Rational g(0);
  for (const auto& [m, c] : terms_) g = Rational::gcd(g, c);
  return g;
}

Monomial ParamPoly::monomial_gcd() const {
  if (terms_.empty()) return Monomial{};
  auto it = terms_.begin();
  Monomial g = it->first;
  for (++it; it != terms_.end(); ++it) g = g.gcd(it->first);
  return g;
}

ParamPoly ParamPoly::divide_by_monomial(const Monomial& m) const {
  ParamPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm.divide(m), c);
  return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return ParamPoly();
  // Long division by leading term in the map's (reverse) order.
  auto lead = std::prev(d.terms_.end());
  const Monomial& lm = lead->first;
  const Rational& lc = lead->second;
  ParamPoly rem = *this;
  ParamPoly quot;
  while (!rem.is_zero()) {
    auto rl = std::prev(rem.terms_.end());
    if (!lm.divides(rl->first)) return std::nullopt;
    Monomial qm = rl->first.divide(lm);
    Rational qc = rl->second / lc;
    ParamPoly piece;
    piece.terms_.emplace(qm, qc);
    quot += piece;
    rem -= piece * d;
  }
  return quot;
}

ParamPoly ParamPoly::substitute(Param p, const Rational& value) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(p);
    Monomial mm = m;
    mm.exp[static_cast<std::size_t>(p)] = 0;
    out.add_term(mm, c * value.pow(static_cast<unsigned>(e)));
  }
  return out;
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& value) const {
  auto by_power = collect(p);
  // Horner in the substituted value.
  ParamPoly out;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) out = out * value + *it;
  return out;
}

ParamPoly ParamPoly::substitute_rational(Param p, const ParamPoly& num,
                                         const ParamPoly& den) const {
  auto by_power = collect(p);
  if (by_power.size() <= 1) return *this;
  unsigned top = static_cast<unsigned>(by_power.size() - 1);
  ParamPoly out;
  for (unsigned d = 0; d <= top; ++d) {
    if (by_power[d].is_zero()) continue;
    out += by_power[d] * num.pow(d) * den.pow(top - d);
  }
  return out;
}

ParamPoly ParamPoly::substitute_square_rational(Param p, const ParamPoly& num,
                                                const ParamPoly& den) const {
  // Rewrite p^e = p^(e mod 2) * (p^2)^(e div 2), then clear denominators.
  unsigned top = 0;
  for (const auto& [m, c] : terms_)
    top = std::max(top, static_cast<unsigned>(m.exponent(p) / 2));
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned half = static_cast<unsigned>(m.exponent(p) / 2);
    Monomial mm = m;
    mm.exp[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(m.exponent(p) % 2);
    ParamPoly piece;
    piece.terms_.emplace(mm, c);
    out += piece * num.pow(half) * den.pow(top - half);
  }
  return out;
}

Rational ParamPoly::eval(const ParamBindings& values) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (m.exp[i] == 0) continue;
      auto it = values.find(static_cast<Param>(i));
      if (it == values.end())
        throw std::invalid_argument(std::string("ParamPoly::eval: unbound parameter ") +
                                    kNames[i]);
      t *= it->second.pow(m.exp[i]);
    }
    acc += t;
  }
  return acc;
}

double ParamPoly::eval_double(const ParamBindingsD& values) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (m.exp[i] == 0) continue;
      auto it = values.find(static_cast<Param>(i));
      if (it == values.end())
        throw std::invalid_argument(std::string("ParamPoly::eval: unbound parameter ") +
                                    kNames[i]);
      t *= std::pow(it->second, m.exp[i]);
    }
    acc += t;
  }
  return acc;
}

std::vector<ParamPoly> ParamPoly::collect(Param p) const {
  std::vector<ParamPoly> out(static_cast<std::size_t>(degree_in(p)) + 1);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(p);
    Monomial mm = m;
    mm.exp[static_cast<std::size_t>(p)] = 0;
    ParamPoly piece;
    piece.terms_.emplace(mm, c);
    out[static_cast<std::size_t>(e)] += piece;
  }
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Display order: total degree descending, then the map order.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.degree() > b.first.degree();
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string ms = m.to_string();
    if (ms.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += ms;
    } else {
      out += mag.to_string() + "*" + ms;
    }
  }
  return out;
}

}  // namespace helisurf
