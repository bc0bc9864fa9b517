#include "helisurf/rational.hpp"

#include <cctype>

namespace helisurf {

Rational Rational::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("Rational: malformed fraction '" + s + "'");
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0)
      throw std::invalid_argument("Rational: malformed fraction '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("Rational: malformed decimal '" + s + "'");
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        throw std::invalid_argument("Rational: malformed decimal '" + s + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: malformed number '" + s + "'");
  return Rational(std::move(q));
}

Rational Rational::pow(unsigned e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
  return Rational(mpq_class(num, den));
}

bool Rational::sqrt_exact(Rational* out) const {
  if (sign() < 0) return false;
  if (is_zero()) {
    *out = Rational(0);
    return true;
  }
  if (!mpz_perfect_square_p(v_.get_num().get_mpz_t())) return false;
  if (!mpz_perfect_square_p(v_.get_den().get_mpz_t())) return false;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), v_.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v_.get_den().get_mpz_t());
  *out = Rational(mpq_class(num, den));
  return true;
}

}  // namespace helisurf
