#include "rootlog/rational.hpp"

#include <climits>
#include <stdexcept>

namespace rootlog {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  Integer n_val(num), d_val(den);
  if (d_val == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n_val, d_val);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + z.get_str());
  return z.get_si();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

}  // namespace rootlog
