#include "rootlog/polynomial.hpp"

namespace rootlog {

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

Poly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& v : c) q.emplace_back(v);
  return Poly(std::move(q));
}

Poly primitive_part(const Poly& p) { return from_integer_coeffs(primitive_integer_coeffs(p)); }

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly::constant(1);
  Poly g = gcd(p, p.derivative());
  return primitive_part(exact_div(p, g));
}

std::vector<Poly> square_free_decomposition(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a);
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

Poly parse_poly_coeffs(const std::vector<std::string>& constant_first) {
  std::vector<Rational> c;
  c.reserve(constant_first.size());
  for (const auto& s : constant_first) c.push_back(parse_rational(s));
  return Poly(std::move(c));
}

}  // namespace rootlog
