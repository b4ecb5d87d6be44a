#include "rootlog/resultant.hpp"

namespace rootlog {

Rational resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  Poly a = a0, b = b0;
  Rational res = 1;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return res * pow(b.lc(), da);
    if (da == 0) return res * pow(a.lc(), db);
    Poly r = divrem(a, b).second;
    if (r.is_zero()) return 0;
    const int dr = r.degree();
    // Res(a,b) = (-1)^(da db) Res(b,a) and Res(b,a) = lc(b)^(da-dr) Res(b, a mod b).
    if ((da * db) % 2 == 1) res = -res;
    res *= pow(b.lc(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Poly{Rational(-xs[k]), Rational(1)} + Poly::constant(dd[k]);
  }
  return result;
}

Poly interpolate_from(int max_degree, const std::function<Rational(const Rational&)>& value_at) {
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= max_degree; ++i) {
    xs.emplace_back(i);
    ys.push_back(value_at(xs.back()));
  }
  return interpolate(xs, ys);
}

Poly sum_resultant(const Poly& p, const Poly& q) {
  // Res_y(p(y), q(x - y)).
  return interpolate_from(p.degree() * q.degree(), [&](const Rational& x) {
    Poly shifted = q.compose(Poly{x, Rational(-1)});
    return resultant(p, shifted);
  });
}

Poly product_resultant(const Poly& p, const Poly& q) {
  // Res_y(p(y), y^deg(q) q(x / y)).
  if (is_zero(q.coeff(0))) throw std::domain_error("product resultant needs q(0) != 0");
  const int dq = q.degree();
  return interpolate_from(p.degree() * dq, [&](const Rational& x) {
    std::vector<Rational> c(static_cast<std::size_t>(dq) + 1, Rational(0));
    Rational xp = 1;
    for (int k = 0; k <= dq; ++k) {
      c[static_cast<std::size_t>(dq - k)] = q.coeff(k) * xp;
      xp *= x;
    }
    return resultant(p, Poly(std::move(c)));
  });
}

}  // namespace rootlog
