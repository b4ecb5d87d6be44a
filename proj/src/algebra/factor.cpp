#include "rootlog/factor.hpp"

#include <algorithm>

#include "rootlog/resultant.hpp"
#include "rootlog/roots.hpp"

namespace rootlog {

namespace {

constexpr long kKroneckerCap = 200000;

std::vector<Poly> split_rational_roots(Poly& p) {
  std::vector<Poly> linear;
  if (p.degree() < 1) return linear;
  std::vector<Integer> ic = primitive_integer_coeffs(p);
  Integer lead = abs(ic.back());
  RootIsolation iso = isolate_real_roots(p);
  Rational width = Rational(1, 2) / (Rational(lead) * lead);
  for (auto& r : iso.roots) {
    Rational cand;
    if (r.exact()) {
      cand = r.lo;
    } else {
      refine_root(iso.squarefree, r, width);
      cand = r.exact() ? r.lo : simplest_rational_between(r.lo, r.hi);
    }
    if (!r.exact() && lead % cand.get_den() != 0) continue;
    if (!is_zero(p.eval<Rational>(cand))) continue;
    Poly f = primitive_part(Poly{Rational(-cand), Rational(1)});
    linear.push_back(f);
    p = exact_div(p, f);
  }
  return linear;
}

std::vector<Integer> positive_divisors(Integer n, bool& complete) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  complete = true;
  for (unsigned long d = 2; d < 100000 && Integer(d) * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) primes.emplace_back(Integer(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 && n >= Integer(100000) * 100000) complete = false;
    primes.emplace_back(n, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto& [prime, e] : primes) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

bool integral(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

// A factor of degree k of the primitive integer polynomial p, if one exists
// within the search cap.
std::optional<Poly> kronecker_factor(const Poly& p, int k, long& budget) {
  std::vector<std::pair<Integer, long>> pts;
  for (long x = -12; x <= 12; ++x) {
    Rational v = p.eval<Rational>(Rational(x));
    if (is_zero(v)) return primitive_part(Poly{Rational(-x), Rational(1)});
    pts.emplace_back(abs(v.get_num()), x);
  }
  std::sort(pts.begin(), pts.end());
  pts.resize(static_cast<std::size_t>(k) + 1);
  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> choices;
  for (const auto& [value, x] : pts) {
    bool complete = true;
    auto divs = positive_divisors(value, complete);
    if (!complete) return std::nullopt;
    xs.emplace_back(x);
    std::vector<Integer> signed_divs;
    for (const auto& d : divs) {
      signed_divs.push_back(d);
      if (!choices.empty()) signed_divs.push_back(-d);
    }
    choices.push_back(std::move(signed_divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    if (--budget < 0) return std::nullopt;
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < idx.size(); ++i) ys.emplace_back(choices[i][idx[i]]);
    Poly f = interpolate(xs, ys);
    if (f.degree() == k && integral(f)) {
      auto [q, r] = divrem(p, f);
      if (r.is_zero()) return primitive_part(f);
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) return std::nullopt;
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& p0) {
  std::vector<Poly> out;
  if (p0.degree() < 1) return out;
  Poly p = primitive_part(p0);
  out = split_rational_roots(p);
  std::vector<Poly> pending;
  if (p.degree() >= 1) pending.push_back(primitive_part(p));
  long budget = kKroneckerCap;
  while (!pending.empty()) {
    Poly f = pending.back();
    pending.pop_back();
    bool split = false;
    for (int k = 2; 2 * k <= f.degree() && !split; ++k) {
      auto g = kronecker_factor(f, k, budget);
      if (g) {
        pending.push_back(*g);
        pending.push_back(primitive_part(exact_div(f, *g)));
        split = true;
      }
    }
    if (!split) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return out;
}

std::vector<std::pair<Poly, int>> factor_rational(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  auto yun = square_free_decomposition(p);
  for (std::size_t k = 0; k < yun.size(); ++k)
    for (auto& f : factor_squarefree(yun[k])) out.emplace_back(std::move(f), static_cast<int>(k) + 1);
  return out;
}

}  // namespace rootlog
