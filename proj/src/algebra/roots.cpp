#include "rootlog/roots.hpp"

#include <algorithm>

namespace rootlog {

namespace {

using IntPoly = std::vector<Integer>;  // constant-first

int sign_variations(const IntPoly& a) {
  int count = 0, last = 0;
  for (const auto& c : a) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void taylor_shift_one(IntPoly& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
}

void remove_content(IntPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Upper bound on the number of roots of P in (0, 1).
int descartes_unit(const IntPoly& p) {
  IntPoly r(p.rbegin(), p.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

// 2^n P(x/2): roots in (0, 1/2) move to (0, 1).
IntPoly half_scale(const IntPoly& p) {
  IntPoly out(p.size());
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(out[i].get_mpz_t(), p[i].get_mpz_t(), n - i);
  return out;
}

// Roots of the square-free integer polynomial q in (0, bound), q(0) != 0.
void isolate_positive(const IntPoly& q, const Integer& bound, std::vector<RootInterval>& out, bool negate) {
  struct Node {
    IntPoly p;
    Rational a;
    Rational w;
  };
  IntPoly start(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) start[i] = q[i] * pow(bound, static_cast<unsigned long>(i));
  remove_content(start);
  std::vector<Node> stack;
  stack.push_back({std::move(start), Rational(0), Rational(bound)});
  auto emit = [&](const Rational& lo, const Rational& hi) {
    if (negate) out.push_back({Rational(-hi), Rational(-lo), 1});
    else out.push_back({lo, hi, 1});
  };
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    int v = descartes_unit(node.p);
    if (v == 0) continue;
    if (v == 1) {
      emit(node.a, node.a + node.w);
      continue;
    }
    Rational half = node.w / 2;
    IntPoly left = half_scale(node.p);
    IntPoly right = left;
    taylor_shift_one(right);
    if (sgn(right.front()) == 0) {
      Rational mid = node.a + half;
      emit(mid, mid);
      right.erase(right.begin());
    }
    remove_content(left);
    remove_content(right);
    stack.push_back({std::move(right), node.a + half, half});
    stack.push_back({std::move(left), node.a, half});
  }
}

Poly scale_positive(const Poly& p) {
  if (p.is_zero()) return p;
  Rational s = abs_of(p.lc());
  return p * (Rational(1) / s);
}

int sign_at(const Poly& p, const Rational& x) { return sgn(p.eval<Rational>(x)); }

}  // namespace

Integer root_magnitude_bound(const Poly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs_of(p.coeff(k) / p.lc()));
  Integer target = ceil_of(m) + 1;
  Integer b = 1;
  while (b < target) b *= 2;
  return b;
}

RootIsolation isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  RootIsolation iso;
  if (p.degree() <= 0) {
    iso.squarefree = Poly::constant(1);
    return iso;
  }
  iso.squarefree = square_free_part(p);
  std::vector<Integer> q = primitive_integer_coeffs(iso.squarefree);
  std::vector<RootInterval> found;
  if (sgn(q.front()) == 0) {
    found.push_back({Rational(0), Rational(0), 1});
    q.erase(q.begin());
  }
  if (q.size() > 1) {
    Integer bound = root_magnitude_bound(from_integer_coeffs(q));
    isolate_positive(q, bound, found, false);
    std::vector<Integer> neg = q;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    isolate_positive(neg, bound, found, true);
  }
  std::sort(found.begin(), found.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });

  // Descartes intervals are open, so an endpoint may be a neighbouring root: pull it inward.
  std::vector<Poly> seq;
  for (auto& r : found) {
    if (r.exact()) continue;
    if (sign_at(iso.squarefree, r.lo) != 0 && sign_at(iso.squarefree, r.hi) != 0) continue;
    if (seq.empty()) seq = sturm_sequence(iso.squarefree);
    Rational eps = (r.hi - r.lo) / 4;
    while (true) {
      Rational lo = sign_at(iso.squarefree, r.lo) == 0 ? r.lo + eps : r.lo;
      Rational hi = sign_at(iso.squarefree, r.hi) == 0 ? r.hi - eps : r.hi;
      if (sign_at(iso.squarefree, lo) != 0 && sign_at(iso.squarefree, hi) != 0 && sturm_count(seq, lo, hi) == 1) {
        r.lo = lo;
        r.hi = hi;
        break;
      }
      eps /= 2;
    }
  }

  // Multiplicities from the Yun factors: each isolated root belongs to exactly one.
  auto factors = square_free_decomposition(p);
  for (auto& r : found) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const Poly& f = factors[k];
      if (f.degree() <= 0) continue;
      bool owns = r.exact() ? sign_at(f, r.lo) == 0 : sign_at(f, r.lo) * sign_at(f, r.hi) < 0;
      if (owns) {
        r.multiplicity = static_cast<int>(k) + 1;
        break;
      }
    }
  }
  iso.roots = std::move(found);
  return iso;
}

void refine_root(const Poly& squarefree, RootInterval& root, const Rational& width) {
  if (root.exact()) return;
  int slo = sign_at(squarefree, root.lo);
  while (root.hi - root.lo > width) {
    Rational mid = (root.lo + root.hi) / 2;
    int sm = sign_at(squarefree, mid);
    if (sm == 0) {
      root.lo = root.hi = mid;
      return;
    }
    if (sm == slo) root.lo = mid;
    else root.hi = mid;
  }
}

std::optional<Integer> max_real_root_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  RootIsolation iso = isolate_real_roots(p);
  if (iso.roots.empty()) return std::nullopt;
  RootInterval top = iso.roots.back();
  const Poly& q = iso.squarefree;
  while (true) {
    if (top.exact()) return floor_of(top.lo) + 1;
    Integer k = floor_of(top.lo);
    if (Rational(k + 1) >= top.hi) return k + 1;
    // The interval straddles the integer k+1: split there.
    Rational split(k + 1);
    int s = sign_at(q, split);
    if (s == 0) return k + 2;
    if (s == sign_at(q, top.lo)) top.lo = split;
    else top.hi = split;
  }
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(scale_positive(p));
  Poly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(scale_positive(d));
  while (true) {
    Poly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(scale_positive(-r));
  }
  return seq;
}

namespace {

int variations_at(const std::vector<Poly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<Poly>& seq, bool positive) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p.lc());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<Poly>& seq, const Rational& a, const Rational& b) {
  return variations_at(seq, a) - variations_at(seq, b);
}

int sturm_count_all(const std::vector<Poly>& seq) {
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer c = ceil_of(lo);
  if (Rational(c) <= hi) return Rational(c);
  Integer fl = floor_of(lo);
  Rational inner = simplest_rational_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace rootlog
