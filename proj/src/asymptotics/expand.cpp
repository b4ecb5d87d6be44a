#include <algorithm>
#include <climits>

#include "rootlog/asymptotics.hpp"
#include "rootlog/error.hpp"
#include "rootlog/resultant.hpp"
#include "rootlog/roots.hpp"

namespace rootlog {

namespace {

struct Edge {
  int i0, i1;
  Rational mu0;  // minus the slope
  long height;   // deg p_i + i*mu0 along the edge
};

// Upper convex hull of the points (i, deg p_i), left to right.
std::vector<Edge> upper_hull(const std::vector<Poly>& p) {
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) pts.emplace_back(i, p[static_cast<std::size_t>(i)].degree());
  std::vector<std::pair<int, int>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b unless it lies strictly above segment a-q
      long cross = static_cast<long>(b.first - a.first) * (q.second - a.second) -
                   static_cast<long>(b.second - a.second) * (q.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Rational mu0(-(hull[k + 1].second - hull[k].second), hull[k + 1].first - hull[k].first);
    mu0.canonicalize();
    edges.push_back({hull[k].first, hull[k + 1].first, mu0, 0});
  }
  return edges;
}

Poly characteristic(const std::vector<Poly>& p, const Edge& e, long mu0) {
  long height = p[static_cast<std::size_t>(e.i0)].degree() + e.i0 * mu0;
  std::vector<Rational> c(static_cast<std::size_t>(e.i1 - e.i0) + 1, Rational(0));
  for (int i = e.i0; i <= e.i1; ++i) {
    const Poly& pi = p[static_cast<std::size_t>(i)];
    if (!pi.is_zero() && pi.degree() + i * mu0 == height) c[static_cast<std::size_t>(i - e.i0)] = pi.lc();
  }
  return Poly(std::move(c));
}

// c^i p_i(n) n^{i mu0 - E} as series in 1/n.
std::vector<PSeries> scaled_coeffs(const std::vector<Poly>& p, const FieldElem& c, long mu0, int K) {
  long E = LONG_MIN;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) E = std::max(E, p[static_cast<std::size_t>(i)].degree() + i * mu0);
  std::vector<PSeries> out;
  FieldElem ci(1);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    PSeries s(1, K);
    const Poly& pi = p[static_cast<std::size_t>(i)];
    for (int k = 0; k <= K; ++k) {
      long idx = E - i * mu0 - k;
      if (idx >= 0 && idx <= pi.degree()) s.set(k, ci * FieldElem(pi.coeff(static_cast<int>(idx))));
    }
    out.push_back(std::move(s));
    ci *= c;
  }
  return out;
}

PSeries residual_of(const std::vector<PSeries>& C, const PSeries& T, long mu0) {
  const FieldElem w{Rational(mu0)};
  PSeries res = C[0];
  PSeries prod = PSeries::constant(FieldElem(1), T.order());
  for (std::size_t i = 1; i < C.size(); ++i) {
    prod = prod * T.shift(static_cast<long>(i) - 1, w);
    res += C[i] * prod;
  }
  return res;
}

RatioExpansion solve_branch(const std::vector<Poly>& p, const FieldElem& c, long mu0, const Poly& chi, int K) {
  auto C = scaled_coeffs(p, c, mu0, K);
  FieldElem sigma(0);
  for (std::size_t i = 1; i < C.size(); ++i) sigma += FieldElem(static_cast<long>(i)) * C[i].plain(0);
  if (is_zero(sigma)) throw NotApplicable("characteristic root is not simple; log-bearing branch");
  PSeries T = PSeries::constant(FieldElem(1), K);
  if (!is_zero(residual_of(C, T.truncate(0), mu0).plain(0))) throw Error("characteristic root does not annihilate the edge");
  for (int s = 1; s <= K; ++s) {
    PSeries res = residual_of(C, T.truncate(s), mu0);
    T.set(s, -res.plain(s) / sigma);
  }
  RatioExpansion rx;
  rx.mu0 = Rational(mu0);
  rx.rho = 1;
  rx.lead = c;
  rx.tail = T;
  rx.char_poly = chi;
  return rx;
}

struct PositiveRoot {
  FieldElem value;
  Rational lo, hi;
  int multiplicity;
};

std::vector<PositiveRoot> positive_roots(const Poly& chi) {
  std::vector<PositiveRoot> out;
  auto iso = isolate_real_roots(chi);
  for (auto it = iso.roots.rbegin(); it != iso.roots.rend(); ++it) {
    if (it->hi <= 0) continue;
    const RootInterval& r = *it;
    if (sgn(r.lo) < 0 || (r.exact() && sgn(r.lo) == 0)) continue;
    Rational rat;
    FieldPtr K = r.exact() ? nullptr : make_field(iso.squarefree, r.lo, r.hi, &rat);
    FieldElem v = r.exact() ? FieldElem(r.lo) : (K ? FieldElem::theta(K) : FieldElem(rat));
    out.push_back({v, r.lo, r.hi, it->multiplicity});
  }
  return out;
}

// Every other root of chi (complex ones included) is strictly smaller in modulus than c.
bool strictly_dominant(const Poly& chi, const FieldElem& c) {
  if (chi.degree() <= 1) return true;
  Poly R = product_resultant(chi, chi);
  auto iso = isolate_real_roots(R);
  if (iso.roots.empty()) return false;
  RootInterval top = iso.roots.back();
  if (top.multiplicity != 1) return false;
  FieldElem c2 = c * c;
  if (top.exact()) return c2 == FieldElem(top.lo);
  return compare(c2, FieldElem(top.lo)) > 0 && compare(c2, FieldElem(top.hi)) < 0 &&
         is_zero(to_field_poly(iso.squarefree).eval<FieldElem>(c2));
}

}  // namespace

std::vector<RatioExpansion> expand_ratio(const Recurrence& rec, int K) {
  if (K < 1) throw Error("expansion order must be positive");
  const auto& p = rec.coeffs();
  auto edges = upper_hull(p);
  if (edges.empty()) throw Error("recurrence has a single nonzero coefficient");
  std::vector<RatioExpansion> out;
  for (auto e = edges.rbegin(); e != edges.rend(); ++e) {
    const bool dominant = e == edges.rbegin();
    if (!is_integer(e->mu0)) {
      if (dominant)
        throw NotApplicable("growth exponent mu0 = " + to_string(e->mu0) +
                            " is fractional; ramified expansions are not supported");
      continue;
    }
    const long mu0 = to_long(e->mu0.get_num());
    Poly chi = characteristic(p, *e, mu0);
    auto roots = positive_roots(chi);
    if (dominant) {
      if (roots.empty()) throw NotApplicable("no positive characteristic root; the sequence oscillates");
      const auto& top = roots.front();
      if (top.multiplicity != 1) throw NotApplicable("dominant characteristic root is not simple");
      if (!strictly_dominant(chi, top.value))
        throw NotApplicable("characteristic polynomial " + chi.to_string("x") +
                            " has a root of modulus at least the positive root; oscillatory case");
    }
    for (const auto& r : roots) {
      if (r.multiplicity != 1) continue;
      try {
        out.push_back(solve_branch(p, r.value, mu0, chi, K));
      } catch (const NotApplicable&) {
        if (dominant && out.empty()) throw;
      }
    }
  }
  return out;
}

PSeries ratio_residual(const Recurrence& rec, const RatioExpansion& rx) {
  if (rx.rho != 1 || !is_integer(rx.mu0)) throw Error("residual needs an unramified expansion");
  auto C = scaled_coeffs(rec.coeffs(), rx.lead, to_long(rx.mu0.get_num()), rx.order());
  return residual_of(C, rx.tail, to_long(rx.mu0.get_num()));
}

AsymptoticForm to_asymptotic_form(const RatioExpansion& rx) {
  if (rx.rho != 1) throw Error("only rho = 1 expansions are supported");
  const int K = rx.order();
  if (K < 2) throw Error("expansion order too small to recover the term asymptotics");
  PSeries L = log(rx.tail);
  // l = log(1 + 1/n), phi = (n+1) log(1 + 1/n) - 1
  PSeries l(1, K + 1);
  for (int k = 1; k <= K + 1; ++k) l.set(k, FieldElem(Rational(k % 2 == 1 ? 1 : -1, k)));
  PSeries phi(1, K);
  for (int s = 1; s <= K; ++s) phi.set(s, l.plain(s + 1) + l.plain(s));
  l = l.truncate(K);

  FieldElem mu0(rx.mu0);
  FieldElem r = L.plain(1) - mu0 / FieldElem(2);
  PSeries base = phi * mu0 + l * r;
  PSeries logB(1, K);
  for (int k = 1; k < K; ++k) {
    PSeries model = base + logB.shift(1, FieldElem(0)) - logB;
    logB.set(k, (model.plain(k + 1) - L.plain(k + 1)) / FieldElem(k));
  }
  PSeries model = base + logB.shift(1, FieldElem(0)) - logB;
  for (int s = 1; s <= K; ++s)
    if (!(model.plain(s) == L.plain(s))) throw Error("inconsistent summation of the ratio expansion at order " + std::to_string(s));

  logB = logB.truncate(K - 1);
  PSeries B = exp(logB);
  AsymptoticForm f;
  f.mu0 = rx.mu0;
  f.rho = 1;
  f.lead = rx.lead;
  f.r = r;
  f.M = K - 1;
  for (int s = 1; s <= f.M; ++s) {
    f.b.push_back(B.plain(s));
    f.log_b.push_back(logB.plain(s));
  }
  return f;
}

}  // namespace rootlog
