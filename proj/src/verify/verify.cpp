#include "rootlog/verify.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "rootlog/error.hpp"

namespace rootlog {

namespace {

struct Factor {
  long index;
  Integer exponent;  // positive factors sit on the left of "<= 1"
};

std::vector<Factor> logconcave_window(long m) {
  return {{m, Integer((m + 1) * (m + 2))}, {m + 1, Integer(-2 * m * (m + 2))}, {m + 2, Integer(m * (m + 1))}};
}

std::vector<Factor> ratio_logconvex_window(long m) {
  Integer M(m);
  return {{m, (M + 1) * (M + 2) * (M + 3)},
          {m + 1, -3 * M * (M + 2) * (M + 3)},
          {m + 2, 3 * M * (M + 1) * (M + 3)},
          {m + 3, -M * (M + 1) * (M + 2)}};
}

// b_k^q = a_k^q / k^p for alpha = p/q
class ScaledTerms {
 public:
  ScaledTerms(const Recurrence& rec, const Rational& alpha) : rec_(rec), p_(to_long(alpha.get_num())), q_(to_long(alpha.get_den())) {}
  Rational operator()(long k) const {
    Rational a = rec_.term(k);
    if (sgn(a) <= 0) throw Error("term a_" + std::to_string(k) + " of " + rec_.name() + " is not positive");
    if (p_ != 0 && k == 0) throw Error("a_0 / 0^alpha is undefined");
    Rational x = pow(a, q_);
    if (p_ != 0) x /= pow(Rational(k), p_);
    return x;
  }

 private:
  const Recurrence& rec_;
  long p_, q_;
};

long bit_size(const Rational& x) {
  return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

long estimate_bits(const std::vector<Factor>& w, const std::vector<Rational>& x) {
  double bits = 0;
  for (std::size_t i = 0; i < w.size(); ++i) bits += std::abs(w[i].exponent.get_d()) * static_cast<double>(bit_size(x[i]));
  return bits > 9e18 ? std::numeric_limits<long>::max() : static_cast<long>(bits);
}

// prod x_i^{e_i} <= 1, exactly
bool exact_product_at_most_one(const std::vector<Factor>& w, const std::vector<Rational>& x) {
  Integer ln = 1, ld = 1, rn = 1, rd = 1, t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Integer& e = w[i].exponent;
    if (sgn(e) == 0) continue;
    unsigned long k = mpz_get_ui(Integer(abs(e)).get_mpz_t());
    Integer& num = sgn(e) > 0 ? ln : rn;
    Integer& den = sgn(e) > 0 ? ld : rd;
    mpz_pow_ui(t.get_mpz_t(), x[i].get_num_mpz_t(), k);
    num *= t;
    mpz_pow_ui(t.get_mpz_t(), x[i].get_den_mpz_t(), k);
    den *= t;
  }
  return ln * rd <= rn * ld;
}

// sign decision of sum e_i log x_i at one precision: 1 pass, 0 fail, -1 undecided
int interval_product_at_most_one(const std::vector<Factor>& w, const std::vector<Rational>& x, long prec) {
  Interval s(Rational(0), prec);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i].exponent) != 0) s += Interval(Rational(w[i].exponent), prec) * log(Interval(x[i], prec));
  if (mpfr_sgn(s.hi()) <= 0) return 1;
  if (mpfr_sgn(s.lo()) > 0) return 0;
  return -1;
}

// Pairwise coprime integers > 1 such that every input is a product of their powers.
std::vector<Integer> coprime_basis(const std::vector<Integer>& inputs) {
  std::vector<Integer> basis, work(inputs);
  while (!work.empty()) {
    Integer v = abs(work.back());
    work.pop_back();
    if (v <= 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Integer g = gcd(v, basis[i]);
      if (g > 1) {
        work.push_back(basis[i] / g);
        work.push_back(g);
        work.push_back(v / g);
        basis.erase(basis.begin() + static_cast<long>(i));
        split = true;
        break;
      }
    }
    if (!split) basis.push_back(v);
  }
  return basis;
}

// sum e_i log x_i == 0 exactly: over a coprime basis the logs are linearly
// independent, so the form vanishes iff every basis exponent cancels.
bool log_form_vanishes(const std::vector<Factor>& w, const std::vector<Rational>& x) {
  std::vector<Integer> parts;
  for (const auto& q : x) {
    parts.emplace_back(q.get_num());
    parts.emplace_back(q.get_den());
  }
  Integer rest;
  for (const auto& b : coprime_basis(parts)) {
    Integer total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), x[i].get_num_mpz_t(), b.get_mpz_t()));
      long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), x[i].get_den_mpz_t(), b.get_mpz_t()));
      total += w[i].exponent * (vn - vd);
    }
    if (total != 0) return false;
  }
  return true;
}

struct Decision {
  int verdict;  // 1 pass, 0 fail, -1 undecided
  long prec;    // 0: decided as an exact multiplicative identity
};

Decision decide_interval(const std::vector<Factor>& w, const std::vector<Rational>& x, const VerifyConfig& cfg) {
  for (long prec = cfg.start_prec; prec <= cfg.max_prec; prec *= 2) {
    int v = interval_product_at_most_one(w, x, prec);
    if (v >= 0) return {v, prec};
    if (prec == cfg.start_prec && log_form_vanishes(w, x)) return {1, 0};
  }
  return {-1, cfg.max_prec};
}

template <class Fn>
void parallel_for(long lo, long hi, unsigned threads, Fn fn) {
  if (hi < lo) return;
  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<long>(t, hi - lo + 1));
  std::atomic<long> next{lo};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    try {
      for (long n = next++; n <= hi; n = next++) fn(n);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next = hi + 1;
    }
  };
  for (unsigned i = 1; i < t; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

RangeReport check_windows(const Recurrence& rec, const Rational& alpha, long lo, long hi, const VerifyConfig& cfg,
                          Inequality kind) {
  if (lo < 1 || lo < rec.start()) throw Error("window range must start at an index >= max(1, start index)");
  const bool lc = kind == Inequality::RootLogConcave;
  auto window = [&](long m) { return lc ? logconcave_window(m) : ratio_logconvex_window(m); };
  RangeReport rep;
  rep.inequality = kind;
  rep.alpha = alpha;
  rep.lo = lo;
  rep.hi = hi;
  if (hi < lo) return rep;
  rec.term(hi + (lc ? 2 : 3));  // fill the cache before fanning out

  ScaledTerms b(rec, alpha);
  const long count = hi - lo + 1;
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(count));
  std::vector<char> exact(static_cast<std::size_t>(count));
  parallel_for(lo, hi, cfg.threads, [&](long m) {
    auto w = window(m);
    std::vector<Rational> x;
    for (const auto& f : w) x.push_back(b(f.index));
    exact[static_cast<std::size_t>(m - lo)] = estimate_bits(w, x) <= cfg.bits_budget;
    values[static_cast<std::size_t>(m - lo)] = std::move(x);
  });
  // the top `overlap` exact indices are also decided by intervals
  std::vector<char> both(static_cast<std::size_t>(count), 0);
  int band = cfg.overlap;
  for (long i = count - 1; i >= 0 && band > 0; --i)
    if (exact[static_cast<std::size_t>(i)]) {
      both[static_cast<std::size_t>(i)] = 1;
      --band;
    }

  rep.checks.resize(static_cast<std::size_t>(count));
  parallel_for(lo, hi, cfg.threads, [&](long m) {
    const std::size_t i = static_cast<std::size_t>(m - lo);
    auto w = window(m);
    const auto& x = values[i];
    IndexCheck c{m, false, ""};
    if (exact[i]) {
      c.pass = exact_product_at_most_one(w, x);
      c.method = "exact";
      if (both[i]) {
        Decision d = decide_interval(w, x, cfg);
        if (d.verdict >= 0 && (d.verdict == 1) != c.pass)
          throw Error("exact and interval verification disagree at index " + std::to_string(m));
        if (d.verdict >= 0) c.method = d.prec ? "exact+interval:" + std::to_string(d.prec) : "exact+identity";
      }
    } else {
      Decision d = decide_interval(w, x, cfg);
      if (d.verdict >= 0) {
        c.pass = d.verdict == 1;
        c.method = d.prec ? "interval:" + std::to_string(d.prec) : "identity";
      } else if (estimate_bits(w, x) <= (1L << 31)) {
        c.pass = exact_product_at_most_one(w, x);
        c.method = "exact";
      } else {
        c.method = "undecided";
      }
    }
    rep.checks[i] = c;
  });
  for (const auto& c : rep.checks)
    if (!c.pass) rep.failures.push_back(c.n);
  return rep;
}

}  // namespace

VerifyConfig default_verify_config() {
  VerifyConfig cfg;
  if (const char* env = std::getenv("ROOTLOG_BITS_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw Error(std::string("ROOTLOG_BITS_BUDGET is not a bit count: ") + env);
    cfg.bits_budget = v;
  }
  return cfg;
}

std::string to_string(Inequality i) {
  switch (i) {
    case Inequality::RootLogConcave: return "RootLogConcave";
    case Inequality::RootRatioLogConvex: return "RootRatioLogConvex";
    case Inequality::RatioInBounds: return "RatioInBounds";
    case Inequality::TermUnderBound: return "TermUnderBound";
  }
  return "?";
}

std::string RangeReport::to_string() const {
  std::map<std::string, long> methods;
  for (const auto& c : checks) methods[c.method.substr(0, c.method.find(':'))]++;
  std::string s = rootlog::to_string(inequality);
  if (sgn(alpha) != 0) s += "(alpha=" + rootlog::to_string(alpha) + ")";
  s += " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]: ";
  if (failures.empty()) {
    s += "no failures";
  } else {
    s += std::to_string(failures.size()) + " failure(s) at";
    for (std::size_t k = 0; k < failures.size() && k < 12; ++k) s += " " + std::to_string(failures[k]);
    if (failures.size() > 12) s += " ...";
  }
  s += " (";
  bool first = true;
  for (const auto& [m, k] : methods) {
    s += (first ? "" : ", ") + m + " " + std::to_string(k);
    first = false;
  }
  return s + ")";
}

RangeReport check_root_logconcave(const Recurrence& rec, const Rational& alpha, long lo, long hi, const VerifyConfig& cfg) {
  return check_windows(rec, alpha, lo, hi, cfg, Inequality::RootLogConcave);
}

RangeReport check_root_ratio_logconvex(const Recurrence& rec, const Rational& alpha, long lo, long hi,
                                       const VerifyConfig& cfg) {
  return check_windows(rec, alpha, lo, hi, cfg, Inequality::RootRatioLogConvex);
}

RangeReport check_ratio_bounds(const Recurrence& rec, const BoundExpr& f, const BoundExpr& g, long lo, long hi) {
  RangeReport rep;
  rep.inequality = Inequality::RatioInBounds;
  rep.lo = lo;
  rep.hi = hi;
  if (lo < rec.start()) throw Error("range starts below the start index");
  for (long n = lo; n <= hi; ++n) {
    Rational a = rec.term(n);
    if (sgn(a) == 0) throw Error("term a_" + std::to_string(n) + " vanishes");
    FieldElem r(rec.term(n + 1) / a);
    bool pass = compare(f.eval(Rational(n)), r) <= 0 && compare(r, g.eval(Rational(n))) <= 0;
    rep.checks.push_back({n, pass, "exact"});
    if (!pass) rep.failures.push_back(n);
  }
  return rep;
}

RangeReport check_term_under_bound(const Recurrence& rec, const TermShape& h, long lo, long hi, const VerifyConfig& cfg) {
  RangeReport rep;
  rep.inequality = Inequality::TermUnderBound;
  rep.lo = lo;
  rep.hi = hi;
  if (lo < std::max(rec.start(), 1L)) throw Error("range starts below max(1, start index)");
  for (long n = lo; n <= hi; ++n) {
    Rational a = rec.term(n);
    IndexCheck c{n, false, "exact"};
    if (sgn(a) <= 0) {
      c.pass = true;  // trivially below a positive bound
    } else if (auto hv = h.exact_value(n)) {
      c.pass = a <= *hv;
    } else {
      c.method = "undecided";
      for (long prec = cfg.start_prec; prec <= cfg.max_prec; prec *= 2) {
        Interval d = log(Interval(a, prec)) - h.log_value(n, prec);
        if (mpfr_sgn(d.hi()) <= 0 || mpfr_sgn(d.lo()) > 0) {
          c.pass = mpfr_sgn(d.hi()) <= 0;
          c.method = "interval:" + std::to_string(prec);
          break;
        }
      }
    }
    rep.checks.push_back(c);
    if (!c.pass) rep.failures.push_back(n);
  }
  return rep;
}

}  // namespace rootlog
