#include "rootlog/recurrence.hpp"

#include "rootlog/error.hpp"
#include "rootlog/roots.hpp"

namespace rootlog {

namespace {

Integer eval_int(const std::vector<Integer>& c, long n) {
  Integer acc = 0, x = n;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Recurrence::Recurrence(std::string name, std::vector<Poly> coeffs, std::vector<Rational> initial, long start)
    : name_(std::move(name)), coeffs_(std::move(coeffs)), initial_(std::move(initial)), start_(start),
      cache_(std::make_shared<Cache>()) {
  if (coeffs_.size() < 2) throw Error("recurrence needs order at least 1");
  const int d = order();
  if (coeffs_.back().is_zero()) throw Error("leading recurrence coefficient is zero");
  if (static_cast<int>(initial_.size()) != d)
    throw Error("recurrence of order " + std::to_string(d) + " needs exactly " + std::to_string(d) +
                " initial values, got " + std::to_string(initial_.size()));
  // p_d(n) != 0 for integers n >= start.
  const Poly& pd = coeffs_.back();
  auto bound = max_real_root_bound(pd);
  if (bound)
    for (Integer n = start_; n < *bound; ++n)
      if (is_zero(pd.eval<Rational>(Rational(n))))
        throw Error("leading coefficient p_d vanishes at n = " + rootlog::to_string(n) + " >= start index");
  Integer den = 1;
  for (const auto& p : coeffs_)
    for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  for (const auto& p : coeffs_) {
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) ic.push_back(Integer(c * den));
    int_coeffs_.push_back(std::move(ic));
  }
  cache_->values = initial_;
}

Recurrence Recurrence::with_alpha_tag(const Rational& alpha) const {
  Recurrence r = *this;
  r.alpha_tag_ = alpha;
  return r;
}

Rational Recurrence::term(long n) const {
  if (n < start_) throw std::out_of_range("term index below the start index");
  const std::size_t idx = static_cast<std::size_t>(n - start_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& v = cache_->values;
  const int d = order();
  while (v.size() <= idx) {
    const long m = start_ + static_cast<long>(v.size()) - d;  // a_{m+d} from a_m .. a_{m+d-1}
    const std::size_t base = v.size() - static_cast<std::size_t>(d);
    Integer lead = eval_int(int_coeffs_[static_cast<std::size_t>(d)], m);
    if (lead == 0) throw Error("leading coefficient vanished during evaluation at n = " + std::to_string(m));
    bool integral = true;
    for (int i = 0; i < d && integral; ++i) integral = v[base + static_cast<std::size_t>(i)].get_den() == 1;
    if (integral) {
      Integer s = 0;
      for (int i = 0; i < d; ++i)
        s += eval_int(int_coeffs_[static_cast<std::size_t>(i)], m) * v[base + static_cast<std::size_t>(i)].get_num();
      s = -s;
      if (mpz_divisible_p(s.get_mpz_t(), lead.get_mpz_t())) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), s.get_mpz_t(), lead.get_mpz_t());
        v.emplace_back(q);
      } else {
        v.emplace_back(s, lead);
        v.back().canonicalize();
      }
      continue;
    }
    Rational s = 0;
    for (int i = 0; i < d; ++i)
      s += Rational(eval_int(int_coeffs_[static_cast<std::size_t>(i)], m)) * v[base + static_cast<std::size_t>(i)];
    v.push_back(-s / Rational(lead));
  }
  return v[idx];
}

std::vector<Rational> Recurrence::terms(long upto) const {
  if (upto < start_ + order() - 1) throw std::out_of_range("term range shorter than the initial values");
  term(upto);
  std::vector<Rational> out;
  std::lock_guard<std::mutex> lock(cache_->mu);
  out.assign(cache_->values.begin(), cache_->values.begin() + (upto - start_ + 1));
  return out;
}

Rational Recurrence::residual(long n) const {
  Rational s = 0;
  for (int i = 0; i <= order(); ++i) s += coeffs_[static_cast<std::size_t>(i)].eval<Rational>(Rational(n)) * term(n + i);
  return s;
}

Rational RatioForm::residual(long n, const std::vector<Rational>& ratios) const {
  if (static_cast<int>(ratios.size()) < order()) throw std::invalid_argument("not enough ratios for the ratio form");
  Rational s = coeffs[0].eval<Rational>(Rational(n));
  Rational prod = 1;
  for (int i = 1; i <= order(); ++i) {
    prod *= ratios[static_cast<std::size_t>(i - 1)];
    s += coeffs[static_cast<std::size_t>(i)].eval<Rational>(Rational(n)) * prod;
  }
  return s;
}

RatFunc RatioForm::closed_form() const {
  if (order() != 1) throw Error("closed-form ratio exists only for order-1 recurrences");
  return RatFunc(-coeffs[0], coeffs[1]);
}

RatioForm ratio_form(const Recurrence& rec) { return RatioForm{rec.coeffs()}; }

Recurrence shift_by_power(const Recurrence& rec, const Rational& alpha) {
  if (sgn(alpha) == 0) return rec;
  if (!is_integer(alpha)) return rec.with_alpha_tag(rec.alpha_tag() + alpha);
  const long a = to_long(alpha.get_num());
  const long start = std::max(rec.start(), 1L);
  const int d = rec.order();
  // a_{n+i} = (n+i)^alpha b_{n+i}; negative alpha is cleared by prod_j (n+j)^{-alpha}.
  std::vector<Poly> coeffs;
  for (int i = 0; i <= d; ++i) {
    Poly p = rec.coeffs()[static_cast<std::size_t>(i)];
    if (a > 0) {
      p *= Poly{Rational(i), Rational(1)}.pow(static_cast<unsigned>(a));
    } else {
      for (int j = 0; j <= d; ++j)
        if (j != i) p *= Poly{Rational(j), Rational(1)}.pow(static_cast<unsigned>(-a));
    }
    coeffs.push_back(std::move(p));
  }
  std::vector<Rational> init;
  for (int k = 0; k < d; ++k) {
    long n = start + k;
    init.push_back(rec.term(n) / pow(Rational(n), a));
  }
  return Recurrence(rec.name(), std::move(coeffs), std::move(init), start).with_alpha_tag(rec.alpha_tag());
}

}  // namespace rootlog
