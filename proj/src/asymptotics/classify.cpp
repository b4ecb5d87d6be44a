#include "rootlog/asymptotics.hpp"
#include "rootlog/error.hpp"

namespace rootlog {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LogConcave: return "AsymptoticallyLogConcave";
    case Verdict::RatioLogConvex: return "AsymptoticallyRatioLogConvex";
    case Verdict::Both: return "Both";
    case Verdict::Indeterminate: return "Indeterminate";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::optional<DominantTerm> leading_term(const PSeries& s) {
  int v = s.valuation();
  if (v > s.order()) return std::nullopt;
  return DominantTerm{v, s.coeff(v)};
}

AsymptoticClass classify(const AsymptoticForm& form, const Rational& alpha, Variant variant) {
  const int need = variant == Variant::LogConcave ? 2 : 3;
  if (form.M <= need * form.rho)
    throw Error("expansion too short: M/rho = " + std::to_string(form.M) + "/" + std::to_string(form.rho) +
                " must exceed " + std::to_string(need));
  AsymptoticForm f = form;
  f.r = form.r - FieldElem(alpha);

  AsymptoticClass out;
  out.dominant = leading_term(delta_expansion(f, variant, f.M + f.rho));
  const Verdict holds = variant == Variant::LogConcave ? Verdict::LogConcave : Verdict::RatioLogConvex;

  if (sgn(f.mu0) > 0) {
    out.verdict = holds;
    out.case_used = 1;
    out.note = "mu0 > 0";
    return out;
  }
  if (sgn(f.mu0) < 0) {
    out.verdict = Verdict::NotApplicable;
    out.note = "mu0 < 0: the dominant difference term is positive";
    return out;
  }
  for (int j = static_cast<int>(f.mu.size()); j >= 1; --j) {
    const FieldElem& mj = f.mu[static_cast<std::size_t>(j - 1)];
    if (is_zero(mj)) continue;
    out.case_used = mj.sign() < 0 ? 2 : 0;
    out.verdict = mj.sign() < 0 ? holds : Verdict::NotApplicable;
    out.note = "mu" + std::to_string(j) + (mj.sign() < 0 ? " < 0" : " > 0: the dominant difference term is positive");
    return out;
  }
  int rs = f.r.sign();
  if (rs < 0) {
    out.verdict = holds;
    out.case_used = 3;
    out.note = "mu0 = 0 and r - alpha < 0";
  } else if (rs == 0) {
    out.verdict = Verdict::Indeterminate;
    out.note = "mu0 = 0 and r - alpha = 0: the decision depends on the constant factor";
  } else {
    out.verdict = Verdict::NotApplicable;
    out.note = "r - alpha > 0: the dominant difference term is positive";
  }
  return out;
}

AsymptoticClass classify(const AsymptoticForm& form, const Rational& alpha) {
  AsymptoticClass lc = classify(form, alpha, Variant::LogConcave);
  AsymptoticClass rc = classify(form, alpha, Variant::RatioLogConvex);
  const bool a = lc.verdict == Verdict::LogConcave, b = rc.verdict == Verdict::RatioLogConvex;
  if (a && b) {
    lc.verdict = Verdict::Both;
    return lc;
  }
  if (b) return rc;
  return lc;
}

}  // namespace rootlog
