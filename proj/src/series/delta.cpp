#include "rootlog/error.hpp"
#include "rootlog/form.hpp"

namespace rootlog {

std::string to_string(Variant v) { return v == Variant::LogConcave ? "logconcave" : "ratiologconvex"; }

Variant parse_variant(const std::string& text) {
  if (text == "logconcave") return Variant::LogConcave;
  if (text == "ratiologconvex") return Variant::RatioLogConvex;
  throw std::invalid_argument("unknown kind '" + text + "' (expected logconcave or ratiologconvex)");
}

std::string RatioExpansion::to_string() const {
  std::string out = "r_n ~ " + rootlog::to_string(lead);
  if (sgn(mu0) != 0) out += " * n^(" + rootlog::to_string(mu0) + ")";
  return out + " * (" + tail.to_string() + ")";
}

LogConst AsymptoticForm::mu_rho() const { return LogConst::log_of(lead) + LogConst(FieldElem(-mu0)); }

std::string AsymptoticForm::to_string() const {
  std::string out = "mu0=" + rootlog::to_string(mu0) + ", rho=" + std::to_string(rho);
  for (std::size_t j = 0; j < mu.size(); ++j) out += ", mu" + std::to_string(j + 1) + "=" + rootlog::to_string(mu[j]);
  if (lambda_algebraic()) out += ", lambda=" + rootlog::to_string(lead);
  else out += ", mu" + std::to_string(rho) + "=" + mu_rho().to_string();
  out += ", r=" + rootlog::to_string(r);
  for (std::size_t s = 0; s < b.size(); ++s) out += ", b" + std::to_string(s + 1) + "=" + rootlog::to_string(b[s]);
  return out;
}

PSeries root_log_series(const AsymptoticForm& form) {
  const int rho = form.rho;
  PSeries F(rho, form.M + rho);
  F.set(0, FieldElem(0), FieldElem(form.mu0));
  for (int j = 1; j < rho; ++j) F.set(rho - j, form.mu.at(static_cast<std::size_t>(j - 1)));
  F.set(rho, FieldElem(0), form.r);
  for (int k = 1; k <= form.M; ++k) F.set(k + rho, form.log_b.at(static_cast<std::size_t>(k - 1)));
  return F;
}

PSeries delta_expansion(const AsymptoticForm& form, Variant variant, int K) {
  if (K < 1) throw Error("delta expansion needs a positive order");
  PSeries F = root_log_series(form);
  const FieldElem w(0);
  PSeries d = variant == Variant::LogConcave
                  ? F.shift(1, w) + F.shift(-1, w) - F * FieldElem(2)
                  : F.shift(-1, w) + F.shift(1, w) * FieldElem(3) - F * FieldElem(3) - F.shift(2, w);
  return d.truncate(std::min(K, F.order()));
}

}  // namespace rootlog
