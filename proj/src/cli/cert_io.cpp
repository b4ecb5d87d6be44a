#include "rootlog/cert_io.hpp"

#include <sstream>

#include "json.hpp"
#include "rootlog/error.hpp"
#include "rootlog/roots.hpp"
#include "rootlog/sign.hpp"

namespace rootlog {

using nlohmann::json;

namespace {

json int_json(const Integer& z) { return z.fits_slong_p() ? json(z.get_si()) : json(to_string(z)); }

Integer int_of(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error("expected an integer, got " + j.dump());
}

Rational rat_of(const json& j) {
  if (!j.is_string()) throw Error("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(e.what());
  }
}

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Poly poly_of(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rat_of(x));
  return Poly(std::move(c));
}

// Number fields are written once, as a minimal polynomial plus the index of
// the real root (ascending), and referenced by position.
class Writer {
 public:
  json fields = json::array();

  json elem(const FieldElem& x) {
    if (x.is_rational()) return to_string(x.to_rational());
    return json{{"field", field_index(x.field())}, {"repr", poly_json(x.repr())}, {"text", to_string(x)}};
  }
  json fpoly(const FPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(elem(c));
    return a;
  }
  json ratfunc(const FRatFunc& r) { return json{{"num", fpoly(r.num())}, {"den", fpoly(r.den())}, {"text", r.to_string()}}; }

 private:
  std::vector<FieldPtr> known_;

  std::size_t field_index(const FieldPtr& K) {
    for (std::size_t i = 0; i < known_.size(); ++i)
      if (known_[i] == K || known_[i]->same_as(*K)) return i;
    auto iso = isolate_real_roots(K->minpoly());
    for (std::size_t k = 0; k < iso.roots.size(); ++k) {
      const auto& r = iso.roots[k];
      if (r.exact()) continue;
      if (NumberField(K->minpoly(), r.lo, r.hi).same_as(*K)) {
        known_.push_back(K);
        fields.push_back(json{{"minpoly", poly_json(K->minpoly())}, {"root_index", k}, {"text", K->describe()}});
        return known_.size() - 1;
      }
    }
    throw Error("number field root not found among the real roots of its minimal polynomial");
  }
};

class Reader {
 public:
  explicit Reader(const json& fields) {
    for (const auto& f : fields) {
      Poly m = poly_of(at(f, "minpoly"));
      auto iso = isolate_real_roots(m);
      const long k = at(f, "root_index").get<long>();
      if (k < 0 || k >= static_cast<long>(iso.roots.size())) throw Error("root index out of range");
      const auto& r = iso.roots[static_cast<std::size_t>(k)];
      if (r.exact()) throw Error("number field generator is rational");
      fields_.push_back(std::make_shared<NumberField>(m, r.lo, r.hi));
    }
  }

  FieldElem elem(const json& j) const {
    if (j.is_string()) return FieldElem(rat_of(j));
    const long i = at(j, "field").get<long>();
    if (i < 0 || i >= static_cast<long>(fields_.size())) throw Error("field reference out of range");
    return FieldElem(fields_[static_cast<std::size_t>(i)], poly_of(at(j, "repr")));
  }
  FPoly fpoly(const json& j) const {
    std::vector<FieldElem> c;
    for (const auto& x : j) c.push_back(elem(x));
    return FPoly(std::move(c));
  }
  FRatFunc ratfunc(const json& j) const { return FRatFunc(fpoly(at(j, "num")), fpoly(at(j, "den"))); }

 private:
  std::vector<FieldPtr> fields_;
};

// ------------------------------------------------------------------ writing

json spec_json(const RecurrenceSpec& s) { return json::parse(render_spec(s)); }

json elems(Writer& w, const std::vector<FieldElem>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(w.elem(x));
  return a;
}

json form_json(Writer& w, const AsymptoticForm& f) {
  return json{{"text", f.to_string()}, {"mu0", to_string(f.mu0)}, {"rho", f.rho}, {"mu", elems(w, f.mu)},
              {"lead", w.elem(f.lead)}, {"r", w.elem(f.r)}, {"b", elems(w, f.b)}, {"log_b", elems(w, f.log_b)},
              {"M", f.M}};
}

json verdict_json(Writer& w, const AsymptoticClass& c) {
  json j{{"verdict", to_string(c.verdict)}, {"case", c.case_used}, {"note", c.note}};
  if (c.dominant)
    j["dominant"] = json{{"exponent", c.dominant->exponent},
                         {"c0", w.elem(c.dominant->coefficient.c0)},
                         {"c1", w.elem(c.dominant->coefficient.c1)}};
  return j;
}

json bound_json(Writer& w, const BoundExpr& b) {
  json j{{"text", b.to_string()}, {"mu0", to_string(b.mu0)}, {"rho", b.rho}, {"coeffs", elems(w, b.coeffs)}};
  if (b.exact) j["exact"] = w.ratfunc(*b.exact);
  return j;
}

json esign_json(const EventualSign& s) { return json{{"sign", s.sign}, {"from", int_json(s.from)}}; }

json shape_json(Writer& w, const TermShape& h) {
  return json{{"text", h.to_string()}, {"mu0", to_string(h.mu0)}, {"lead", w.elem(h.lead)}, {"beta", to_string(h.beta)}};
}

json logconst_json(Writer& w, const LogConst& c) {
  json logs = json::array();
  for (const auto& [r, g] : c.logs()) logs.push_back(json{{"r", to_string(r)}, {"gamma", w.elem(g)}});
  return json{{"q", w.elem(c.algebraic_part())}, {"logs", logs}};
}

json lograt_json(Writer& w, const LogRatExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) terms.push_back(json{{"mult", poly_json(t.mult)}, {"arg", w.ratfunc(t.arg)}});
  return json{{"text", e.to_string()}, {"terms", terms}, {"rational", w.ratfunc(e.rational())}};
}

json point_json(const PointCheck& p) { return json{{"n", p.n}, {"sign", p.sign}, {"prec", p.prec}}; }

json signcert_json(Writer& w, const SignCert& c) {
  json chain = json::array();
  for (const auto& s : c.chain) {
    json j{{"order", s.order}, {"expr", s.expr}, {"sign", s.sign}, {"threshold", int_json(s.threshold)}, {"rule", s.rule}};
    if (s.limit) {
      const char* kind = s.limit->kind == Limit::Finite ? "finite" : s.limit->kind == Limit::PlusInfinity ? "+inf" : "-inf";
      j["limit"] = json{{"kind", kind}, {"text", s.limit->to_string()}};
      if (s.limit->kind == Limit::Finite) j["limit"]["value"] = logconst_json(w, s.limit->value);
    }
    chain.push_back(j);
  }
  json ext = json::array();
  for (const auto& p : c.extension) ext.push_back(point_json(p));
  return json{{"expr", lograt_json(w, c.expr)}, {"want", c.want}, {"chain", chain},
              {"analytic_from", int_json(c.analytic_from)}, {"boundary", point_json(c.boundary)},
              {"extension", ext}, {"from", int_json(c.from)}, {"sign", c.sign}};
}

json report_json(const RangeReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json::array({c.n, c.pass, c.method}));
  return json{{"inequality", to_string(r.inequality)}, {"alpha", to_string(r.alpha)}, {"lo", r.lo}, {"hi", r.hi},
              {"failures", r.failures}, {"checks", checks}};
}

// ------------------------------------------------------------------ reading

template <class E>
E enum_of(const std::string& text, std::initializer_list<E> all) {
  for (E e : all)
    if (to_string(e) == text) return e;
  throw Error("unknown value '" + text + "'");
}

std::vector<FieldElem> elems_of(const Reader& r, const json& j) {
  std::vector<FieldElem> v;
  for (const auto& x : j) v.push_back(r.elem(x));
  return v;
}

AsymptoticForm form_of(const Reader& r, const json& j) {
  AsymptoticForm f;
  f.mu0 = rat_of(at(j, "mu0"));
  f.rho = at(j, "rho").get<int>();
  f.mu = elems_of(r, at(j, "mu"));
  f.lead = r.elem(at(j, "lead"));
  f.r = r.elem(at(j, "r"));
  f.b = elems_of(r, at(j, "b"));
  f.log_b = elems_of(r, at(j, "log_b"));
  f.M = at(j, "M").get<int>();
  return f;
}

AsymptoticClass verdict_of(const Reader& r, const json& j) {
  AsymptoticClass c;
  c.verdict = enum_of(at(j, "verdict").get<std::string>(),
                      {Verdict::LogConcave, Verdict::RatioLogConvex, Verdict::Both, Verdict::Indeterminate,
                       Verdict::NotApplicable});
  c.case_used = at(j, "case").get<int>();
  c.note = at(j, "note").get<std::string>();
  if (j.contains("dominant")) {
    const json& d = j["dominant"];
    c.dominant = DominantTerm{at(d, "exponent").get<int>(), LogCoeff{r.elem(at(d, "c0")), r.elem(at(d, "c1"))}};
  }
  return c;
}

BoundExpr bound_of(const Reader& r, const json& j) {
  BoundExpr b;
  b.mu0 = rat_of(at(j, "mu0"));
  b.rho = at(j, "rho").get<int>();
  b.coeffs = elems_of(r, at(j, "coeffs"));
  if (b.coeffs.empty() && !j.contains("exact")) throw Error("bound without coefficients");
  if (j.contains("exact")) b.exact = r.ratfunc(j["exact"]);
  return b;
}

EventualSign esign_of(const json& j) { return EventualSign{at(j, "sign").get<int>(), int_of(at(j, "from"))}; }

TermShape shape_of(const Reader& r, const json& j) {
  return TermShape{rat_of(at(j, "mu0")), r.elem(at(j, "lead")), rat_of(at(j, "beta"))};
}

LogConst logconst_of(const Reader& r, const json& j) {
  LogConst c(r.elem(at(j, "q")));
  for (const auto& l : at(j, "logs")) c.add_log(rat_of(at(l, "r")), r.elem(at(l, "gamma")));
  return c;
}

LogRatExpr lograt_of(const Reader& r, const json& j) {
  LogRatExpr e(r.ratfunc(at(j, "rational")));
  for (const auto& t : at(j, "terms")) e.add_log(poly_of(at(t, "mult")), r.ratfunc(at(t, "arg")));
  return e;
}

PointCheck point_of(const json& j) { return PointCheck{at(j, "n").get<long>(), at(j, "sign").get<int>(), at(j, "prec").get<long>()}; }

SignCert signcert_of(const Reader& r, const json& j) {
  SignCert c;
  c.expr = lograt_of(r, at(j, "expr"));
  c.want = at(j, "want").get<int>();
  for (const auto& s : at(j, "chain")) {
    ChainStep step{at(s, "order").get<int>(), at(s, "expr").get<std::string>(), at(s, "sign").get<int>(),
                   int_of(at(s, "threshold")), std::nullopt, at(s, "rule").get<std::string>()};
    if (s.contains("limit")) {
      const std::string kind = at(s["limit"], "kind").get<std::string>();
      Limit L;
      if (kind == "+inf") L.kind = Limit::PlusInfinity;
      else if (kind == "-inf") L.kind = Limit::MinusInfinity;
      else if (kind == "finite") L.value = logconst_of(r, at(s["limit"], "value"));
      else throw Error("unknown limit kind '" + kind + "'");
      step.limit = L;
    }
    c.chain.push_back(std::move(step));
  }
  c.analytic_from = int_of(at(j, "analytic_from"));
  c.boundary = point_of(at(j, "boundary"));
  for (const auto& p : at(j, "extension")) c.extension.push_back(point_of(p));
  c.from = int_of(at(j, "from"));
  c.sign = at(j, "sign").get<int>();
  return c;
}

RangeReport report_of(const json& j) {
  RangeReport r;
  r.inequality = enum_of(at(j, "inequality").get<std::string>(),
                         {Inequality::RootLogConcave, Inequality::RootRatioLogConvex, Inequality::RatioInBounds,
                          Inequality::TermUnderBound});
  r.alpha = rat_of(at(j, "alpha"));
  r.lo = at(j, "lo").get<long>();
  r.hi = at(j, "hi").get<long>();
  r.failures = at(j, "failures").get<std::vector<long>>();
  for (const auto& c : at(j, "checks")) r.checks.push_back({c.at(0).get<long>(), c.at(1).get<bool>(), c.at(2).get<std::string>()});
  return r;
}

std::string same_failures(const RangeReport& stored, const RangeReport& fresh, const std::string& what) {
  if (stored.failures != fresh.failures) return what + ": recorded failures differ from a fresh check";
  if (stored.checks.size() != fresh.checks.size()) return what + ": number of checked indices differs";
  for (std::size_t i = 0; i < stored.checks.size(); ++i)
    if (stored.checks[i].n != fresh.checks[i].n || stored.checks[i].pass != fresh.checks[i].pass)
      return what + ": check at n = " + std::to_string(stored.checks[i].n) + " differs";
  return "";
}

// All checks in order; the first failure is returned.
std::string replay_checks(const ParsedCertificate& pc, const VerifyConfig& vcfg) {
  const RootLogCert& c = pc.cert;
  const bool lc = c.kind == Variant::LogConcave;
  const Rational rest = c.alpha - c.folded_alpha;
  if (!(is_integer(c.alpha) ? rest == 0 : c.folded_alpha == 0)) return "alpha split into folded and rest parts is inconsistent";

  // the working recurrence is the input with the integer part of alpha folded in
  const Recurrence input = pc.input.to_recurrence();
  const Recurrence work = shift_by_power(input, c.folded_alpha).with_alpha_tag(0);
  RecurrenceSpec expect = spec_of(work);
  if (!(expect.coeffs == pc.work.coeffs && expect.initial == pc.work.initial && expect.start_index == pc.work.start_index))
    return "working recurrence does not match the input shifted by n^" + to_string(c.folded_alpha);

  // ratio bounds: induction steps and base
  const RatioBoundsCert& b = c.bounds;
  RatioBoundsCert fresh;
  try {
    fresh = certify_bounds(work, b.f, b.g, b.N);
  } catch (const std::exception& e) {
    return std::string("ratio bounds: ") + e.what();
  }
  if (fresh.N != b.N) return "ratio bounds: induction gives N = " + std::to_string(fresh.N) + ", recorded " + std::to_string(b.N);
  if (fresh.steps.size() != b.steps.size()) return "ratio bounds: number of induction steps differs";
  for (std::size_t i = 0; i < b.steps.size(); ++i) {
    const auto& s = b.steps[i];
    const auto& t = fresh.steps[i];
    if (!(s.expr == t.expr)) return "ratio bounds: induction step " + std::to_string(i) + " expression differs";
    if (s.sign.sign != t.sign.sign || s.sign.from != t.sign.from)
      return "ratio bounds: induction step " + std::to_string(i) + " sign or threshold differs";
  }
  if (fresh.base.size() != b.base.size()) return "ratio bounds: base checks differ";
  for (std::size_t i = 0; i < b.base.size(); ++i)
    if (fresh.base[i].n != b.base[i].n || fresh.base[i].ratio != b.base[i].ratio || !b.base[i].pass || !fresh.base[i].pass)
      return "ratio bounds: base check at n = " + std::to_string(b.base[i].n) + " fails";
  if (auto m = same_failures(c.bounds_check, check_ratio_bounds(work, b.f, b.g, c.bounds_check.lo, c.bounds_check.hi),
                             "ratio bounds spot check");
      !m.empty())
    return m;
  if (!c.bounds_check.clean()) return "ratio bounds spot check records failures";

  // term bound
  const TermBound& tb = c.term_bound;
  const FRatFunc G = b.g.as_ratfunc();
  const long floor = std::max(work.start(), 1L);
  if (tb.residual) {
    if (!(term_residual(tb.h, G) == *tb.residual)) return "term bound: residual differs from c((n+1)/n)^beta - g(n)";
    EventualSign s = sign_eventual(*tb.residual, Integer(floor));
    if (s.sign < 0 || !tb.residual_sign || s.sign != tb.residual_sign->sign || Integer(tb.N_h) < s.from)
      return "term bound: residual sign does not hold from n = " + std::to_string(tb.N_h);
  } else if (tb.induction) {
    if (tb.induction->expr.to_string() != term_log_step(tb.h, G).to_string())
      return "term bound: induction expression differs from log h(n+1) - log h(n) - log g(n)";
    if (tb.induction->want != 1) return "term bound: induction must be nonnegative";
    if (auto m = replay(*tb.induction); !m.empty()) return "term bound induction: " + m;
    if (Integer(tb.N_h) < tb.induction->from) return "term bound: N_h precedes the induction threshold";
  } else {
    return "term bound: no induction step recorded";
  }
  if (tb.base_index < std::max(b.N, tb.N_h)) return "term bound: base index precedes the induction range";
  if (!check_term_under_bound(work, tb.h, tb.base_index, tb.base_index, vcfg).clean())
    return "term bound: a_n <= h(n) fails at the base index " + std::to_string(tb.base_index);

  // sign of D(n)
  LogRatExpr D = lc ? concavity_expr(tb.h, b.f, b.g, rest) : ratio_convexity_expr(tb.h, b.f, b.g, rest);
  if (D.to_string() != c.sign_cert.expr.to_string()) return "sign: D(n) differs from the expression built from h, f, g";
  if (c.sign_cert.want != -1 || c.sign_cert.sign > 0) return "sign: certificate does not show D(n) <= 0";
  if (auto m = replay(c.sign_cert); !m.empty()) return "sign: " + m;
  if (c.sign_cert.from < floor + (lc ? 0 : 1)) return "sign: threshold lies below the range where D(n) applies";

  const long na = analytic_threshold(c.kind, to_long(c.sign_cert.from), tb.base_index, b.N);
  if (na != c.N_analytic) return "analytic threshold should be " + std::to_string(na) + ", recorded " + std::to_string(c.N_analytic);

  // initial range
  const RangeReport& ic = c.initial_check;
  if (ic.lo > floor || ic.hi < c.N_analytic) return "initial check does not cover [" + std::to_string(floor) + ", N_analytic]";
  if (ic.alpha != rest) return "initial check uses the wrong alpha";
  RangeReport again = lc ? check_root_logconcave(work, rest, ic.lo, ic.hi, vcfg)
                         : check_root_ratio_logconvex(work, rest, ic.lo, ic.hi, vcfg);
  if (auto m = same_failures(ic, again, "initial check"); !m.empty()) return m;
  long nf = ic.lo;
  for (long n : again.failures) {
    if (n >= c.N_analytic) return "initial check fails at " + std::to_string(n) + " above the analytic threshold";
    nf = n + 1;
  }
  if (again.failures != c.initial_exceptions) return "recorded exceptions differ from the initial check";
  if (nf != c.N_final) return "N_final should be " + std::to_string(nf) + ", recorded " + std::to_string(c.N_final);
  return "";
}

}  // namespace

std::string render_certificate(const RootLogCert& c, const RecurrenceSpec& input, const CertifyConfig& cfg,
                               const std::string& generated_at) {
  Writer w;
  const Recurrence work = shift_by_power(input.to_recurrence(), c.folded_alpha).with_alpha_tag(0);
  json j;
  j["schema_version"] = certificate_schema_version;
  j["generated_at"] = generated_at;
  j["sequence"] = c.sequence;
  j["kind"] = to_string(c.kind);
  j["alpha"] = to_string(c.alpha);
  j["folded_alpha"] = to_string(c.folded_alpha);
  json conf{{"K", cfg.K}, {"slack", to_string(cfg.slack)}, {"max_n", cfg.max_n}, {"margin", cfg.margin},
            {"bits_budget", cfg.verify.bits_budget}};
  if (cfg.depth) conf["depth"] = *cfg.depth;
  if (cfg.beta) conf["beta"] = to_string(*cfg.beta);
  j["config"] = conf;
  j["input"] = spec_json(input);
  j["work"] = spec_json(spec_of(work));
  j["form"] = form_json(w, c.form);
  j["classification"] = verdict_json(w, c.verdict);

  json steps = json::array();
  for (const auto& s : c.bounds.steps)
    steps.push_back(json{{"description", s.description}, {"expr", w.ratfunc(s.expr)}, {"sign", esign_json(s.sign)}});
  json base = json::array();
  for (const auto& s : c.bounds.base) base.push_back(json{{"n", s.n}, {"ratio", to_string(s.ratio)}, {"pass", s.pass}});
  j["bounds"] = json{{"f", bound_json(w, c.bounds.f)}, {"g", bound_json(w, c.bounds.g)}, {"N", c.bounds.N},
                     {"steps", steps}, {"base", base}, {"spot_check", report_json(c.bounds_check)}};

  const TermBound& tb = c.term_bound;
  json t{{"h", shape_json(w, tb.h)}, {"N_h", tb.N_h}, {"base_index", tb.base_index}, {"base_method", tb.base_method}};
  if (tb.residual) t["residual"] = w.ratfunc(*tb.residual);
  if (tb.residual_sign) t["residual_sign"] = esign_json(*tb.residual_sign);
  if (tb.induction) t["induction"] = signcert_json(w, *tb.induction);
  j["term_bound"] = t;

  j["sign_cert"] = signcert_json(w, c.sign_cert);
  j["N_analytic"] = c.N_analytic;
  j["N_final"] = c.N_final;
  j["initial_exceptions"] = c.initial_exceptions;
  j["initial_check"] = report_json(c.initial_check);
  j["fields"] = w.fields;
  return j.dump(2) + "\n";
}

ParsedCertificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
  ParsedCertificate pc;
  if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_number_integer()) return pc;
  pc.schema_version = j["schema_version"].get<int>();
  if (pc.schema_version != certificate_schema_version) return pc;
  try {
    Reader r(at(j, "fields"));
    RootLogCert& c = pc.cert;
    pc.input = parse_spec(at(j, "input").dump());
    pc.work = parse_spec(at(j, "work").dump());
    c.sequence = at(j, "sequence").get<std::string>();
    c.kind = parse_variant(at(j, "kind").get<std::string>());
    c.alpha = rat_of(at(j, "alpha"));
    c.folded_alpha = rat_of(at(j, "folded_alpha"));
    c.form = form_of(r, at(j, "form"));
    c.verdict = verdict_of(r, at(j, "classification"));

    const json& b = at(j, "bounds");
    c.bounds.f = bound_of(r, at(b, "f"));
    c.bounds.g = bound_of(r, at(b, "g"));
    c.bounds.N = at(b, "N").get<long>();
    for (const auto& s : at(b, "steps"))
      c.bounds.steps.push_back({at(s, "description").get<std::string>(), r.ratfunc(at(s, "expr")), esign_of(at(s, "sign"))});
    for (const auto& s : at(b, "base"))
      c.bounds.base.push_back({at(s, "n").get<long>(), rat_of(at(s, "ratio")), at(s, "pass").get<bool>()});
    c.bounds_check = report_of(at(b, "spot_check"));

    const json& t = at(j, "term_bound");
    TermBound& tb = c.term_bound;
    tb.h = shape_of(r, at(t, "h"));
    tb.N_h = at(t, "N_h").get<long>();
    tb.base_index = at(t, "base_index").get<long>();
    tb.base_method = at(t, "base_method").get<std::string>();
    if (t.contains("residual")) tb.residual = r.ratfunc(t["residual"]);
    if (t.contains("residual_sign")) tb.residual_sign = esign_of(t["residual_sign"]);
    if (t.contains("induction")) tb.induction = signcert_of(r, t["induction"]);

    c.sign_cert = signcert_of(r, at(j, "sign_cert"));
    c.N_analytic = at(j, "N_analytic").get<long>();
    c.N_final = at(j, "N_final").get<long>();
    c.initial_exceptions = at(j, "initial_exceptions").get<std::vector<long>>();
    c.initial_check = report_of(at(j, "initial_check"));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
  return pc;
}

ReplayOutcome replay_certificate(const std::string& text, const VerifyConfig& cfg) {
  if (!json::accept(text)) throw Error("malformed certificate JSON");
  ParsedCertificate pc;
  try {
    pc = parse_certificate(text);
  } catch (const Error& e) {
    return {5, e.what()};
  }
  if (pc.schema_version != certificate_schema_version)
    return {6, "unsupported schema_version " + std::to_string(pc.schema_version) + " (this build reads " +
                   std::to_string(certificate_schema_version) + ")"};
  try {
    std::string m = replay_checks(pc, cfg);
    if (!m.empty()) return {5, m};
  } catch (const std::exception& e) {
    return {5, std::string("replay aborted: ") + e.what()};
  }
  return {0, "all recorded checks replay"};
}

std::string render_transcript(const RootLogCert& c) {
  const bool lc = c.kind == Variant::LogConcave;
  const std::string seq = sgn(c.alpha) == 0 ? "a_n" : "a_n/n^" + to_string(c.alpha);
  const std::string prop = lc ? "log-concave" : "ratio log-convex";
  std::ostringstream o;
  o << "Sequence " << c.sequence << ": root sequence of " << seq << ", property " << prop << "\n";
  if (sgn(c.folded_alpha) != 0) o << "  (n^" << to_string(c.folded_alpha) << " folded into the recurrence)\n";
  o << "Asymptotics: " << c.form.to_string() << "\n";
  o << "  criterion: " << to_string(c.verdict.verdict) << " (case " << c.verdict.case_used << ", " << c.verdict.note << ")\n";

  o << "\n1. Ratio bounds  f(n) <= a_{n+1}/a_n <= g(n)  for n >= " << c.bounds.N << "\n";
  o << "   f(n) = " << c.bounds.f.to_string() << "\n   g(n) = " << c.bounds.g.to_string() << "\n";
  for (const auto& s : c.bounds.steps)
    o << "   induction: " << s.description << ", for n >= " << to_string(s.sign.from) << "\n";
  if (!c.bounds.base.empty()) {
    o << "   base:";
    for (const auto& b : c.bounds.base) o << " r_" << b.n << (b.pass ? " in [f, g]" : " outside [f, g]") << ";";
    o << "\n";
  }
  o << "   spot check on [" << c.bounds_check.lo << ", " << c.bounds_check.hi << "]: "
    << (c.bounds_check.clean() ? "clean" : "FAILURES") << "\n";

  const TermBound& tb = c.term_bound;
  o << "\n2. Term bound  a_n <= h(n) = " << tb.h.to_string() << "  for n >= " << tb.base_index << "\n";
  o << "   Now we show h(n+1) >= h(n) g(n) for n >= " << tb.N_h << ":\n";
  if (tb.residual) o << "   (h(n+1) - h(n) g(n))/h(n) = " << tb.residual->to_string() << " >= 0 for n >= " << tb.N_h << "\n";
  if (tb.induction) o << "   log h(n+1) - log h(n) - log g(n) >= 0 for n >= " << to_string(tb.induction->from) << "\n";
  o << "   base: a_" << tb.base_index << " <= h(" << tb.base_index << ") checked (" << tb.base_method << ")\n";

  const SignCert& s = c.sign_cert;
  o << "\n3. D(n) <= 0 with D(n) = " << s.expr.to_string() << "\n";
  for (const auto& step : s.chain)
    o << "   D^(" << step.order << ")(n) " << (step.sign < 0 ? "< 0" : step.sign > 0 ? "> 0" : "= 0") << " for n >= "
      << to_string(step.threshold) << "  [" << step.rule << "]\n";
  o << "   extended pointwise from n = " << to_string(s.analytic_from) << " down to n = " << to_string(s.from) << "\n";
  o << "   the analytic argument covers windows starting at n >= " << c.N_analytic << "\n";

  o << "\n4. Initial check of windows " << c.initial_check.lo << ".." << c.initial_check.hi << ": ";
  if (c.initial_exceptions.empty()) o << "no failures\n";
  else {
    o << c.initial_exceptions.size() << " failing window(s):";
    for (long n : c.initial_exceptions) o << " " << n;
    o << "\n";
  }
  o << "\nConclusion: the root sequence of " << seq << " is " << prop << " for windows starting at n >= " << c.N_final << "\n";
  return o.str();
}

}  // namespace rootlog
