// rootlog command-line front end. Exit codes:
//   0 success, 1 usage or input error, 2 expansion not applicable,
//   3 criterion not applicable, 4 certification stage failed,
//   5 certificate replay failed, 6 unsupported certificate schema.

#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rootlog/asymptotics.hpp"
#include "rootlog/cert_io.hpp"
#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"
#include "rootlog/spec_io.hpp"

using namespace rootlog;

namespace {

enum Exit { ok = 0, usage = 1, expand_na = 2, certify_na = 3, stage_failed = 4, replay_failed = 5, bad_schema = 6 };

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream o;
  o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return o.str();
}

Rational rational_flag(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

struct CertifyFlags {
  std::string spec, kind, alpha, slack = "1", beta, out;
  int depth = 0, K = 6;
  long max_n = 20000, bits_budget = 0;
};

CertifyConfig make_config(const CertifyFlags& f) {
  CertifyConfig cfg;
  cfg.K = f.K;
  if (f.depth > 0) cfg.depth = f.depth;
  cfg.slack = rational_flag(f.slack, "--slack");
  if (!f.beta.empty() && f.beta != "auto") cfg.beta = rational_flag(f.beta, "--beta");
  cfg.max_n = f.max_n;
  if (f.bits_budget > 0) cfg.verify.bits_budget = f.bits_budget;
  return cfg;
}

Rational alpha_of(const CertifyFlags& f, const RecurrenceSpec& spec) {
  if (!f.alpha.empty()) return rational_flag(f.alpha, "--alpha");
  return spec.alpha.value_or(Rational(0));
}

int cmd_expand(const std::string& ref, int K) {
  RecurrenceSpec spec = load_spec(ref);
  try {
    auto rx = expand_ratio(spec.to_recurrence(), K);
    AsymptoticForm form = to_asymptotic_form(rx.front());
    std::cout << spec.name << "\n  ratio: " << rx.front().to_string() << "\n  terms: " << form.to_string() << "\n";
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return expand_na;
  }
  return ok;
}

int cmd_classify(const std::string& ref, const std::string& alpha_flag, int K) {
  RecurrenceSpec spec = load_spec(ref);
  const Rational alpha = alpha_flag.empty() ? spec.alpha.value_or(Rational(0)) : rational_flag(alpha_flag, "--alpha");
  // an integer alpha is folded into the recurrence, as in certification
  const Rational rest = is_integer(alpha) ? Rational(0) : alpha;
  try {
    Recurrence work = shift_by_power(spec.to_recurrence(), alpha - rest).with_alpha_tag(0);
    AsymptoticForm form = to_asymptotic_form(expand_ratio(work, K).front());
    std::cout << spec.name << (sgn(alpha) != 0 ? " / n^" + to_string(alpha) : "") << "\n  " << form.to_string() << "\n";
    for (Variant v : {Variant::LogConcave, Variant::RatioLogConvex}) {
      AsymptoticClass c = classify(form, rest, v);
      std::cout << "  " << to_string(v) << ": " << to_string(c.verdict) << ", case "
                << (c.case_used ? std::to_string(c.case_used) : "none") << " (" << c.note << ")";
      if (c.dominant)
        std::cout << "; dominant term n^-" << c.dominant->exponent << " * (" << to_string(c.dominant->coefficient.c0)
                  << (c.dominant->has_log() ? " + " + to_string(c.dominant->coefficient.c1) + " log n" : "") << ")";
      std::cout << "\n";
    }
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return expand_na;
  }
  return ok;
}

int cmd_bounds(const CertifyFlags& f) {
  RecurrenceSpec spec = load_spec(f.spec);
  const CertifyConfig cfg = make_config(f);
  const Variant kind = parse_variant(f.kind);
  const Rational alpha = alpha_of(f, spec);
  const Rational folded = is_integer(alpha) ? alpha : Rational(0);
  try {
    Recurrence work = shift_by_power(spec.to_recurrence(), folded).with_alpha_tag(0);
    RatioBoundsCert b;
    if (work.order() == 1) {
      BoundExpr r = exact_ratio_bound(work);
      b = certify_bounds(work, r, r, cfg.max_n);
    } else {
      auto rx = expand_ratio(work, cfg.K);
      auto [lo, hi] = make_candidate_bounds(rx.front(), cfg.depth.value_or(kind == Variant::LogConcave ? 2 : 3), cfg.slack);
      b = certify_bounds(work, lo, hi, cfg.max_n);
    }
    std::cout << "f(n) = " << b.f.to_string() << "\ng(n) = " << b.g.to_string() << "\n";
    for (const auto& s : b.steps)
      std::cout << "  " << s.description << ": " << s.expr.to_string() << " >= 0 for n >= " << to_string(s.sign.from) << "\n";
    std::cout << "f(n) <= a_{n+1}/a_n <= g(n) for all n >= " << b.N << "\n";
    RangeReport spot = check_ratio_bounds(work, b.f, b.g, b.N, b.N + 500);
    std::cout << "spot check: " << spot.to_string() << "\n";
    return spot.clean() ? ok : stage_failed;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return expand_na;
  } catch (const StageError& e) {
    std::cerr << "stage failed: " << e.what() << "\n";
    return stage_failed;
  }
}

int cmd_certify(const CertifyFlags& f) {
  RecurrenceSpec spec = load_spec(f.spec);
  const CertifyConfig cfg = make_config(f);
  const Variant kind = parse_variant(f.kind);
  const Rational alpha = alpha_of(f, spec);
  RootLogCert cert;
  try {
    cert = certify_root_log(spec.to_recurrence(), alpha, kind, cfg);
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return certify_na;
  } catch (const StageError& e) {
    std::cerr << "stage '" << e.stage() << "' failed: " << e.what() << "\n";
    return stage_failed;
  }
  std::cout << render_transcript(cert);
  const std::string out = f.out.empty() ? spec.name + "." + to_string(kind) + ".cert.json" : f.out;
  std::ofstream file(out);
  if (!file) throw Error("cannot write certificate to '" + out + "'");
  file << render_certificate(cert, spec, cfg, utc_now());
  std::cout << "N_final = " << cert.N_final << "\ncertificate written to " << out << "\n";
  return ok;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open certificate '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  ReplayOutcome r = replay_certificate(ss.str());
  (r.status == 0 ? std::cout : std::cerr) << (r.status == 0 ? "ok: " : "replay failed: ") << r.message << "\n";
  return r.status;
}

struct Row {
  std::string name, kind, verdict, n_final, note;
  double seconds = 0;
  bool claimed = false, failed = false;
};

Row run_one(const RecurrenceSpec& spec, Variant kind) {
  Row row{spec.name, to_string(kind), "", "-", "", 0, false, false};
  for (Variant k : spec.kinds) row.claimed |= k == kind;
  auto t0 = std::chrono::steady_clock::now();
  try {
    RootLogCert c = certify_root_log(spec.to_recurrence(), spec.alpha.value_or(Rational(0)), kind);
    row.verdict = "certified";
    row.n_final = std::to_string(c.N_final);
  } catch (const NotApplicable& e) {
    row.verdict = "not applicable";
    row.note = e.what();
    row.failed = true;
  } catch (const std::exception& e) {
    row.verdict = "failed";
    row.note = e.what();
    row.failed = true;
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

int cmd_corpus_run(const std::string& filter, const std::string& kind, unsigned jobs) {
  std::vector<Variant> kinds;
  if (kind == "all" || kind.empty()) kinds = {Variant::LogConcave, Variant::RatioLogConvex};
  else kinds = {parse_variant(kind)};
  std::vector<std::pair<RecurrenceSpec, Variant>> tasks;
  for (const auto& name : corpus_names())
    if (filter.empty() || name.find(filter) != std::string::npos) {
      RecurrenceSpec s = load_spec("corpus:" + name);
      for (Variant k : kinds) tasks.emplace_back(s, k);
    }

  // fixed-size worker pool; rows are stored by task index so the table keeps corpus order
  std::vector<Row> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, tasks.size()); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < tasks.size();) rows[i] = run_one(tasks[i].first, tasks[i].second);
    });
  for (auto& t : pool) t.join();

  std::cout << std::left << std::setw(16) << "sequence" << std::setw(16) << "kind" << std::setw(16) << "verdict"
            << std::setw(9) << "N_final" << std::setw(9) << "time[s]" << "note\n";
  bool bad = false;
  for (const auto& r : rows) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(1) << r.seconds;
    std::string note = r.note;
    if (r.claimed && r.failed) {
      note = "UNEXPECTED: " + note;
      bad = true;
    } else if (r.claimed) {
      note = "expected";
    }
    std::cout << std::left << std::setw(16) << r.name << std::setw(16) << r.kind << std::setw(16) << r.verdict
              << std::setw(9) << r.n_final << std::setw(9) << t.str() << note << "\n";
  }
  return bad ? stage_failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-sequence log-concavity and ratio log-convexity certificates for P-recursive sequences"};
  app.require_subcommand(1);

  std::string ref, alpha, cert_path, filter, kind = "all";
  int K = 6;
  unsigned jobs = 0;
  CertifyFlags cf;

  auto* expand = app.add_subcommand("expand", "Asymptotic expansion of a_n and of the ratio a_{n+1}/a_n");
  expand->add_option("spec", ref, "Recurrence file or corpus:<name>")->required();
  expand->add_option("-K", K, "Number of expansion terms")->check(CLI::Range(2, 40));

  auto* classify_cmd = app.add_subcommand("classify", "Asymptotic criteria for both properties");
  classify_cmd->add_option("spec", ref, "Recurrence file or corpus:<name>")->required();
  classify_cmd->add_option("--alpha", alpha, "Study a_n / n^alpha (default: the spec's alpha)");
  classify_cmd->add_option("-K", K, "Number of expansion terms")->check(CLI::Range(2, 40));

  auto add_certify_flags = [&](CLI::App* sub) {
    sub->add_option("spec", cf.spec, "Recurrence file or corpus:<name>")->required();
    sub->add_option("kind", cf.kind, "logconcave or ratiologconvex")->required()->check(CLI::IsMember({"logconcave", "ratiologconvex"}));
    sub->add_option("--alpha", cf.alpha, "Study a_n / n^alpha (default: the spec's alpha)");
    sub->add_option("--depth", cf.depth, "Ratio expansion depth used for the bounds")->check(CLI::Range(1, 20));
    sub->add_option("--slack", cf.slack, "Perturbation of the last bound coefficient");
    sub->add_option("--max-n", cf.max_n, "Largest index searched for thresholds and base cases");
    sub->add_option("-K", cf.K, "Number of expansion terms")->check(CLI::Range(2, 40));
  };
  auto* bounds = app.add_subcommand("bounds", "Certified ratio bounds f(n) <= a_{n+1}/a_n <= g(n)");
  add_certify_flags(bounds);

  auto* certify = app.add_subcommand("certify", "Full certificate with a proof transcript");
  add_certify_flags(certify);
  certify->add_option("--beta", cf.beta, "Exponent of n in the term bound h (default: auto)");
  certify->add_option("--bits-budget", cf.bits_budget, "Bit budget for exact comparisons")->check(CLI::PositiveNumber);
  certify->add_option("-o,--output", cf.out, "Certificate path (default: <name>.<kind>.cert.json)");

  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();

  auto* corpus = app.add_subcommand("corpus-run", "Certify the bundled corpus");
  corpus->add_option("--filter", filter, "Only entries whose name contains this text");
  corpus->add_option("--kind", kind, "logconcave, ratiologconvex or all")->check(CLI::IsMember({"logconcave", "ratiologconvex", "all"}));
  corpus->add_option("-j,--jobs", jobs, "Parallel tasks (default: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*expand) return cmd_expand(ref, K);
    if (*classify_cmd) return cmd_classify(ref, alpha, K);
    if (*bounds) return cmd_bounds(cf);
    if (*certify) return cmd_certify(cf);
    if (*verify) return cmd_verify(cert_path);
    if (*corpus) return cmd_corpus_run(filter, kind, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
