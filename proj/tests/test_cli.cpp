#include <functional>

#include "doctest.h"
#include "json.hpp"
#include "rootlog/cert_io.hpp"
#include "rootlog/error.hpp"
#include "rootlog/spec_io.hpp"

using namespace rootlog;
using nlohmann::json;

namespace {

struct Fixture {
  RecurrenceSpec input;
  CertifyConfig cfg;
  RootLogCert cert;
  std::string text;
};

// Catalan inverse over n^2 is quick and exercises the exact-ratio path,
// the log induction for h and a nonempty exception list.
const Fixture& catalan() {
  static const Fixture f = [] {
    Fixture x;
    x.input = load_spec("corpus:catalan_inv");
    x.cert = certify_root_log(x.input.to_recurrence(), x.input.alpha.value_or(Rational(0)), Variant::LogConcave, x.cfg);
    x.text = render_certificate(x.cert, x.input, x.cfg, "2000-01-01T00:00:00Z");
    return x;
  }();
  return f;
}

std::string tamper(const std::string& text, const std::function<void(json&)>& edit) {
  json j = json::parse(text);
  edit(j);
  return j.dump(2);
}

}  // namespace

TEST_CASE("spec round trip") {
  for (const auto& name : corpus_names()) {
    RecurrenceSpec s = load_spec("corpus:" + name);
    CAPTURE(name);
    CHECK(parse_spec(render_spec(s)) == s);
    CHECK(spec_of(s.to_recurrence()).coeffs == s.coeffs);
  }
}

TEST_CASE("malformed specs are input errors") {
  CHECK_THROWS_AS(parse_spec("{"), Error);
  CHECK_THROWS_AS(parse_spec(R"({"name": "x", "order": 1, "coeffs": [["1"]], "initial": ["1"]})"), Error);
  CHECK_THROWS_AS(parse_spec(R"({"name": "x", "order": 1, "coeffs": [["1"], ["1/0"]], "initial": ["1"]})"), Error);
  CHECK_THROWS_AS(
      parse_spec(R"({"name": "x", "order": 1, "coeffs": [["1"], ["1"]], "initial": ["1"], "kinds": ["concave"]})"),
      Error);
  CHECK_THROWS_AS(load_spec("corpus:no_such_entry"), Error);
}

TEST_CASE("certificate round trip") {
  const Fixture& f = catalan();
  ParsedCertificate p = parse_certificate(f.text);
  CHECK(p.schema_version == certificate_schema_version);
  CHECK(p.input == f.input);
  CHECK(p.cert.N_final == 19);
  CHECK(p.cert.initial_exceptions == f.cert.initial_exceptions);
  CHECK(p.cert.sign_cert.expr.to_string() == f.cert.sign_cert.expr.to_string());
  CHECK(render_certificate(p.cert, p.input, f.cfg, "2000-01-01T00:00:00Z") == f.text);
}

TEST_CASE("certificates are deterministic apart from the timestamp") {
  const Fixture& f = catalan();
  RootLogCert again = certify_root_log(f.input.to_recurrence(), 2, Variant::LogConcave, f.cfg);
  std::string other = render_certificate(again, f.input, f.cfg, "2030-06-30T12:00:00Z");
  CHECK(other != f.text);
  json a = json::parse(f.text), b = json::parse(other);
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a == b);
}

TEST_CASE("replay accepts the certificate") {
  ReplayOutcome r = replay_certificate(catalan().text);
  CHECK(r.status == 0);
  CHECK(r.message == "all recorded checks replay");
}

TEST_CASE("replay rejects tampering") {
  const std::string& t = catalan().text;
  auto status = [&](const std::function<void(json&)>& edit) { return replay_certificate(tamper(t, edit)).status; };
  CHECK(status([](json& j) { j["N_final"] = 1; }) == 5);
  CHECK(status([](json& j) { j["N_analytic"] = 20; }) == 5);
  CHECK(status([](json& j) { j["initial_exceptions"] = json::array(); }) == 5);
  CHECK(status([](json& j) { j["sign_cert"]["from"] = 10; }) == 5);
  CHECK(status([](json& j) { j["sign_cert"]["chain"].back()["threshold"] = 5; }) == 5);
  CHECK(status([](json& j) { j["term_bound"]["base_index"] = 1; }) == 5);
  CHECK(status([](json& j) { j["term_bound"]["h"]["beta"] = "-1"; }) == 5);
  CHECK(status([](json& j) { j["folded_alpha"] = "1"; }) == 5);
  CHECK(status([](json& j) { j["work"]["start_index"] = 0; }) == 5);
  CHECK(status([](json& j) { j.erase("bounds"); }) == 5);
}

TEST_CASE("replay reports unsupported schemas") {
  const std::string& t = catalan().text;
  CHECK(replay_certificate(tamper(t, [](json& j) { j["schema_version"] = 0; })).status == 6);
  CHECK(replay_certificate(tamper(t, [](json& j) { j["schema_version"] = 2; })).status == 6);
  CHECK_THROWS_AS(replay_certificate("{\"schema_version\": 1,"), Error);
}

TEST_CASE("transcript follows the proof order") {
  std::string s = render_transcript(catalan().cert);
  const auto bounds = s.find("f(n) <="), h = s.find("h(n+1) >= h(n) g(n)"), d = s.find("D(n)"),
             init = s.find("Initial check");
  CHECK(bounds != std::string::npos);
  CHECK(h != std::string::npos);
  CHECK(d != std::string::npos);
  CHECK(init != std::string::npos);
  CHECK(bounds < h);
  CHECK(h < d);
  CHECK(d < init);
}
