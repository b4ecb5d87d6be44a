#include "rootlog/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rootlog/error.hpp"

namespace rootlog {

using nlohmann::json;

namespace {

Rational exact(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(where + ": rationals must be given as strings, e.g. \"3/4\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(where + ": " + e.what());
  }
}

}  // namespace

Recurrence RecurrenceSpec::to_recurrence() const { return Recurrence(name, coeffs, initial, start_index); }

bool operator==(const RecurrenceSpec& a, const RecurrenceSpec& b) {
  return a.name == b.name && a.coeffs == b.coeffs && a.initial == b.initial && a.start_index == b.start_index &&
         a.alpha == b.alpha && a.kinds == b.kinds && a.notes == b.notes;
}

RecurrenceSpec spec_of(const Recurrence& rec) {
  RecurrenceSpec s;
  s.name = rec.name();
  s.coeffs = rec.coeffs();
  s.initial = rec.initial();
  s.start_index = rec.start();
  return s;
}

RecurrenceSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed recurrence JSON: ") + e.what());
  }
  RecurrenceSpec s;
  if (!j.contains("coeffs") || !j.contains("initial")) throw Error("recurrence JSON needs 'coeffs' and 'initial'");
  s.name = j.value("name", "unnamed");
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"][i]) c.push_back(exact(x, "coeffs[" + std::to_string(i) + "]"));
    s.coeffs.emplace_back(std::move(c));
  }
  for (const auto& x : j["initial"]) s.initial.push_back(exact(x, "initial"));
  s.start_index = j.value("start_index", 0L);
  if (j.contains("alpha") && !j["alpha"].is_null()) s.alpha = exact(j["alpha"], "alpha");
  if (j.contains("kinds"))
    for (const auto& k : j["kinds"]) {
      try {
        s.kinds.push_back(parse_variant(k.get<std::string>()));
      } catch (const std::exception& e) {
        throw Error(std::string("kinds: ") + e.what());
      }
    }
  s.notes = j.value("notes", "");
  if (j.contains("order") && j["order"].get<int>() != s.order())
    throw Error("'order' is " + std::to_string(j["order"].get<int>()) + " but " + std::to_string(s.coeffs.size()) +
                " coefficient polynomials were given");
  return s;
}

std::string render_spec(const RecurrenceSpec& s) {
  json j;
  j["name"] = s.name;
  j["order"] = s.order();
  j["coeffs"] = json::array();
  for (const auto& p : s.coeffs) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_string(x));
    j["coeffs"].push_back(c);
  }
  j["initial"] = json::array();
  for (const auto& x : s.initial) j["initial"].push_back(to_string(x));
  j["start_index"] = s.start_index;
  if (s.alpha) j["alpha"] = to_string(*s.alpha);
  if (!s.kinds.empty()) {
    j["kinds"] = json::array();
    for (Variant k : s.kinds) j["kinds"].push_back(to_string(k));
  }
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j.dump(2) + "\n";
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : corpus_files()) out.push_back(name);
  return out;
}

RecurrenceSpec load_spec(const std::string& ref) {
  const std::string prefix = "corpus:";
  if (ref.rfind(prefix, 0) == 0) {
    std::string name = ref.substr(prefix.size());
    for (const auto& [n, text] : corpus_files())
      if (n == name) return parse_spec(text);
    throw Error("no corpus entry named '" + name + "'");
  }
  std::ifstream in(ref);
  if (!in) throw Error("cannot open recurrence file '" + ref + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace rootlog
