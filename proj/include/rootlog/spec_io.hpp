#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootlog/form.hpp"
#include "rootlog/recurrence.hpp"

namespace rootlog {

/// JSON recurrence description; polynomial coefficients are constant-first
/// lists of exact rational strings.
struct RecurrenceSpec {
  std::string name;
  std::vector<Poly> coeffs;
  std::vector<Rational> initial;
  long start_index = 0;
  std::optional<Rational> alpha;
  std::vector<Variant> kinds;  // properties the entry is expected to certify
  std::string notes;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Recurrence to_recurrence() const;
  friend bool operator==(const RecurrenceSpec& a, const RecurrenceSpec& b);
};

/// Spec describing an existing recurrence (no alpha, no notes).
RecurrenceSpec spec_of(const Recurrence& rec);

RecurrenceSpec parse_spec(const std::string& json_text);
std::string render_spec(const RecurrenceSpec& spec);

/// "corpus:<name>" resolves to a bundled entry, anything else is a file path.
RecurrenceSpec load_spec(const std::string& ref);
std::vector<std::string> corpus_names();
/// (name, JSON text) of every bundled corpus entry, in name order.
const std::vector<std::pair<std::string, std::string>>& corpus_files();

}  // namespace rootlog
