#pragma once

#include <string>

#include "rootlog/certify.hpp"
#include "rootlog/spec_io.hpp"

namespace rootlog {

inline constexpr int certificate_schema_version = 1;

/// JSON certificate. Everything except `generated_at` is a deterministic
/// function of the input and the configuration.
std::string render_certificate(const RootLogCert& cert, const RecurrenceSpec& input, const CertifyConfig& cfg,
                               const std::string& generated_at = "");

struct ParsedCertificate {
  int schema_version = 0;
  RecurrenceSpec input;
  RecurrenceSpec work;
  RootLogCert cert;
};

/// Throws Error on malformed content; the schema version is reported as found.
ParsedCertificate parse_certificate(const std::string& json_text);

struct ReplayOutcome {
  int status = 0;  // 0 every check replays, 5 a check fails, 6 unsupported schema
  std::string message;
};

/// Re-runs every recorded check without recomputing the asymptotic expansion.
/// Syntax errors in the JSON itself raise Error.
ReplayOutcome replay_certificate(const std::string& json_text, const VerifyConfig& cfg = default_verify_config());

/// Proof outline: bounds, then h, then D(n), then the initial check.
std::string render_transcript(const RootLogCert& cert);

}  // namespace rootlog
