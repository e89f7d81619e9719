#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "svb/experiment.hpp"

namespace svb {

/// Parse or validation failure, with enough context for a CLI diagnostic.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line = 0)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parse the flat declarative experiment format: top-level `key = value`
/// lines followed by one `[[estimator]]` block per estimator. `#` starts a
/// comment, string values may be quoted. Throws ConfigError with the
/// offending line number.
ExperimentConfig parse_config_text(const std::string& text);

/// Load and parse a config file. Throws ConfigError (line 0) if the file
/// cannot be read.
ExperimentConfig load_config(const std::string& path);

/// Apply a `key=value` override to a top-level config field. Throws
/// ConfigError for unknown keys or malformed values.
void apply_override(ExperimentConfig& config, const std::string& assignment);

/// Canonical one-line-per-field rendering of the resolved config; the digest
/// is the FNV-1a hash of this string.
std::string canonical_config_string(const ExperimentConfig& config);
std::uint64_t config_digest(const ExperimentConfig& config);

}  // namespace svb
