#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "localcut/generators.hpp"

namespace localcut {

/// Schema violation in a generator spec or experiment config. `path` names
/// the offending field, e.g. "generator.n".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Builds an instance from a generator spec such as
/// {"family": "planted_separator", "left": 10, "right": 10, "separator": 2}.
/// `path` prefixes error messages.
Instance generate(const nlohmann::json& spec, Rng& rng, const std::string& path = "generator");

/// Runs every trial of a config and returns the report. Reports for the same
/// config are identical except for the "timing" member.
nlohmann::json run_experiment(const nlohmann::json& config);

/// One CSV row per trial; columns are the union of the trial record keys.
std::string trials_csv(const nlohmann::json& report);

/// One compact JSON object per line, in trial order.
std::string trials_ndjson(const nlohmann::json& report);

/// Two-sided Wilson score interval for a binomial rate.
std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double z);

}  // namespace localcut
