#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polya/harness.hpp"

namespace polya::config {

/// Overrides read from a key=value file. Unset keys leave defaults alone.
struct Config {
  std::optional<int> na, nb;
  std::optional<double> b_min, b_max;
  std::optional<int> level;           ///< sweep / compute max_level
  std::optional<int> terms;           ///< rectangle series terms
  std::optional<int> upper_level;     ///< replay upper-bound cases
  std::optional<int> upper_samples;
  std::optional<int> thinning_level;
  std::optional<int> cert_depth;
  std::optional<unsigned> threads;
};

/// Lines `key = value`; `#` starts a comment, `[section]` headers are
/// ignored, values may be quoted. `grid = NAxNB` sets na and nb.
/// Throws ParseError on malformed lines, unknown keys or bad values.
Config parse(std::string_view text);
Config load(const std::string& path);

/// "60x60" -> (60, 60). Throws ParseError.
std::pair<int, int> parse_grid(std::string_view text);

void apply(const Config& c, harness::SweepConfig& sweep);
void apply(const Config& c, harness::ReplayOptions& replay);

}  // namespace polya::config
