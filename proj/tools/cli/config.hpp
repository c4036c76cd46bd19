#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cli/report.hpp"

namespace iwb::cli {

/// Settings read from `--config PATH`. Command-line flags take precedence.
///
///     # comments and blank lines are ignored
///     alphabet = binary
///     format = pretty
///     grammar.max_count_cells = 4194304
///     table.max_cells = 1000000
///     search.max_candidates = 1000000
///     search.time_limit_ms = 5000
struct GlobalConfig {
  std::string alphabet = "binary";
  Format format = Format::Pretty;
  std::size_t grammar_max_count_cells = std::size_t{1} << 22;
  std::size_t table_max_cells = 1'000'000;
  std::uint64_t search_max_candidates = 1'000'000;
  std::optional<std::uint64_t> search_time_limit_ms;

  friend bool operator==(const GlobalConfig&, const GlobalConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError naming the offending line.
GlobalConfig parse_config(std::string_view text);
GlobalConfig load_config(const std::string& path);

/// Every key, one per line; parse_config(print_config(c)) == c.
std::string print_config(const GlobalConfig& config);

}  // namespace iwb::cli
