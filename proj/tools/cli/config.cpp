#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace iwb::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t positive(std::string_view value, std::size_t line) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end || out == 0) {
    throw ConfigError("config line " + std::to_string(line) + ": expected a positive integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

}  // namespace

GlobalConfig parse_config(std::string_view text) {
  GlobalConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "alphabet") {
      if (value.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty alphabet");
      config.alphabet = std::string(value);
    } else if (key == "format") {
      auto f = parse_format(value);
      if (!f) {
        throw ConfigError("config line " + std::to_string(line_no) + ": unknown format '" +
                          std::string(value) + "'");
      }
      config.format = *f;
    } else if (key == "grammar.max_count_cells") {
      config.grammar_max_count_cells = positive(value, line_no);
    } else if (key == "table.max_cells") {
      config.table_max_cells = positive(value, line_no);
    } else if (key == "search.max_candidates") {
      config.search_max_candidates = positive(value, line_no);
    } else if (key == "search.time_limit_ms") {
      config.search_time_limit_ms = positive(value, line_no);
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  return config;
}

GlobalConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string print_config(const GlobalConfig& config) {
  std::string out;
  out += "alphabet = " + config.alphabet + "\n";
  out += "format = " + std::string(format_name(config.format)) + "\n";
  out += "grammar.max_count_cells = " + std::to_string(config.grammar_max_count_cells) + "\n";
  out += "table.max_cells = " + std::to_string(config.table_max_cells) + "\n";
  out += "search.max_candidates = " + std::to_string(config.search_max_candidates) + "\n";
  if (config.search_time_limit_ms) {
    out += "search.time_limit_ms = " + std::to_string(*config.search_time_limit_ms) + "\n";
  }
  return out;
}

}  // namespace iwb::cli
