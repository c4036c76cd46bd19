#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace iwb::cli {

enum class Format { Pretty, Csv, JsonLines };

std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format format);

/// A module result as flat records with a fixed key order. Values are
/// scalars or arrays of scalars.
struct Report {
  std::string kind;
  std::vector<nlohmann::ordered_json> records;
};

/// pretty: one record as `key: value` lines, several as a space-aligned
///         table under a header row.
/// csv: a header row of keys, then one row per record; arrays are
///      space-joined.
/// json-lines: one object per record with `"report": kind` first.
std::string emit_report(const Report& report, Format format);

}  // namespace iwb::cli
