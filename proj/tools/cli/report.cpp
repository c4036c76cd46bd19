#include "cli/report.hpp"

#include <algorithm>

namespace iwb::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "pretty") return Format::Pretty;
  if (name == "csv") return Format::Csv;
  if (name == "json-lines") return Format::JsonLines;
  return std::nullopt;
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::Pretty: return "pretty";
    case Format::Csv: return "csv";
    case Format::JsonLines: return "json-lines";
  }
  return "pretty";
}

namespace {

using Json = nlohmann::ordered_json;

std::string scalar_text(const Json& v, bool quote_blank) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const bool blank = s.empty() || s.find_first_of("\t\n\r") != std::string::npos ||
                       s.front() == ' ' || s.back() == ' ';
    return quote_blank && blank ? v.dump() : s;
  }
  if (v.is_null()) return "-";
  return v.dump();
}

std::string pretty_value(const Json& v) {
  if (!v.is_array()) return scalar_text(v, true);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += scalar_text(v[i], true);
  }
  return out + "]";
}

std::string csv_field(const Json& v) {
  std::string text;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) text += ' ';
      text += scalar_text(v[i], false);
    }
  } else if (!v.is_null()) {
    text = scalar_text(v, false);
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> keys_of(const Json& record) {
  std::vector<std::string> keys;
  for (const auto& item : record.items()) keys.push_back(item.key());
  return keys;
}

std::string emit_pretty(const Report& report) {
  if (report.records.empty()) return report.kind + ": (none)\n";
  std::string out;
  if (report.records.size() == 1) {
    for (const auto& item : report.records.front().items()) {
      out += item.key() + ": " + pretty_value(item.value()) + "\n";
    }
    return out;
  }
  const auto keys = keys_of(report.records.front());
  std::vector<std::vector<std::string>> cells;
  cells.push_back(keys);
  for (const auto& record : report.records) {
    std::vector<std::string> row;
    for (const auto& key : keys) row.push_back(record.contains(key) ? pretty_value(record[key]) : "-");
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string emit_csv(const Report& report) {
  if (report.records.empty()) return "";
  const auto keys = keys_of(report.records.front());
  std::string out;
  for (std::size_t c = 0; c < keys.size(); ++c) out += (c ? "," : "") + keys[c];
  out += "\n";
  for (const auto& record : report.records) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      if (c != 0) out += ",";
      if (record.contains(keys[c])) out += csv_field(record[keys[c]]);
    }
    out += "\n";
  }
  return out;
}

std::string emit_json_lines(const Report& report) {
  std::string out;
  for (const auto& record : report.records) {
    Json line = {{"report", report.kind}};
    for (const auto& item : record.items()) line[item.key()] = item.value();
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  switch (format) {
    case Format::Pretty: return emit_pretty(report);
    case Format::Csv: return emit_csv(report);
    case Format::JsonLines: return emit_json_lines(report);
  }
  return {};
}

}  // namespace iwb::cli
