#include "iwb/pi/derivation.hpp"

#include <limits>
#include <set>

#include "pi_parse.hpp"

namespace iwb::pi {

using iwb::detail::TextCursor;

std::string print(const Justification& justification) {
  struct Printer {
    std::string operator()(const Premise&) const { return "[premise]"; }
    std::string operator()(const AxiomInstance& a) const {
      std::string out = "[axiom " + a.schema;
      if (a.pack_index) out += "(" + a.pack_index->str() + ")";
      if (!a.substitution.empty() || !a.pack_index) {
        out += " {";
        for (std::size_t i = 0; i < a.substitution.size(); ++i) {
          if (i != 0) out += ", ";
          out += a.substitution[i].metavariable + " := " + a.substitution[i].value.print();
        }
        out += "}";
      }
      return out + "]";
    }
    std::string operator()(const RuleApplication& r) const {
      std::string out = "[rule " + r.rule + " ";
      for (std::size_t i = 0; i < r.premises.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(r.premises[i]);
      }
      return out + "]";
    }
  };
  return std::visit(Printer{}, justification);
}

std::string print(const DerivationLine& line) {
  return std::to_string(line.index) + ". " + print(line.statement) + " " +
         print(line.justification);
}

namespace {

std::string header_line(const Derivation& d) {
  std::string out = "vars:";
  for (std::size_t i = 0; i < d.variables.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += d.variables[i];
  }
  return out;
}

bool at_line_end(const TextCursor& cursor) { return cursor.at_end() || cursor.peek() == '\n'; }

bool end_line(TextCursor& cursor) {
  cursor.skip_blanks();
  if (cursor.at_end()) return true;
  return cursor.expect("\n");
}

std::optional<std::size_t> parse_index_at(TextCursor& cursor) {
  const std::size_t at = cursor.pos();
  auto n = detail::parse_numeral_at(cursor);
  if (!n) return std::nullopt;
  if (*n > std::numeric_limits<std::uint32_t>::max()) {
    cursor.reset(at);
    cursor.fail("", "line number out of range");
    return std::nullopt;
  }
  return static_cast<std::size_t>(*n);
}

std::optional<std::string> parse_schema_id_at(TextCursor& cursor) {
  std::string id;
  if (!(cursor.peek() >= 'A' && cursor.peek() <= 'Z')) {
    cursor.fail("schema name");
    return std::nullopt;
  }
  while ((cursor.peek() >= 'A' && cursor.peek() <= 'Z') || iwb::detail::is_digit(cursor.peek())) {
    id += cursor.peek();
    cursor.reset(cursor.pos() + 1);
  }
  return id;
}

std::optional<std::vector<std::string>> parse_header_at(TextCursor& cursor) {
  if (!cursor.expect("vars:")) return std::nullopt;
  std::vector<std::string> vars;
  std::set<std::string> seen;
  cursor.skip_blanks();
  if (at_line_end(cursor)) return vars;
  while (true) {
    const std::size_t at = cursor.pos();
    auto name = detail::parse_identifier_at(cursor);
    if (!name) return std::nullopt;
    if (!seen.insert(*name).second) {
      cursor.reset(at);
      cursor.fail("", "variable '" + *name + "' declared twice");
      return std::nullopt;
    }
    vars.push_back(std::move(*name));
    cursor.skip_blanks();
    if (!cursor.consume(",")) {
      cursor.fail(",");
      return vars;
    }
    cursor.skip_blanks();
  }
}

std::optional<Justification> parse_justification_at(TextCursor& cursor) {
  if (cursor.consume("premise")) return Justification{Premise{}};
  if (cursor.consume("axiom")) {
    cursor.skip_blanks();
    AxiomInstance axiom;
    auto id = parse_schema_id_at(cursor);
    if (!id) return std::nullopt;
    axiom.schema = std::move(*id);
    cursor.skip_blanks();
    if (cursor.consume("(")) {
      cursor.skip_blanks();
      auto n = detail::parse_numeral_at(cursor);
      if (!n) return std::nullopt;
      axiom.pack_index = std::move(*n);
      cursor.skip_blanks();
      if (!cursor.expect(")")) return std::nullopt;
      cursor.skip_blanks();
      if (cursor.peek() != '{') return Justification{std::move(axiom)};
    }
    if (!cursor.expect("{")) return std::nullopt;
    cursor.skip_blanks();
    if (cursor.consume("}")) return Justification{std::move(axiom)};
    while (true) {
      auto meta = detail::parse_identifier_at(cursor);
      if (!meta) return std::nullopt;
      cursor.skip_blanks();
      if (!cursor.expect(":=")) return std::nullopt;
      cursor.skip_blanks();
      auto term = detail::parse_term_at(cursor);
      if (!term) return std::nullopt;
      axiom.substitution.push_back(Binding{std::move(*meta), std::move(*term)});
      cursor.skip_blanks();
      if (cursor.consume("}")) return Justification{std::move(axiom)};
      cursor.fail("}");
      if (!cursor.expect(",")) return std::nullopt;
      cursor.skip_blanks();
    }
  }
  if (cursor.consume("rule")) {
    cursor.skip_blanks();
    RuleApplication rule;
    auto id = parse_schema_id_at(cursor);
    if (!id) return std::nullopt;
    rule.rule = std::move(*id);
    cursor.skip_blanks();
    while (true) {
      auto ref = parse_index_at(cursor);
      if (!ref) return std::nullopt;
      rule.premises.push_back(*ref);
      cursor.skip_blanks();
      if (!cursor.consume(",")) {
        cursor.fail(",");
        return Justification{std::move(rule)};
      }
      cursor.skip_blanks();
    }
  }
  cursor.fail("premise");
  cursor.fail("axiom");
  cursor.fail("rule");
  return std::nullopt;
}

std::optional<DerivationLine> parse_line_at(TextCursor& cursor) {
  DerivationLine line;
  auto index = parse_index_at(cursor);
  if (!index) return std::nullopt;
  line.index = *index;
  if (!cursor.expect(".")) return std::nullopt;
  cursor.skip_blanks();
  auto statement = detail::parse_statement_at(cursor);
  if (!statement) return std::nullopt;
  line.statement = std::move(*statement);
  cursor.skip_blanks();
  if (!cursor.expect("[")) return std::nullopt;
  cursor.skip_blanks();
  auto justification = parse_justification_at(cursor);
  if (!justification) return std::nullopt;
  line.justification = std::move(*justification);
  cursor.skip_blanks();
  if (!cursor.expect("]")) return std::nullopt;
  return line;
}

/// Shared by body and file parsing; `target` is filled when non-null.
std::optional<Derivation> parse_derivation_at(TextCursor& cursor, std::optional<Statement>* target) {
  Derivation d;
  auto vars = parse_header_at(cursor);
  if (!vars) return std::nullopt;
  d.variables = std::move(*vars);
  if (!end_line(cursor)) return std::nullopt;

  if (target != nullptr) {
    if (!cursor.expect("target:")) return std::nullopt;
    cursor.skip_blanks();
    auto statement = detail::parse_statement_at(cursor);
    if (!statement) return std::nullopt;
    *target = std::move(*statement);
    if (!end_line(cursor)) return std::nullopt;
  }

  while (true) {
    cursor.skip_blanks();
    if (cursor.consume("\n")) continue;
    if (cursor.at_end()) break;
    auto line = parse_line_at(cursor);
    if (!line) return std::nullopt;
    d.lines.push_back(std::move(*line));
    if (!end_line(cursor)) return std::nullopt;
  }
  return d;
}

std::string strip_carriage_returns(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '\r') out += c;
  }
  return out;
}

}  // namespace

std::string print_body(const Derivation& derivation) {
  std::string out = header_line(derivation);
  for (const auto& line : derivation.lines) {
    out += '\n';
    out += print(line);
  }
  return out;
}

std::string print_file(const DerivationFile& file) {
  std::string out = header_line(file.derivation) + "\ntarget: " + print(file.target) + "\n";
  for (const auto& line : file.derivation.lines) out += print(line) + "\n";
  return out;
}

ParseResult<Derivation> parse_body(std::string_view text) {
  std::string storage;
  if (text.find('\r') != std::string_view::npos) {
    storage = strip_carriage_returns(text);
    text = storage;
  }
  TextCursor cursor(text);
  auto d = parse_derivation_at(cursor, nullptr);
  if (!d) return cursor.error();
  return std::move(*d);
}

ParseResult<DerivationFile> parse_file(std::string_view text) {
  std::string storage;
  if (text.find('\r') != std::string_view::npos) {
    storage = strip_carriage_returns(text);
    text = storage;
  }
  TextCursor cursor(text);
  std::optional<Statement> target;
  auto d = parse_derivation_at(cursor, &target);
  if (!d) return cursor.error();
  return DerivationFile{std::move(*d), std::move(*target)};
}

DerivationFile parse_file_or_throw(std::string_view text) { return value_or_throw(parse_file(text)); }

}  // namespace iwb::pi
