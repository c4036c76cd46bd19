#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iwb/error.hpp"
#include "iwb/pi/statement.hpp"

namespace iwb::pi {

/// `metavariable := term` inside an axiom instance.
struct Binding {
  std::string metavariable;
  Term value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// `[premise]`: an integer typing of a header variable.
struct Premise {
  friend bool operator==(const Premise&, const Premise&) = default;
};

/// `[axiom A1 {t := w}]` or `[axiom FBAR(3)]`.
struct AxiomInstance {
  std::string schema;
  std::vector<Binding> substitution;
  std::optional<Natural> pack_index;  // FBAR(i) only
  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;
};

/// `[rule R1 4,5]`.
struct RuleApplication {
  std::string rule;
  std::vector<std::size_t> premises;
  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

using Justification = std::variant<Premise, AxiomInstance, RuleApplication>;

struct DerivationLine {
  std::size_t index = 0;
  Statement statement;
  Justification justification;
  friend bool operator==(const DerivationLine&, const DerivationLine&) = default;
};

struct Derivation {
  std::vector<std::string> variables;  // declared integer variables
  std::vector<DerivationLine> lines;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// A derivation together with the statement it claims to derive.
struct DerivationFile {
  Derivation derivation;
  Statement target;
  friend bool operator==(const DerivationFile&, const DerivationFile&) = default;
};

std::string print(const Justification& justification);
std::string print(const DerivationLine& line);

/// Header line plus numbered lines, joined by '\n', no trailing newline:
///
///     vars: w
///     1. int(w) [premise]
std::string print_body(const Derivation& derivation);

/// Body with a `target:` line after the header, newline-terminated.
std::string print_file(const DerivationFile& file);

/// Parses a body. A trailing newline and '\r' line endings are tolerated.
ParseResult<Derivation> parse_body(std::string_view text);
ParseResult<DerivationFile> parse_file(std::string_view text);
DerivationFile parse_file_or_throw(std::string_view text);

}  // namespace iwb::pi
