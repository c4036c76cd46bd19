#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/enumerator/alphabet.hpp"
#include "iwb/enumerator/grammar.hpp"
#include "iwb/error.hpp"
#include "iwb/natural.hpp"

// Q-lang: a loop-free language of boolean tests over natural arithmetic.
//
//   prog    ::= bexp
//   bexp    ::= '!' bexp | '(' bexp '&' bexp ')' | '(' bexp '|' bexp ')'
//             | '(' aexp cmp aexp ')'
//   cmp     ::= '=' | '>'
//   aexp    ::= 'x' | numeral | '(' aexp '+' aexp ')' | '(' aexp '%' aexp ')'
//   numeral ::= "0" | [1-9][0-9]*
//
// Every program terminates on every input; a % 0 is defined as 0.

namespace iwb::qlang {

/// Symbol order `x 0 1 2 3 4 5 6 7 8 9 ( ) + % = > ! & |`.
const enumerator::Alphabet& alphabet();

/// Grammar text above, over `alphabet()`. Unambiguous.
const enumerator::Grammar& grammar();

/// Shared enumerator over `grammar()`.
const enumerator::GrammarEnumerator& program_enumerator();

enum class NodeKind : std::uint8_t {
  Input,    // x
  Literal,  // numeral
  Add,
  Mod,
  Equal,
  Greater,
  Not,
  And,
  Or,
};

struct Node {
  NodeKind kind = NodeKind::Input;
  Natural literal = 0;         // Literal only
  std::uint32_t lhs = 0;       // operand indices into Program::nodes()
  std::uint32_t rhs = 0;
};

/// A well-formed Q-lang program. Nodes are stored in post-order; the root is last.
class Program {
 public:
  const std::string& source() const noexcept { return source_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::uint32_t root() const noexcept { return static_cast<std::uint32_t>(nodes_.size() - 1); }

  /// Canonical fully parenthesized text, rebuilt from the tree.
  std::string print() const;

 private:
  friend ParseResult<Program> parse(std::string_view text);
  std::string source_;
  std::vector<Node> nodes_;
};

ParseResult<Program> parse(std::string_view text);
Program parse_or_throw(std::string_view text);

/// Grammar membership without building a tree.
bool is_valid(std::string_view text);

/// Output bit of `program` on input x (x >= 1, else DomainError).
int eval(const Program& program, const Natural& x);

}  // namespace iwb::qlang
