#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "iwb/error.hpp"
#include "iwb/natural.hpp"

namespace iwb::pi {

/// Immutable term: a variable, a numeral, or the sum of two terms.
/// Copies share structure.
class Term {
 public:
  enum class Kind { Variable, Numeral, Sum };

  static Term variable(std::string name);
  static Term numeral(Natural value);
  static Term sum(Term lhs, Term rhs);

  Kind kind() const noexcept;
  const std::string& name() const;     // Variable
  const Natural& value() const;        // Numeral
  const Term& lhs() const;             // Sum
  const Term& rhs() const;             // Sum

  /// Canonical text: a top-level sum is bare, nested sums are parenthesized,
  /// e.g. "(w+1)+1".
  std::string print() const;

  void collect_variables(std::set<std::string>& out) const;
  void collect_subterms(std::set<std::string>& printed, std::vector<Term>& out) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// `fbar(x) is bit`.
struct FbarAtom {
  Natural x;
  int bit = 0;
  friend bool operator==(const FbarAtom&, const FbarAtom&) = default;
};

/// `lhs > rhs`.
struct Greater {
  Term lhs;
  Term rhs;
  friend bool operator==(const Greater&, const Greater&) = default;
};

/// `int(term)`: the term is an integer.
struct IntTyping {
  Term term;
  friend bool operator==(const IntTyping&, const IntTyping&) = default;
};

using Statement = std::variant<FbarAtom, Greater, IntTyping>;

std::string print(const Statement& statement);
std::set<std::string> variables_of(const Statement& statement);

bool is_identifier(std::string_view text);

ParseResult<Term> parse_term(std::string_view text);
ParseResult<Statement> parse_statement(std::string_view text);
Statement parse_statement_or_throw(std::string_view text);

/// Every statement of the grammar can be formed; f̄-atoms for any x >= 1
/// included. Formation says nothing about derivability.
bool can_form(const Statement& statement);

/// `fbar(x) is b` -> `fbar(x) is 1-b`. Throws DomainError for other statements.
FbarAtom negate_fbar(const Statement& statement);

}  // namespace iwb::pi
