#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/enumerator/alphabet.hpp"
#include "iwb/natural.hpp"

namespace iwb::enumerator {

struct GrammarSymbol {
  enum class Kind : std::uint8_t { Terminal, Nonterminal };

  Kind kind = Kind::Terminal;
  std::uint32_t id = 0;  // alphabet index for terminals

  static GrammarSymbol terminal(std::uint32_t id) { return {Kind::Terminal, id}; }
  static GrammarSymbol nonterminal(std::uint32_t id) { return {Kind::Nonterminal, id}; }
  bool is_terminal() const noexcept { return kind == Kind::Terminal; }

  friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

struct Production {
  std::uint32_t lhs = 0;
  std::vector<GrammarSymbol> rhs;
};

/// Context-free grammar whose terminals are the symbols of an Alphabet.
///
/// Restrictions checked at construction: no empty right-hand sides, no cycle
/// made only of unit productions (A -> B -> ... -> A), and the start symbol
/// derives at least one finite word. Together these bound the number of
/// derivations of any fixed-length word, which is what the counting relies on.
class Grammar {
 public:
  Grammar(Alphabet terminals, std::vector<std::string> nonterminals,
          std::vector<Production> productions, std::uint32_t start);

  /// BNF-style text, one rule per line (continuation lines start with '|'):
  ///
  ///     expr ::= 'x' | '(' expr '+' expr ')'
  ///
  /// Quoted text is a sequence of terminal symbols; bare identifiers are
  /// nonterminals. The first rule's left-hand side is the start symbol.
  /// Lines starting with '#' are comments.
  static Grammar parse(Alphabet terminals, std::string_view text);

  const Alphabet& terminals() const noexcept { return terminals_; }
  std::size_t nonterminal_count() const noexcept { return nonterminals_.size(); }
  const std::string& nonterminal_name(std::uint32_t id) const { return nonterminals_.at(id); }
  std::uint32_t start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  const std::vector<std::size_t>& productions_of(std::uint32_t nonterminal) const {
    return by_lhs_.at(nonterminal);
  }

  /// Nonterminals ordered so that for every unit production A -> B, B precedes A.
  const std::vector<std::uint32_t>& unit_order() const noexcept { return unit_order_; }

  bool is_infinite() const noexcept { return infinite_; }
  /// Length of the longest word; nullopt for infinite languages.
  std::optional<std::size_t> max_word_length() const noexcept { return max_length_; }

 private:
  void validate();

  Alphabet terminals_;
  std::vector<std::string> nonterminals_;
  std::vector<Production> productions_;
  std::vector<std::vector<std::size_t>> by_lhs_;
  std::uint32_t start_;
  std::vector<std::uint32_t> unit_order_;
  bool infinite_ = false;
  std::optional<std::size_t> max_length_;
};

struct GrammarLimits {
  /// Upper bound on nonterminals x (max length + 1) count-table entries.
  std::size_t max_count_cells = std::size_t{1} << 22;
};

/// Counting and length-lex ranking over the words of a Grammar.
///
/// Counts are derivation counts, which equal distinct-word counts exactly when
/// the grammar is unambiguous. `first_ambiguity` probes that property.
/// Thread-safe: the lazily grown count table is guarded internally.
class GrammarEnumerator {
 public:
  explicit GrammarEnumerator(Grammar grammar, GrammarLimits limits = {});

  GrammarEnumerator(const GrammarEnumerator&) = delete;
  GrammarEnumerator& operator=(const GrammarEnumerator&) = delete;

  const Grammar& grammar() const noexcept { return grammar_; }

  /// Words of exactly `length` symbols. Throws ResourceLimitError if the
  /// count table would exceed the configured budget.
  Natural count(std::size_t length) const;

  /// The k-th (0-based) word in length-then-lex order. Throws DomainError when
  /// a finite language has no k-th word.
  std::string unrank(const Natural& k) const;

  /// Position of `word` among the grammar's words; nullopt if not a word.
  std::optional<Natural> rank(std::string_view word) const;

  bool recognizes(std::string_view word) const;

  /// First word (in order) of length <= max_length with more than one
  /// derivation, if any.
  std::optional<std::string> first_ambiguity(std::size_t max_length) const;

 private:
  using Stack = std::vector<GrammarSymbol>;  // top of stack at back()
  using Configs = std::map<Stack, Natural>;

  void ensure_counts(std::size_t length) const;
  const std::vector<Natural>& sequence_counts(const Stack& stack, std::size_t length) const;
  Natural completions(const Stack& stack, std::size_t length) const;
  /// Expands every configuration until a terminal is on top, grouping the
  /// popped stacks by that terminal. `remaining` includes the terminal.
  std::vector<Configs> step(const Configs& configs, std::size_t remaining) const;
  std::vector<std::size_t> unrank_digits(Natural k) const;

  Grammar grammar_;
  GrammarLimits limits_;

  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::vector<Natural>> counts_;  // [nonterminal][length]
  mutable std::size_t counted_upto_ = 0;
  mutable std::map<Stack, std::vector<Natural>> sequence_memo_;
};

Natural grammar_count(const GrammarEnumerator& enumerator, std::size_t length);
std::string grammar_unrank(const GrammarEnumerator& enumerator, const Natural& k);

}  // namespace iwb::enumerator
