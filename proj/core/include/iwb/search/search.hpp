#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "iwb/natural.hpp"
#include "iwb/pi/axiom_pack.hpp"
#include "iwb/pi/derivation.hpp"

namespace iwb::search {

/// Unset limits are infinite; at least one must be set.
struct SearchBudget {
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::chrono::milliseconds> time_limit;

  /// Throws DomainError when both limits are unset.
  void validate() const;
};

enum class SearchMode {
  Literal,     // token strings over the lexicon, parsed then checked
  Structured,  // well-formed tight derivations only
};

enum class Outcome { DerivedTarget, DerivedNegation, Exhausted };

std::string_view outcome_name(Outcome outcome);
std::string_view mode_name(SearchMode mode);

struct SearchVerdict {
  Outcome outcome = Outcome::Exhausted;
  std::optional<pi::Derivation> derivation;  // set unless Exhausted
  std::uint64_t candidates = 0;              // candidates generated, the winner included
  /// Exhausted because the candidate space ran out rather than the budget.
  bool space_exhausted = false;
};

/// Generates candidates in shortlex order and checks each against `target`
/// and, for f̄-atoms, against its negation. The first success wins.
///
/// Literal mode starts at rank `from` of the token enumeration. Structured
/// mode ignores `from`; its candidates are the derivations whose non-final
/// lines are distinct and each used by a later line, whose header lists
/// the target's variables, and whose terms are subterms of the target. They
/// come in the same order literal mode would reach them.
SearchVerdict search(const pi::AxiomPack& pack, const pi::Statement& target,
                     const SearchBudget& budget, SearchMode mode, const Natural& from = 0);

}  // namespace iwb::search
