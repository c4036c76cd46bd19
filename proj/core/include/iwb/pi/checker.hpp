#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "iwb/pi/axiom_pack.hpp"
#include "iwb/pi/derivation.hpp"

namespace iwb::pi {

enum class RejectReason {
  EmptyDerivation,     // no lines at all
  BadLineNumber,       // index differs from position
  UndeclaredVariable,  // statement mentions a variable missing from the header
  PremiseNotDeclared,  // [premise] on anything but int(v) for a header variable v
  UnknownSchema,
  BadSubstitution,     // substitution incomplete, ill-typed, or not producing the statement
  MissingPremise,      // axiom side premise int(t) not on an earlier line
  NotInPack,           // FBAR(i) entry absent from the pack
  UnknownRule,
  BadReference,        // wrong arity or line 0
  ForwardReference,    // references the current or a later line
  RuleMismatch,        // referenced lines do not fit the rule's pattern
  WrongTarget,         // last line differs from the target
};

/// Stable machine-readable code, e.g. "forward-reference".
std::string_view reason_code(RejectReason reason);

struct Accept {
  friend bool operator==(const Accept&, const Accept&) = default;
};

struct Reject {
  std::size_t line = 0;  // 1-based; 0 when the derivation is empty
  RejectReason reason{};
  std::string detail;
  friend bool operator==(const Reject&, const Reject&) = default;
};

using CheckResult = std::variant<Accept, Reject>;

inline bool accepted(const CheckResult& result) { return std::holds_alternative<Accept>(result); }

/// Single pass over the lines; stops at the first failing one.
CheckResult check_derivation(const AxiomPack& pack, const Derivation& derivation,
                             const Statement& target);

}  // namespace iwb::pi
