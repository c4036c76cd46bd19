#include "iwb/pi/checker.hpp"

#include <optional>
#include <set>
#include <unordered_set>

namespace iwb::pi {

std::string_view reason_code(RejectReason reason) {
  switch (reason) {
    case RejectReason::EmptyDerivation: return "empty-derivation";
    case RejectReason::BadLineNumber: return "bad-line-number";
    case RejectReason::UndeclaredVariable: return "undeclared-variable";
    case RejectReason::PremiseNotDeclared: return "premise-not-declared";
    case RejectReason::UnknownSchema: return "unknown-schema";
    case RejectReason::BadSubstitution: return "bad-substitution";
    case RejectReason::MissingPremise: return "missing-premise";
    case RejectReason::NotInPack: return "not-in-pack";
    case RejectReason::UnknownRule: return "unknown-rule";
    case RejectReason::BadReference: return "bad-reference";
    case RejectReason::ForwardReference: return "forward-reference";
    case RejectReason::RuleMismatch: return "rule-mismatch";
    case RejectReason::WrongTarget: return "wrong-target";
  }
  return "unknown";
}

namespace {

/// Value bound to each expected metavariable, or nullopt if the
/// substitution binds anything else or misses one.
std::optional<std::vector<Term>> bind(const std::vector<Binding>& substitution,
                                      std::initializer_list<std::string_view> names) {
  if (substitution.size() != names.size()) return std::nullopt;
  std::vector<Term> out;
  for (std::string_view name : names) {
    const Binding* found = nullptr;
    for (const auto& b : substitution) {
      if (b.metavariable == name) {
        if (found != nullptr) return std::nullopt;
        found = &b;
      }
    }
    if (found == nullptr) return std::nullopt;
    out.push_back(found->value);
  }
  return out;
}

class Checker {
 public:
  Checker(const AxiomPack& pack, const Derivation& d) : pack_(pack), d_(d) {
    declared_.insert(d.variables.begin(), d.variables.end());
  }

  CheckResult run(const Statement& target) {
    if (d_.lines.empty()) return Reject{0, RejectReason::EmptyDerivation, "derivation has no lines"};
    for (std::size_t pos = 0; pos < d_.lines.size(); ++pos) {
      const auto& line = d_.lines[pos];
      const std::size_t n = pos + 1;
      if (line.index != n) {
        return Reject{n, RejectReason::BadLineNumber,
                      "expected line " + std::to_string(n) + ", found " + std::to_string(line.index)};
      }
      if (auto reject = check_line(n, line)) return *reject;
      proved_.insert(print(line.statement));
    }
    const auto& last = d_.lines.back();
    if (!(last.statement == target)) {
      return Reject{d_.lines.size(), RejectReason::WrongTarget,
                    "derived '" + print(last.statement) + "', target is '" + print(target) + "'"};
    }
    return Accept{};
  }

 private:
  std::optional<Reject> check_line(std::size_t n, const DerivationLine& line) {
    if (std::holds_alternative<Premise>(line.justification)) {
      const auto* typing = std::get_if<IntTyping>(&line.statement);
      if (typing == nullptr || typing->term.kind() != Term::Kind::Variable ||
          declared_.count(typing->term.name()) == 0) {
        return Reject{n, RejectReason::PremiseNotDeclared,
                      "'" + print(line.statement) + "' is not a header typing"};
      }
      return std::nullopt;
    }
    for (const auto& v : variables_of(line.statement)) {
      if (declared_.count(v) == 0) {
        return Reject{n, RejectReason::UndeclaredVariable, "variable '" + v + "' is not declared"};
      }
    }
    if (const auto* axiom = std::get_if<AxiomInstance>(&line.justification)) {
      return check_axiom(n, line.statement, *axiom);
    }
    return check_rule(n, line.statement, std::get<RuleApplication>(line.justification));
  }

  std::optional<Reject> require_typed(std::size_t n, const Term& t) const {
    const std::string wanted = "int(" + t.print() + ")";
    if (proved_.count(wanted) != 0) return std::nullopt;
    return Reject{n, RejectReason::MissingPremise, "no earlier line '" + wanted + "'"};
  }

  std::optional<Reject> check_axiom(std::size_t n, const Statement& s, const AxiomInstance& a) const {
    auto mismatch = [&](const std::string& why) {
      return Reject{n, RejectReason::BadSubstitution, why};
    };
    if (a.schema == "FBAR") {
      if (!a.pack_index || !a.substitution.empty()) return mismatch("FBAR takes a pack index only");
      const auto* atom = std::get_if<FbarAtom>(&s);
      if (atom == nullptr || atom->x != *a.pack_index) {
        return mismatch("FBAR(" + a.pack_index->str() + ") concludes an fbar(" +
                        a.pack_index->str() + ") atom");
      }
      if (!pack_.contains(atom->x, atom->bit)) {
        return Reject{n, RejectReason::NotInPack, "'" + print(s) + "' is not a pack entry"};
      }
      return std::nullopt;
    }
    if (a.schema != "A1" && a.schema != "A2" && a.schema != "A3") {
      return Reject{n, RejectReason::UnknownSchema, "no axiom schema '" + a.schema + "'"};
    }
    if (a.pack_index) return mismatch(a.schema + " takes no index");

    if (a.schema == "A1") {
      auto v = bind(a.substitution, {"t"});
      if (!v) return mismatch("A1 binds exactly t");
      const Term& t = (*v)[0];
      const Statement expected = Greater{Term::sum(t, Term::numeral(1)), t};
      if (!(s == expected)) return mismatch("A1 {t := " + t.print() + "} concludes '" + print(expected) + "'");
      return require_typed(n, t);
    }
    if (a.schema == "A2") {
      auto v = bind(a.substitution, {"t1", "t2"});
      if (!v) return mismatch("A2 binds exactly t1 and t2");
      const Statement expected = IntTyping{Term::sum((*v)[0], (*v)[1])};
      if (!(s == expected)) return mismatch("A2 concludes '" + print(expected) + "'");
      if (auto r = require_typed(n, (*v)[0])) return r;
      return require_typed(n, (*v)[1]);
    }
    auto v = bind(a.substitution, {"c"});
    if (!v) return mismatch("A3 binds exactly c");
    if ((*v)[0].kind() != Term::Kind::Numeral) return mismatch("A3 needs a numeral for c");
    const Statement expected = IntTyping{(*v)[0]};
    if (!(s == expected)) return mismatch("A3 concludes '" + print(expected) + "'");
    return std::nullopt;
  }

  std::optional<Reject> check_rule(std::size_t n, const Statement& s, const RuleApplication& r) const {
    if (r.rule != "R1") return Reject{n, RejectReason::UnknownRule, "no rule '" + r.rule + "'"};
    if (r.premises.size() != 2) return Reject{n, RejectReason::BadReference, "R1 cites exactly two lines"};
    for (std::size_t ref : r.premises) {
      if (ref == 0) return Reject{n, RejectReason::BadReference, "line 0 does not exist"};
      if (ref >= n) {
        return Reject{n, RejectReason::ForwardReference,
                      "line " + std::to_string(ref) + " is not earlier than line " + std::to_string(n)};
      }
    }
    const auto* first = std::get_if<Greater>(&d_.lines[r.premises[0] - 1].statement);
    const auto* second = std::get_if<Greater>(&d_.lines[r.premises[1] - 1].statement);
    if (first == nullptr || second == nullptr) {
      return Reject{n, RejectReason::RuleMismatch, "R1 cites two '>' lines"};
    }
    if (!(first->rhs == second->lhs)) {
      return Reject{n, RejectReason::RuleMismatch,
                    "'" + first->rhs.print() + "' and '" + second->lhs.print() + "' differ"};
    }
    const Statement expected = Greater{first->lhs, second->rhs};
    if (!(s == expected)) {
      return Reject{n, RejectReason::RuleMismatch, "R1 concludes '" + print(expected) + "'"};
    }
    return std::nullopt;
  }

  const AxiomPack& pack_;
  const Derivation& d_;
  std::set<std::string> declared_;
  std::unordered_set<std::string> proved_;
};

}  // namespace

CheckResult check_derivation(const AxiomPack& pack, const Derivation& derivation,
                             const Statement& target) {
  return Checker(pack, derivation).run(target);
}

}  // namespace iwb::pi
