#include "iwb/search/audit.hpp"

#include "iwb/error.hpp"
#include "iwb/qlang/table.hpp"

namespace iwb::search {

std::string_view derivability_name(Derivability d) {
  return d == Derivability::Derivable ? "derivable" : "not-derivable";
}

Derivability decide_fbar(const pi::AxiomPack& pack, const pi::FbarAtom& atom) {
  return pack.contains(atom.x, atom.bit) ? Derivability::Derivable : Derivability::NotDerivable;
}

namespace {

void require_positive(const Natural& x_max) {
  if (x_max < 1) throw DomainError("x_max must be at least 1");
}

}  // namespace

std::vector<Natural> completeness_gap(const pi::AxiomPack& pack, const Natural& x_max) {
  require_positive(x_max);
  std::vector<Natural> gap;
  for (Natural x = 1; x <= x_max; ++x) {
    if (decide_fbar(pack, {x, 0}) == Derivability::NotDerivable &&
        decide_fbar(pack, {x, 1}) == Derivability::NotDerivable) {
      gap.push_back(x);
    }
  }
  return gap;
}

SoundnessReport audit_soundness(const pi::AxiomPack& pack, const TruthOracle& truth) {
  const TruthOracle oracle = truth ? truth : TruthOracle(qlang::fbar_truth);
  SoundnessReport report;
  const Natural extent = pack.extent();
  for (Natural x = 1; x <= extent; ++x) {
    std::optional<int> expected;
    for (int bit = 0; bit <= 1; ++bit) {
      ++report.queries;
      if (decide_fbar(pack, {x, bit}) == Derivability::NotDerivable) continue;
      ++report.derivable;
      if (!expected) expected = oracle(x);
      if (bit != *expected) report.violations.push_back({x, bit});
    }
  }
  return report;
}

ConsistencyReport audit_consistency(const pi::AxiomPack& pack, const Natural& x_max) {
  require_positive(x_max);
  ConsistencyReport report;
  for (Natural x = 1; x <= x_max; ++x) {
    ++report.checked;
    if (decide_fbar(pack, {x, 0}) == Derivability::Derivable &&
        decide_fbar(pack, {x, 1}) == Derivability::Derivable) {
      report.violations.push_back(x);
    }
  }
  return report;
}

}  // namespace iwb::search
