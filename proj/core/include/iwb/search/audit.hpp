#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "iwb/natural.hpp"
#include "iwb/pi/axiom_pack.hpp"
#include "iwb/pi/statement.hpp"

namespace iwb::search {

enum class Derivability { Derivable, NotDerivable };

std::string_view derivability_name(Derivability d);

/// Exact, not budgeted: FBAR is the only producer of f̄-atoms and no rule
/// consumes one, so an atom is derivable iff it is a pack entry.
Derivability decide_fbar(const pi::AxiomPack& pack, const pi::FbarAtom& atom);

/// x in 1..x_max for which neither `fbar(x) is 0` nor `fbar(x) is 1` is
/// derivable. Throws DomainError if x_max < 1.
std::vector<Natural> completeness_gap(const pi::AxiomPack& pack, const Natural& x_max);

using TruthOracle = std::function<int(const Natural&)>;

struct SoundnessViolation {
  Natural x;
  int bit = 0;  // derivable, yet different from the true value
};

struct SoundnessReport {
  std::size_t queries = 0;
  std::size_t derivable = 0;
  std::vector<SoundnessViolation> violations;
};

/// Queries both bits for every x up to the pack's extent and compares
/// derivable atoms with `truth` (fbar_truth by default).
SoundnessReport audit_soundness(const pi::AxiomPack& pack, const TruthOracle& truth = {});

struct ConsistencyReport {
  std::size_t checked = 0;
  std::vector<Natural> violations;  // x with both bits derivable
};

/// Throws DomainError if x_max < 1.
ConsistencyReport audit_consistency(const pi::AxiomPack& pack, const Natural& x_max);

}  // namespace iwb::search
