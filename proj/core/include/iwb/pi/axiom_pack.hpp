#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "iwb/natural.hpp"
#include "iwb/qlang/table.hpp"

namespace iwb::pi {

/// Finite set of f̄-atom axioms `fbar(x) is b`. Immutable once handed to the
/// checker. Hand-built packs may hold false or contradictory entries; only
/// make_axiom_pack guarantees truth.
class AxiomPack {
 public:
  AxiomPack() = default;

  void add(const Natural& x, int bit);
  bool contains(const Natural& x, int bit) const;

  /// Largest x with an entry, 0 for the empty pack.
  Natural extent() const;
  /// Number of (x, bit) entries.
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  struct Entry {
    Natural x;
    int bit;
  };
  /// Entries ordered by (x, bit).
  std::vector<Entry> entries() const;

 private:
  std::map<Natural, unsigned> masks_;  // bit b present <=> mask & (1 << b)
  std::size_t size_ = 0;
};

/// fbar(i) = fbar_truth(i) for 1 <= i <= n.
AxiomPack make_axiom_pack(std::size_t n, const qlang::TableLimits& limits = {});

}  // namespace iwb::pi
