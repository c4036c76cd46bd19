#include "iwb/pi/axiom_pack.hpp"

#include "iwb/error.hpp"

namespace iwb::pi {

void AxiomPack::add(const Natural& x, int bit) {
  if (x < 1) throw DomainError("pack entry x must be positive");
  if (bit != 0 && bit != 1) throw DomainError("pack entry bit must be 0 or 1");
  unsigned& mask = masks_[x];
  const unsigned flag = 1u << bit;
  if ((mask & flag) == 0) {
    mask |= flag;
    ++size_;
  }
}

bool AxiomPack::contains(const Natural& x, int bit) const {
  if (bit != 0 && bit != 1) return false;
  auto it = masks_.find(x);
  return it != masks_.end() && (it->second & (1u << bit)) != 0;
}

Natural AxiomPack::extent() const { return masks_.empty() ? Natural(0) : masks_.rbegin()->first; }

std::vector<AxiomPack::Entry> AxiomPack::entries() const {
  std::vector<Entry> out;
  out.reserve(size_);
  for (const auto& [x, mask] : masks_) {
    for (int bit = 0; bit <= 1; ++bit) {
      if (mask & (1u << bit)) out.push_back(Entry{x, bit});
    }
  }
  return out;
}

AxiomPack make_axiom_pack(std::size_t n, const qlang::TableLimits& limits) {
  AxiomPack pack;
  if (n == 0) return pack;
  const auto bits = qlang::diagonal_flip(qlang::diagonal(n, limits));
  for (std::size_t i = 0; i < n; ++i) pack.add(Natural(i + 1), bits[i]);
  return pack;
}

}  // namespace iwb::pi
