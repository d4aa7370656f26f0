#include "rigged/phase.hpp"

#include <algorithm>
#include <string>

#include "rigged/configuration.hpp"
#include "rigged/error.hpp"

namespace rigged {

std::int64_t phase(int k, int l, int lp) {
  check_level(k);
  if (l < 1 || l > k || lp < 1 || lp > k) {
    throw InputError("phase indices must lie in [1,k]: l=" + std::to_string(l) +
                     " l'=" + std::to_string(lp) + " k=" + std::to_string(k));
  }
  return 2 * std::min(l, lp) + std::max(l + lp - k, 0);
}

std::int64_t phase_r2(int l, int lp) {
  if (l < 1 || lp < 1) throw InputError("phase indices must be positive");
  return 2 * std::min(l, lp);
}

PhaseTable::PhaseTable(int k) : k_(k) {
  check_level(k);
  entries_.resize(static_cast<std::size_t>(k * k));
  for (int l = 1; l <= k; ++l) {
    for (int lp = 1; lp <= k; ++lp) entries_[static_cast<std::size_t>((l - 1) * k + lp - 1)] = phase(k, l, lp);
  }
}

}  // namespace rigged
