#pragma once

#include <cstdint>
#include <vector>

namespace rigged {

/// Phase shift A_{l,l'} = 2 min(l,l') + (l+l'-k)_+ for 1 <= l,l' <= k.
/// Throws InputError outside that range.
std::int64_t phase(int k, int l, int lp);

/// r = 2 companion G_{l,l'} = 2 min(l,l').
std::int64_t phase_r2(int l, int lp);

/// The k x k matrix of phase shifts, indexed from 1.
class PhaseTable {
 public:
  explicit PhaseTable(int k);

  int level() const noexcept { return k_; }
  std::int64_t operator()(int l, int lp) const noexcept {
    return entries_[static_cast<std::size_t>((l - 1) * k_ + (lp - 1))];
  }

 private:
  int k_;
  std::vector<std::int64_t> entries_;
};

}  // namespace rigged
