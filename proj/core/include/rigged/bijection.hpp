#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rigged/configuration.hpp"

namespace rigged {

struct RiggedPart {
  int weight = 1;
  std::int64_t rigging = 0;

  bool operator==(const RiggedPart&) const = default;
  auto operator<=>(const RiggedPart&) const = default;
};

/// A partition with riggings. Parts are stored with weights weakly
/// decreasing and, among parts of equal weight, riggings weakly decreasing.
/// The empty partition is allowed.
class RiggedPartition {
 public:
  RiggedPartition() = default;

  /// Throws InputError unless `parts` is already in canonical order with all
  /// weights >= 1.
  explicit RiggedPartition(std::vector<RiggedPart> parts);

  const std::vector<RiggedPart>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest_weight() const noexcept { return parts_.empty() ? 0 : parts_.front().weight; }

  std::vector<int> weights() const;
  std::vector<std::int64_t> riggings() const;

  /// Sum of the weights; equals |a| for a = kappa(*this).
  std::int64_t total_weight() const noexcept;

  /// The parts of weight < l, in order.
  RiggedPartition lighter_than(int l) const;

  bool operator==(const RiggedPartition&) const = default;
  auto operator<=>(const RiggedPartition&) const = default;

 private:
  std::vector<RiggedPart> parts_;
};

/// m_l = #{i : lambda_i = l} for l = 1..k (index l-1).
std::vector<int> multiplicities(std::span<const int> lambda, int k);

/// E0(lambda) = sum_{i<j} A_{lambda_i, lambda_j}.
std::int64_t e0(std::span<const int> lambda, int k);

/// E1(rho) = sum_i rho_i.
std::int64_t e1(std::span<const std::int64_t> rho) noexcept;

/// E0 + E1; equals E(kappa(rp)).
std::int64_t degree(const RiggedPartition& rp, int k);

/// The forward map: repeatedly separates the heaviest particle and records
/// its rigging. Works for any finite (k,3)-admissible configuration,
/// including ones with negative support.
RiggedPartition iota(const Configuration& a, int k);

/// The inverse map. Throws InputError when a weight exceeds k.
Configuration kappa(const RiggedPartition& rp, int k);

}  // namespace rigged
