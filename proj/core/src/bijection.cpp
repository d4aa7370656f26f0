#include "rigged/bijection.hpp"

#include <algorithm>
#include <string>

#include "rigged/error.hpp"
#include "rigged/moves.hpp"
#include "rigged/phase.hpp"

namespace rigged {

RiggedPartition::RiggedPartition(std::vector<RiggedPart> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].weight < 1) throw InputError("rigged partition weights must be positive");
    if (i == 0) continue;
    const RiggedPart& prev = parts_[i - 1];
    const RiggedPart& cur = parts_[i];
    if (prev.weight < cur.weight) {
      throw InputError("rigged partition weights must be weakly decreasing");
    }
    if (prev.weight == cur.weight && prev.rigging < cur.rigging) {
      throw InputError("riggings of equal weights must be weakly decreasing");
    }
  }
}

std::vector<int> RiggedPartition::weights() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.weight);
  return out;
}

std::vector<std::int64_t> RiggedPartition::riggings() const {
  std::vector<std::int64_t> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.rigging);
  return out;
}

std::int64_t RiggedPartition::total_weight() const noexcept {
  std::int64_t total = 0;
  for (const auto& p : parts_) total += p.weight;
  return total;
}

RiggedPartition RiggedPartition::lighter_than(int l) const {
  RiggedPartition out;
  for (const auto& p : parts_) {
    if (p.weight < l) out.parts_.push_back(p);
  }
  return out;
}

std::vector<int> multiplicities(std::span<const int> lambda, int k) {
  check_level(k);
  std::vector<int> m(static_cast<std::size_t>(k), 0);
  for (int w : lambda) {
    if (w < 1 || w > k) throw InputError("part " + std::to_string(w) + " outside [1,k]");
    ++m[static_cast<std::size_t>(w - 1)];
  }
  return m;
}

std::int64_t e0(std::span<const int> lambda, int k) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) total += phase(k, lambda[i], lambda[j]);
  }
  return total;
}

std::int64_t e1(std::span<const std::int64_t> rho) noexcept {
  std::int64_t total = 0;
  for (auto r : rho) total += r;
  return total;
}

std::int64_t degree(const RiggedPartition& rp, int k) {
  const auto w = rp.weights();
  const auto r = rp.riggings();
  return e0(w, k) + e1(r);
}

RiggedPartition iota(const Configuration& a, int k) {
  check_level(k);
  if (!is_admissible(a, k, 3)) throw InputError("configuration is not (k,3)-admissible");
  std::vector<RiggedPart> parts;
  std::vector<std::int64_t> shifted;
  Configuration cur = a;
  while (!cur.is_zero()) {
    const int l = weight(cur, k);
    Separation sep = separate_highest(cur, Level{k, l});
    parts.push_back(RiggedPart{l, 0});
    shifted.push_back(sep.shifted_energy);
    if (length(sep.remainder) >= length(cur)) {
      throw InternalError("separation did not shrink the configuration");
    }
    cur = std::move(sep.remainder);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::int64_t rho = shifted[i];
    for (std::size_t j = i + 1; j < parts.size(); ++j) rho -= phase(k, parts[i].weight, parts[j].weight);
    parts[i].rigging = rho;
  }
  try {
    return RiggedPartition(std::move(parts));
  } catch (const InputError& e) {
    throw InternalError(std::string("iota produced an invalid rigged partition: ") + e.what());
  }
}

namespace {

Configuration kappa_with_slack(const RiggedPartition& rp, int k, std::int64_t slack) {
  if (rp.empty()) return {};
  const int l = rp.largest_weight();
  const auto& parts = rp.parts();
  const Configuration base = kappa_with_slack(rp.lighter_than(l), k, 0);

  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < parts.size() && parts[i].weight == l; ++i) {
    std::int64_t value = parts[i].rigging;
    for (std::size_t j = i + 1; j < parts.size(); ++j) value += phase(k, l, parts[j].weight);
    s.push_back(value);
  }

  // Enough moves that every free particle starts at least five columns above
  // the lighter configuration.
  const std::int64_t top = base.is_zero() ? -1 : base.max_index();
  const std::int64_t lowest = s.back();
  const std::int64_t t = std::max<std::int64_t>(0, l * (top + 5) - lowest) + slack;

  std::vector<std::int64_t> d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d[i] = s[i] + t;
  Configuration b = base + build_free_configuration(Level{k, l}, d);
  const Level level{k, l};
  for (std::int64_t step = 0; step < t; ++step) b = move_all(b, level, Side::Left);
  return b;
}

}  // namespace

Configuration kappa(const RiggedPartition& rp, int k) {
  check_level(k);
  if (rp.largest_weight() > k) {
    throw InputError("rigged partition has a part larger than k=" + std::to_string(k));
  }
  Configuration out = kappa_with_slack(rp, k, 0);
  if (debug_checks_enabled() && !rp.empty()) {
    if (kappa_with_slack(rp, k, rp.largest_weight()) != out) {
      throw InternalError("kappa depends on the number of left moves");
    }
  }
  return out;
}

}  // namespace rigged
