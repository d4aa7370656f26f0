#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rigged {

/// Largest admissibility level accepted anywhere in the library. Column
/// counts never exceed k, so they fit comfortably in an int.
inline constexpr int kMaxLevel = 64;

/// A finitely supported map Z -> Z>=0, stored as a dense window starting at
/// `offset()`. The window is always trimmed: it is empty for the zero
/// configuration, and otherwise its first and last entries are nonzero.
/// Two configurations compare equal iff they agree at every column.
class Configuration {
 public:
  Configuration() = default;

  /// Builds the configuration with a_{offset+i} = counts[i]. Leading and
  /// trailing zeros are trimmed. Throws InputError on a negative count.
  Configuration(std::int64_t offset, std::vector<int> counts);

  /// Offset-0 convenience: from_dense({3,0,0,1}) is "3001".
  static Configuration from_dense(std::span<const int> counts, std::int64_t offset = 0);

  /// a_i; zero outside the stored window.
  int operator[](std::int64_t i) const noexcept {
    const std::int64_t rel = i - offset_;
    if (rel < 0 || rel >= static_cast<std::int64_t>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(rel)];
  }

  bool is_zero() const noexcept { return counts_.empty(); }
  std::int64_t offset() const noexcept { return offset_; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// Lowest and highest nonzero columns. Undefined for the zero configuration.
  std::int64_t min_index() const noexcept { return offset_; }
  std::int64_t max_index() const noexcept {
    return offset_ + static_cast<std::int64_t>(counts_.size()) - 1;
  }

  bool is_positively_supported() const noexcept { return is_zero() || offset_ >= 0; }

  /// A copy with a_i += delta. Throws InputError if the result is negative.
  Configuration adjusted(std::int64_t i, int delta) const;

  /// A copy with a_i += da at i and a_{i+1} += db; the primitive behind every
  /// particle move.
  Configuration adjusted_pair(std::int64_t i, int da, int db) const;

  /// Columns lo..hi (inclusive) kept, everything else zeroed.
  Configuration restricted(std::int64_t lo, std::int64_t hi) const;

  /// b_i = a_{i - columns}.
  Configuration shifted(std::int64_t columns) const;

  /// Pointwise sum.
  Configuration operator+(const Configuration& other) const;

  bool operator==(const Configuration&) const = default;
  std::strong_ordering operator<=>(const Configuration& other) const;

 private:
  void trim();

  std::int64_t offset_ = 0;
  std::vector<int> counts_;
};

/// S[j,a] = a_j + a_{j+1}.
inline int s_functional(const Configuration& a, std::int64_t j) noexcept { return a[j] + a[j + 1]; }

/// L[j,a] = a_{j-1} + 2a_j + 2a_{j+1} + a_{j+2}.
inline int l_functional(const Configuration& a, std::int64_t j) noexcept {
  return a[j - 1] + 2 * a[j] + 2 * a[j + 1] + a[j + 2];
}

/// Every window of r consecutive columns sums to at most k. r must be 2 or 3.
bool is_admissible(const Configuration& a, int k, int r = 3);

/// The least l in [0,k] with a in C^{(k,l)}:
/// max(max_i S[i,a], max_i L[i,a] - k, 0). Throws InputError when a is not
/// (k,3)-admissible.
int weight(const Configuration& a, int k);

/// E(a) = sum_i i*a_i.
std::int64_t energy(const Configuration& a) noexcept;

/// |a| = sum_i a_i.
std::int64_t length(const Configuration& a) noexcept;

/// Filters for the bounded enumeration. Only positively supported
/// configurations with a_i = 0 for i > max_column are produced.
struct EnumerationSpec {
  int k = 1;
  int r = 3;
  std::int64_t max_column = 0;
  std::optional<int> a0;
  std::optional<int> a1;
  /// Prune configurations with E(a) above this bound.
  std::optional<std::int64_t> max_energy;
  /// Keep only configurations of (k,3) maximal weight <= max_weight.
  std::optional<int> max_weight;
};

/// Calls `visit` once for every configuration matching `spec`.
void for_each_configuration(const EnumerationSpec& spec,
                            const std::function<void(const Configuration&)>& visit);

/// Materialized form of for_each_configuration.
std::vector<Configuration> enumerate(const EnumerationSpec& spec);

/// Shorthand matching the (k, r, N, a0, a1) signature.
std::vector<Configuration> enumerate(int k, int r, std::int64_t max_column,
                                     std::optional<int> a0 = std::nullopt,
                                     std::optional<int> a1 = std::nullopt);

void check_level(int k);

}  // namespace rigged
