#include "rigged/configuration.hpp"

#include <algorithm>
#include <string>

#include "rigged/error.hpp"

namespace rigged {

Configuration::Configuration(std::int64_t offset, std::vector<int> counts)
    : offset_(offset), counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw InputError("configuration has a negative count");
  }
  trim();
}

Configuration Configuration::from_dense(std::span<const int> counts, std::int64_t offset) {
  return Configuration(offset, std::vector<int>(counts.begin(), counts.end()));
}

void Configuration::trim() {
  auto first = std::find_if(counts_.begin(), counts_.end(), [](int c) { return c != 0; });
  if (first == counts_.end()) {
    counts_.clear();
    offset_ = 0;
    return;
  }
  auto last = std::find_if(counts_.rbegin(), counts_.rend(), [](int c) { return c != 0; }).base();
  offset_ += first - counts_.begin();
  counts_.erase(last, counts_.end());
  counts_.erase(counts_.begin(), first);
}

Configuration Configuration::adjusted_pair(std::int64_t i, int da, int db) const {
  const std::int64_t lo = is_zero() ? i : std::min(i, offset_);
  const std::int64_t hi = is_zero() ? i + 1 : std::max(i + 1, max_index());
  std::vector<int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    out[static_cast<std::size_t>(offset_ - lo) + p] = counts_[p];
  }
  out[static_cast<std::size_t>(i - lo)] += da;
  out[static_cast<std::size_t>(i + 1 - lo)] += db;
  if (out[static_cast<std::size_t>(i - lo)] < 0 || out[static_cast<std::size_t>(i + 1 - lo)] < 0) {
    throw InputError("column count would become negative at " + std::to_string(i));
  }
  Configuration result;
  result.offset_ = lo;
  result.counts_ = std::move(out);
  result.trim();
  return result;
}

Configuration Configuration::adjusted(std::int64_t i, int delta) const {
  return adjusted_pair(i, delta, 0);
}

Configuration Configuration::restricted(std::int64_t lo, std::int64_t hi) const {
  if (is_zero() || hi < lo) return {};
  const std::int64_t from = std::max(lo, offset_);
  const std::int64_t to = std::min(hi, max_index());
  if (to < from) return {};
  std::vector<int> out(counts_.begin() + (from - offset_), counts_.begin() + (to - offset_ + 1));
  return Configuration(from, std::move(out));
}

Configuration Configuration::shifted(std::int64_t columns) const {
  Configuration result = *this;
  if (!result.is_zero()) result.offset_ += columns;
  return result;
}

Configuration Configuration::operator+(const Configuration& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const std::int64_t lo = std::min(offset_, other.offset_);
  const std::int64_t hi = std::max(max_index(), other.max_index());
  std::vector<int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t i = lo; i <= hi; ++i) out[static_cast<std::size_t>(i - lo)] = (*this)[i] + other[i];
  return Configuration(lo, std::move(out));
}

std::strong_ordering Configuration::operator<=>(const Configuration& other) const {
  if (auto c = offset_ <=> other.offset_; c != 0) return c;
  return std::lexicographical_compare_three_way(counts_.begin(), counts_.end(),
                                                other.counts_.begin(), other.counts_.end());
}

void check_level(int k) {
  if (k < 1 || k > kMaxLevel) {
    throw InputError("level k must lie in [1," + std::to_string(kMaxLevel) + "], got " +
                     std::to_string(k));
  }
}

bool is_admissible(const Configuration& a, int k, int r) {
  if (r != 2 && r != 3) throw InputError("window width r must be 2 or 3");
  if (a.is_zero()) return true;
  for (std::int64_t i = a.min_index() - r + 1; i <= a.max_index(); ++i) {
    int sum = 0;
    for (int w = 0; w < r; ++w) sum += a[i + w];
    if (sum > k) return false;
  }
  return true;
}

int weight(const Configuration& a, int k) {
  check_level(k);
  if (!is_admissible(a, k, 3)) throw InputError("configuration is not (k,3)-admissible");
  if (a.is_zero()) return 0;
  int w = 0;
  for (std::int64_t i = a.min_index() - 2; i <= a.max_index() + 1; ++i) {
    w = std::max({w, s_functional(a, i), l_functional(a, i) - k});
  }
  return w;
}

std::int64_t energy(const Configuration& a) noexcept {
  std::int64_t e = 0;
  for (std::size_t p = 0; p < a.counts().size(); ++p) {
    e += (a.offset() + static_cast<std::int64_t>(p)) * a.counts()[p];
  }
  return e;
}

std::int64_t length(const Configuration& a) noexcept {
  std::int64_t n = 0;
  for (int c : a.counts()) n += c;
  return n;
}

namespace {

struct Enumerator {
  const EnumerationSpec& spec;
  const std::function<void(const Configuration&)>& visit;
  std::vector<int> columns;

  void run(std::int64_t column, std::int64_t energy_so_far) {
    if (column > spec.max_column) {
      Configuration a(0, columns);
      if (spec.max_weight && weight(a, spec.k) > *spec.max_weight) return;
      visit(a);
      return;
    }
    int window = 0;
    for (int back = 1; back < spec.r && back <= column; ++back) {
      window += columns[static_cast<std::size_t>(column - back)];
    }
    int lo = 0;
    int hi = spec.k - window;
    if (column == 0 && spec.a0) lo = hi = *spec.a0;
    if (column == 1 && spec.a1) lo = hi = *spec.a1;
    if (lo < 0 || hi > spec.k - window) return;
    for (int v = lo; v <= hi; ++v) {
      const std::int64_t e = energy_so_far + column * v;
      if (spec.max_energy && e > *spec.max_energy) break;
      columns.push_back(v);
      run(column + 1, e);
      columns.pop_back();
    }
  }
};

}  // namespace

void for_each_configuration(const EnumerationSpec& spec,
                            const std::function<void(const Configuration&)>& visit) {
  check_level(spec.k);
  if (spec.r != 2 && spec.r != 3) throw InputError("window width r must be 2 or 3");
  if (spec.max_column < 0) throw InputError("max_column must be non-negative");
  // a0/a1 filters on columns that are forced to zero.
  if (spec.max_column < 1 && spec.a1 && *spec.a1 != 0) return;
  Enumerator e{spec, visit, {}};
  e.columns.reserve(static_cast<std::size_t>(spec.max_column + 1));
  e.run(0, 0);
}

std::vector<Configuration> enumerate(const EnumerationSpec& spec) {
  std::vector<Configuration> out;
  for_each_configuration(spec, [&](const Configuration& a) { out.push_back(a); });
  return out;
}

std::vector<Configuration> enumerate(int k, int r, std::int64_t max_column, std::optional<int> a0,
                                     std::optional<int> a1) {
  EnumerationSpec spec;
  spec.k = k;
  spec.r = r;
  spec.max_column = max_column;
  spec.a0 = a0;
  spec.a1 = a1;
  return enumerate(spec);
}

}  // namespace rigged
