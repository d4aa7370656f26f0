#include "rigged/characters.hpp"

#include <algorithm>
#include <string>

#include "rigged/configuration.hpp"
#include "rigged/error.hpp"
#include "rigged/phase.hpp"

namespace rigged {

RiggingFloor RiggingFloor::raised(const std::vector<int>& J) const {
  RiggingFloor out = *this;
  for (int w : J) {
    if (w < 1 || w > static_cast<int>(values.size())) {
      throw InputError("bump index " + std::to_string(w) + " outside the floor");
    }
    ++out.values[static_cast<std::size_t>(w - 1)];
  }
  return out;
}

RiggingFloor character_floor(int a, int b, int k) {
  check_level(k);
  if (a < 0 || b < 0 || a + b > k) {
    throw InputError("floor r_{a,b} needs a,b >= 0 and a+b <= k");
  }
  RiggingFloor f;
  f.values.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < a; ++i) f.values.push_back(0);
  for (int i = 1; i <= b; ++i) f.values.push_back(i);
  for (int i = a + b; i < k; ++i) f.values.push_back(b + 2 * (i - a - b + 1));
  return f;
}

RiggingFloor floor_for(int a, int b, int l, int k) {
  check_level(k);
  if (l < 1 || l > k) throw InputError("floor needs 1 <= l <= k");
  if (a < 0 || b < 0 || a + b > l) throw InputError("floor needs a,b >= 0 and a+b <= l");
  return character_floor(a, b, k);
}

namespace {

std::vector<int> interval(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

RestrictedSet initial_condition_set(int a, int b, int l, int k, std::optional<std::int64_t> boundary) {
  RiggingFloor full = floor_for(a, b, l, k);
  full.values.resize(static_cast<std::size_t>(l));
  RestrictedSet set{std::move(full), {}, l, boundary};
  if (a != 0) {
    set.bumps.push_back(interval(a, a + b));
    set.bumps.push_back(interval(a + b, l));
  } else if (b != 0) {
    set.bumps.push_back(interval(b, l));
  }
  return set;
}

std::int64_t rigging_ceiling(int w, std::span<const int> m, std::int64_t N, const PhaseTable& A) {
  std::int64_t c = static_cast<std::int64_t>(w) * N + A(w, w);
  for (std::size_t j = 0; j < m.size(); ++j) c -= A(w, static_cast<int>(j) + 1) * m[j];
  return c;
}

bool above_floor(const RiggedPartition& rp, const RiggingFloor& floor, int l) {
  for (const auto& p : rp.parts()) {
    if (p.weight > l) return false;
    if (p.rigging < floor.at(p.weight)) return false;
  }
  return true;
}

bool within_boundary(const RiggedPartition& rp, std::int64_t N, int k) {
  if (rp.largest_weight() > k) return false;
  const PhaseTable A(k);
  const auto m = multiplicities(rp.weights(), k);
  for (const auto& p : rp.parts()) {
    if (p.rigging > rigging_ceiling(p.weight, m, N, A)) return false;
  }
  return true;
}

bool member(const RiggedPartition& rp, const RestrictedSet& set, int k) {
  if (!above_floor(rp, set.floor, set.l)) return false;
  for (const auto& J : set.bumps) {
    if (above_floor(rp, set.floor.raised(J), set.l)) return false;
  }
  return !set.boundary || within_boundary(rp, *set.boundary, k);
}

bool difference_set_member(const RiggedPartition& rp, int a, int b, int k) {
  auto in_r = [&](int x, int y) {
    if (x < 0 || y < 0) return false;
    if (x + y == k + 1) y = k - x;
    return above_floor(rp, character_floor(x, y, k), k);
  };
  return in_r(a, b) && !in_r(a - 1, b + 2) && !in_r(a, b - 1);
}

namespace {

// Depth-first over multiplicity vectors m (weights l down to 1) whose
// boundary ceilings stay at or above the floor for every weight present.
// Every further part lowers every ceiling, so a violated prefix is final.
void for_each_multiplicity(int k, int l, std::int64_t N, const RiggingFloor& floor,
                           const std::function<void(const std::vector<int>&,
                                                    const std::vector<std::int64_t>&)>& visit) {
  check_level(k);
  if (l < 0 || l > k) throw InputError("weight cap must lie in [0,k]");
  if (static_cast<int>(floor.values.size()) < l) throw InputError("floor shorter than l");
  const PhaseTable A(k);
  std::vector<int> m(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> ceiling(static_cast<std::size_t>(k), 0);

  auto feasible = [&]() {
    for (int w = 1; w <= l; ++w) {
      const auto iw = static_cast<std::size_t>(w - 1);
      ceiling[iw] = rigging_ceiling(w, m, N, A);
      if (m[iw] > 0 && ceiling[iw] < floor.values[iw]) return false;
    }
    return true;
  };

  std::function<void(int)> dfs = [&](int w) {
    if (w == 0) {
      if (feasible()) visit(m, ceiling);
      return;
    }
    const auto iw = static_cast<std::size_t>(w - 1);
    for (m[iw] = 0;; ++m[iw]) {
      if (!feasible()) break;
      dfs(w - 1);
    }
    m[iw] = 0;
  };
  dfs(l);
}

}  // namespace

void for_each_rigged_partition(int k, int l, std::int64_t N, const RiggingFloor& floor,
                               const std::function<void(const RiggedPartition&)>& visit) {
  for_each_multiplicity(k, l, N, floor, [&](const std::vector<int>& m,
                                            const std::vector<std::int64_t>& ceiling) {
    std::vector<RiggedPart> parts;
    std::function<void(int, int, std::int64_t)> fill = [&](int w, int left, std::int64_t cap) {
      if (w == 0) {
        visit(RiggedPartition(parts));
        return;
      }
      const auto iw = static_cast<std::size_t>(w - 1);
      if (left == 0) {
        if (w > 1) {
          fill(w - 1, m[iw - 1], ceiling[iw - 1]);
        } else {
          fill(0, 0, 0);
        }
        return;
      }
      for (std::int64_t rho = floor.values[iw]; rho <= cap; ++rho) {
        parts.push_back(RiggedPart{w, rho});
        fill(w, left - 1, rho);
        parts.pop_back();
      }
    };
    if (l == 0) {
      visit(RiggedPartition());
      return;
    }
    fill(l, m[static_cast<std::size_t>(l - 1)], ceiling[static_cast<std::size_t>(l - 1)]);
  });
}

QPolynomial chi_general(int k, int l, const RiggingFloor& floor, std::int64_t N) {
  if (N < 0) throw InputError("boundary N must be non-negative");
  QPolynomial total;
  for_each_multiplicity(k, l, N, floor, [&](const std::vector<int>& m,
                                            const std::vector<std::int64_t>& ceiling) {
    std::int64_t exponent = quadratic_form_Q(m, k);
    QPolynomial term(1);
    for (int w = 1; w <= l; ++w) {
      const auto iw = static_cast<std::size_t>(w - 1);
      if (m[iw] == 0) continue;
      exponent += floor.values[iw] * m[iw];
      term = term * q_binomial(ceiling[iw] - floor.values[iw] + m[iw], m[iw]);
    }
    total += QPolynomial::monomial(exponent) * term;
  });
  return total;
}

QPolynomial chi_closed(int k, int l, int a, int b, std::int64_t N) {
  check_level(k);
  if (l < 1 || l > k) throw InputError("chi needs 1 <= l <= k");
  if (a == -1) return {};
  if (a >= 0 && b >= 0 && a + b == k + 1) b = k - a;
  return chi_general(k, l, character_floor(a, b, k), N);
}

QPolynomial config_sum(int k, const SumConstraints& c) {
  if (!c.N && !c.max_degree) throw InputError("config_sum needs N or max_degree");
  if (c.r != 2 && c.r != 3) throw InputError("r must be 2 or 3");
  EnumerationSpec spec;
  spec.k = k;
  spec.r = c.r;
  spec.a0 = c.a0;
  spec.a1 = c.a1;
  spec.max_energy = c.max_degree;
  spec.max_weight = c.max_weight;
  spec.max_column = c.N ? *c.N : *c.max_degree;
  QPolynomial total;
  if (c.max_degree && !c.N) total = total.truncated(*c.max_degree);
  for_each_configuration(spec, [&](const Configuration& a) { total.add_term(energy(a), 1); });
  return total;
}

QPolynomial rigged_sum(int k, const RestrictedSet& set) {
  if (!set.boundary) throw InputError("rigged_sum needs a boundary");
  QPolynomial total;
  for_each_rigged_partition(k, set.l, *set.boundary, set.floor, [&](const RiggedPartition& rp) {
    if (member(rp, set, k)) total.add_term(degree(rp, k), 1);
  });
  return total;
}

}  // namespace rigged
