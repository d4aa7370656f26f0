#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rigged/bijection.hpp"
#include "rigged/phase.hpp"
#include "rigged/qseries.hpp"

namespace rigged {

/// Minimum rigging per weight: a part of weight w needs rho >= values[w-1].
struct RiggingFloor {
  std::vector<std::int64_t> values;

  std::int64_t at(int weight) const { return values.at(static_cast<std::size_t>(weight - 1)); }
  /// r(J): the floor raised by one at every weight in J.
  RiggingFloor raised(const std::vector<int>& J) const;

  bool operator==(const RiggingFloor&) const = default;
};

/// R^{(l)}(r) with the sets R^{(l)}(r(J)) removed for every J in `bumps`,
/// optionally cut down to the rigged partitions of configurations vanishing
/// above column `boundary`.
struct RestrictedSet {
  RiggingFloor floor;
  std::vector<std::vector<int>> bumps;
  int l = 1;
  std::optional<std::int64_t> boundary;
};

/// r_{a,b} = (0^a, 1..b, b+2, b+4, ...) with k entries. Its first l entries
/// are the floor of [a,b]_l. Requires a, b >= 0, a+b <= l <= k.
RiggingFloor floor_for(int a, int b, int l, int k);

/// The floor vector for any a, b >= 0 with a+b <= k, at full length k.
RiggingFloor character_floor(int a, int b, int k);

/// The set [a,b]_l, the claimed image of {a in C^(k,l)_pos : a_0=a, a_1=b}.
RestrictedSet initial_condition_set(int a, int b, int l, int k,
                                    std::optional<std::int64_t> boundary = std::nullopt);

/// Largest rigging a part of weight w may carry in a configuration that
/// vanishes above column N, given the multiplicities m of the whole
/// partition.
std::int64_t rigging_ceiling(int w, std::span<const int> m, std::int64_t N, const PhaseTable& A);

/// True when every rho_i >= floor at lambda_i and lambda_1 <= l.
bool above_floor(const RiggedPartition& rp, const RiggingFloor& floor, int l);

/// True when rho_i <= lambda_i N - sum_{j != i} A_{lambda_i, lambda_j} for all i.
bool within_boundary(const RiggedPartition& rp, std::int64_t N, int k);

bool member(const RiggedPartition& rp, const RestrictedSet& set, int k);

/// Membership in R[a,b] \ (R[a-1,b+2] cup R[a,b-1]) at l = k, with
/// R[-1,.] empty and R[a-1,b+2] read as R[a-1,k-a+1] when a+b = k.
bool difference_set_member(const RiggedPartition& rp, int a, int b, int k);

/// Visits every rigged partition with parts <= l, riggings at or above the
/// floor, and riggings within the boundary-N ceilings.
void for_each_rigged_partition(int k, int l, std::int64_t N, const RiggingFloor& floor,
                               const std::function<void(const RiggedPartition&)>& visit);

/// chi^{(k,l)}_{a,b}[N]: the fermionic sum with the floor r_{a,b} and
/// q-binomials, restricted to m_{l+1} = ... = m_k = 0. Returns 0 for a = -1
/// and reads b as k-a when a+b = k+1.
QPolynomial chi_closed(int k, int l, int a, int b, std::int64_t N);

/// The same fermionic sum for an arbitrary floor over weights 1..l.
QPolynomial chi_general(int k, int l, const RiggingFloor& floor, std::int64_t N);

struct SumConstraints {
  int r = 3;
  std::optional<int> a0;
  std::optional<int> a1;
  std::optional<std::int64_t> N;
  std::optional<std::int64_t> max_degree;
  std::optional<int> max_weight;
};

/// Sum of q^{E(a)} over positively supported (k,r)-admissible
/// configurations meeting the constraints. Without N the result is a series
/// truncated at max_degree. Throws InputError when neither bound is given.
QPolynomial config_sum(int k, const SumConstraints& constraints);

/// Sum of q^{E0+E1} over the members of a bounded restricted set.
QPolynomial rigged_sum(int k, const RestrictedSet& set);

}  // namespace rigged
