#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigged/configuration.hpp"
#include "rigged/qseries.hpp"

namespace rigged {

/// Outcome of one finite check. A failed report always carries the
/// smallest witness found: the lowest differing degree for polynomial
/// identities, the first offending element (in enumeration order) for
/// set-level checks.
struct VerifyReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  bool passed = true;
  std::optional<QPolynomial> lhs;
  std::optional<QPolynomial> rhs;
  std::optional<std::string> first_mismatch;
  /// Counts and side observations (e.g. how many elements were checked).
  nlohmann::json details = nlohmann::json::object();

  /// Records a failure unless one is already recorded.
  void fail(std::string witness);

  nlohmann::json to_json() const;
};

/// kappa(iota(a)) = a, positive riggings and degree/length preservation for
/// every a supported in [0,N]; iota is injective there and its image is
/// exactly the positive rigged partitions obeying the boundary-N ceilings.
VerifyReport verify_roundtrip(int k, std::int64_t N);

/// The level-k sum side against sum_m q^{Q(m)} / prod (q)_{m_l} through
/// q^max_degree.
VerifyReport verify_gordon(int k, std::int64_t max_degree);

/// The r=2 sum side (columns from 1, a_i + a_{i+1} <= k) against
/// sum_m q^{(Gm,m)/2} / prod (q)_{m_l}.
VerifyReport verify_gordon_r2(int k, std::int64_t max_degree);

/// Generating function of {a in C^(k,l)_pos : a_0=a, a_1=b, a_i=0 for i>N}
/// against the alternating combination of fermionic characters. The
/// details record whether the four-case form stated with l = k agrees.
VerifyReport verify_polynomial_identity(int k, int l, int a, int b, std::int64_t N);

/// iota-images of the initial-condition classes against the [a,b]_l
/// predicates on the boundary-N truncation; the classes are disjoint and
/// cover it; at l = k the difference-of-floors form gives the same sets.
/// With a pair given, only that class is compared (disjointness and cover
/// are still checked over all classes).
VerifyReport verify_init(int k, int l, std::int64_t N,
                         std::optional<std::pair<int, int>> pair = std::nullopt);

/// a vanishes above N iff iota(a) satisfies the boundary-N ceilings, for
/// every a of weight <= l supported in [0, N+3].
VerifyReport verify_boundary(int k, int l, std::int64_t N);

/// The recursion expressing [a,b]_l through [c,d]_{l-1}, checked
/// extensionally on the boundary-N truncation of R^(l)_pos.
VerifyReport verify_recursion(int l, int k, std::int64_t N);

/// For each sample a (weight < l): iota(P_l a) = (lambda, rho_i + A_{l,lambda_i}),
/// P_l keeps the weight, P_l M+ a = M+ P_l a, and positive support lands in
/// columns >= 2.
VerifyReport verify_shift(int k, int l, const std::vector<Configuration>& sample);

/// All configurations on columns 0..width-1 with weight < l.
std::vector<Configuration> shift_sample(int k, int l, std::int64_t width);

struct GridLimits {
  std::optional<int> max_k;
  std::optional<std::int64_t> max_N;
};

/// The full acceptance grid, optionally narrowed.
std::vector<VerifyReport> verify_all(const GridLimits& limits = {});

}  // namespace rigged
