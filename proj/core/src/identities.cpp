#include "rigged/identities.hpp"

#include <set>
#include <string>

#include "rigged/bijection.hpp"
#include "rigged/characters.hpp"
#include "rigged/error.hpp"
#include "rigged/moves.hpp"
#include "rigged/phase.hpp"
#include "rigged/serialize.hpp"

namespace rigged {

void VerifyReport::fail(std::string witness) {
  if (!passed) return;
  passed = false;
  first_mismatch = std::move(witness);
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j{{"name", name}, {"parameters", parameters}, {"passed", passed}};
  if (lhs) j["lhs"] = rigged::to_json(*lhs);
  if (rhs) j["rhs"] = rigged::to_json(*rhs);
  j["first_mismatch"] = first_mismatch ? nlohmann::json(*first_mismatch) : nlohmann::json(nullptr);
  if (!details.empty()) j["details"] = details;
  return j;
}

namespace {

VerifyReport make_report(std::string name, nlohmann::json parameters) {
  VerifyReport report;
  report.name = std::move(name);
  report.parameters = std::move(parameters);
  return report;
}

EnumerationSpec grid_spec(int k, std::int64_t max_column) {
  EnumerationSpec spec;
  spec.k = k;
  spec.max_column = max_column;
  return spec;
}

void compare_series(VerifyReport& report, QPolynomial lhs, QPolynomial rhs) {
  if (auto d = lhs.first_difference(rhs)) {
    report.fail("degree " + std::to_string(*d) + ": lhs " + lhs.coefficient(*d).get_str() + ", rhs " +
                rhs.coefficient(*d).get_str());
  }
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
}

RiggingFloor zero_floor(int k) { return RiggingFloor{std::vector<std::int64_t>(static_cast<std::size_t>(k), 0)}; }

std::string describe(const Configuration& a) { return to_text(a); }

// Visits every multiplicity vector of length k with Q(m) <= max_degree.
// Adding a part never lowers Q and only the unit vectors have Q = 0, so the
// search is finite.
template <class QuadraticForm, class Visit>
void for_each_bounded_multiplicity(int k, std::int64_t max_degree, QuadraticForm q, Visit visit) {
  std::vector<int> m(static_cast<std::size_t>(k), 0);
  std::function<void(int)> dfs = [&](int w) {
    if (w == k) {
      visit(m, q(m));
      return;
    }
    for (m[static_cast<std::size_t>(w)] = 0; q(m) <= max_degree; ++m[static_cast<std::size_t>(w)]) dfs(w + 1);
    m[static_cast<std::size_t>(w)] = 0;
  };
  dfs(0);
}

QPolynomial product_side(int k, std::int64_t max_degree,
                         const std::function<std::int64_t(const std::vector<int>&)>& q) {
  QPolynomial total = QPolynomial().truncated(max_degree);
  for_each_bounded_multiplicity(k, max_degree, q, [&](const std::vector<int>& m, std::int64_t e) {
    QPolynomial term = QPolynomial::monomial(e).truncated(max_degree);
    for (int mi : m) term = term * inv_pochhammer(mi, max_degree);
    total += term;
  });
  return total;
}

}  // namespace

VerifyReport verify_roundtrip(int k, std::int64_t N) {
  VerifyReport report = make_report("roundtrip", {{"k", k}, {"N", N}});
  std::set<RiggedPartition> images;
  std::int64_t configurations = 0;
  for_each_configuration(grid_spec(k, N), [&](const Configuration& a) {
    ++configurations;
    const RiggedPartition rp = iota(a, k);
    if (kappa(rp, k) != a) report.fail("kappa(iota(a)) != a for a = " + describe(a));
    for (auto r : rp.riggings()) {
      if (r < 0) report.fail("negative rigging for a = " + describe(a));
    }
    if (degree(rp, k) != energy(a)) report.fail("E0+E1 != E(a) for a = " + describe(a));
    if (rp.total_weight() != length(a)) report.fail("sum of weights != |a| for a = " + describe(a));
    if (!images.insert(rp).second) report.fail("iota not injective at a = " + describe(a));
  });
  std::int64_t bounded = 0;
  for_each_rigged_partition(k, k, N, zero_floor(k), [&](const RiggedPartition& rp) {
    ++bounded;
    if (!images.count(rp)) report.fail("bounded rigged partition not in the image: " + to_text(rp));
  });
  if (bounded != static_cast<std::int64_t>(images.size())) {
    report.fail("image has " + std::to_string(images.size()) + " elements, bounded set has " +
                std::to_string(bounded));
  }
  report.details["configurations"] = configurations;
  report.details["bounded_rigged_partitions"] = bounded;
  return report;
}

VerifyReport verify_gordon(int k, std::int64_t max_degree) {
  check_level(k);
  VerifyReport report = make_report("gordon", {{"k", k}, {"max_degree", max_degree}});
  SumConstraints c;
  c.max_degree = max_degree;
  QPolynomial lhs = config_sum(k, c);
  QPolynomial rhs = product_side(k, max_degree, [k](const std::vector<int>& m) { return quadratic_form_Q(m, k); });
  compare_series(report, std::move(lhs), std::move(rhs));
  return report;
}

VerifyReport verify_gordon_r2(int k, std::int64_t max_degree) {
  check_level(k);
  VerifyReport report = make_report("gordon-r2", {{"k", k}, {"max_degree", max_degree}});
  SumConstraints c;
  c.r = 2;
  c.a0 = 0;
  c.max_degree = max_degree;
  QPolynomial lhs = config_sum(k, c);
  QPolynomial rhs = product_side(k, max_degree, [k](const std::vector<int>& m) {
    std::int64_t twice = 0;
    for (int l = 1; l <= k; ++l) {
      for (int lp = 1; lp <= k; ++lp) {
        twice += phase_r2(l, lp) * m[static_cast<std::size_t>(l - 1)] * m[static_cast<std::size_t>(lp - 1)];
      }
    }
    return twice / 2;
  });
  compare_series(report, std::move(lhs), std::move(rhs));
  return report;
}

namespace {

QPolynomial final_form(int k, int l, int a, int b, std::int64_t N) {
  if (b > 0) {
    return chi_closed(k, l, a, b, N) - chi_closed(k, l, a - 1, b + 2, N) - chi_closed(k, l, a, b - 1, N) +
           chi_closed(k, l, a - 1, b + 1, N);
  }
  return chi_closed(k, l, a, 0, N) - chi_closed(k, l, a - 1, 2, N);
}

QPolynomial four_case_form(int k, int a, int b, std::int64_t N) {
  if (a > 0 && b > 0) {
    return chi_closed(k, k, a, b, N) - chi_closed(k, k, a - 1, b + 2, N) - chi_closed(k, k, a, b - 1, N) +
           chi_closed(k, k, a - 1, b + 1, N);
  }
  if (a > 0) return chi_closed(k, k, a, 0, N) - chi_closed(k, k, a - 1, 2, N);
  if (b > 0) return chi_closed(k, k, 0, b, N) - chi_closed(k, k, 0, b - 1, N);
  return chi_closed(k, k, 0, 0, N);
}

}  // namespace

VerifyReport verify_polynomial_identity(int k, int l, int a, int b, std::int64_t N) {
  check_level(k);
  if (l < 1 || l > k || a < 0 || b < 0 || a + b > l || N < 0) {
    throw InputError("polynomial identity needs 1 <= l <= k, a,b >= 0, a+b <= l, N >= 0");
  }
  VerifyReport report = make_report("polynomial", {{"k", k}, {"l", l}, {"a", a}, {"b", b}, {"N", N}});
  SumConstraints c;
  c.a0 = a;
  c.a1 = b;
  c.N = N;
  c.max_weight = l;
  QPolynomial lhs = config_sum(k, c);
  QPolynomial rhs = final_form(k, l, a, b, N);
  if (l == k) report.details["four_case_form_agrees"] = four_case_form(k, a, b, N) == rhs;
  compare_series(report, std::move(lhs), std::move(rhs));
  return report;
}

VerifyReport verify_init(int k, int l, std::int64_t N, std::optional<std::pair<int, int>> pair) {
  check_level(k);
  if (l < 1 || l > k) throw InputError("verify_init needs 1 <= l <= k");
  VerifyReport report = make_report("init", {{"k", k}, {"l", l}, {"N", N}});
  if (pair) {
    report.parameters["a"] = pair->first;
    report.parameters["b"] = pair->second;
    if (pair->first < 0 || pair->second < 0 || pair->first + pair->second > l) {
      throw InputError("verify_init needs a,b >= 0 and a+b <= l");
    }
  }

  std::vector<std::pair<int, int>> classes;
  std::vector<RestrictedSet> sets;
  for (int a = 0; a <= l; ++a) {
    for (int b = 0; a + b <= l; ++b) {
      classes.emplace_back(a, b);
      sets.push_back(initial_condition_set(a, b, l, k, N));
    }
  }

  std::vector<RiggedPartition> universe;
  for_each_rigged_partition(k, l, N, zero_floor(k), [&](const RiggedPartition& rp) { universe.push_back(rp); });

  for (const auto& rp : universe) {
    int owners = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const bool in = member(rp, sets[i], k);
      owners += in;
      if (l == k && in != difference_set_member(rp, classes[i].first, classes[i].second, k)) {
        report.fail("difference-of-floors form disagrees at [" + std::to_string(classes[i].first) + "," +
                    std::to_string(classes[i].second) + "] for " + to_text(rp));
      }
    }
    if (owners != 1) {
      report.fail(to_text(rp) + " lies in " + std::to_string(owners) + " classes");
    }
  }

  std::int64_t compared = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto [a, b] = classes[i];
    if (pair && *pair != classes[i]) continue;
    std::set<RiggedPartition> image;
    EnumerationSpec spec = grid_spec(k, N);
    spec.a0 = a;
    spec.a1 = b;
    spec.max_weight = l;
    for_each_configuration(spec, [&](const Configuration& c) {
      const RiggedPartition rp = iota(c, k);
      if (!member(rp, sets[i], k)) {
        report.fail("iota(" + describe(c) + ") = " + to_text(rp) + " not in [" + std::to_string(a) + "," +
                    std::to_string(b) + "]");
      }
      image.insert(rp);
    });
    for (const auto& rp : universe) {
      if (member(rp, sets[i], k) && !image.count(rp)) {
        report.fail(to_text(rp) + " in [" + std::to_string(a) + "," + std::to_string(b) + "] but not an image");
      }
    }
    compared += static_cast<std::int64_t>(image.size());
  }
  report.details["universe"] = universe.size();
  report.details["images_compared"] = compared;
  return report;
}

VerifyReport verify_boundary(int k, int l, std::int64_t N) {
  check_level(k);
  VerifyReport report = make_report("boundary", {{"k", k}, {"l", l}, {"N", N}});
  EnumerationSpec spec = grid_spec(k, N + 3);
  spec.max_weight = l;
  std::int64_t checked = 0;
  for_each_configuration(spec, [&](const Configuration& a) {
    ++checked;
    const bool inside = a.is_zero() || a.max_index() <= N;
    if (inside != within_boundary(iota(a, k), N, k)) {
      report.fail("boundary-N ceilings disagree with the support of " + describe(a));
    }
  });
  report.details["configurations"] = checked;
  return report;
}

namespace {

// [x,y]_{l-1} membership, with [0,0]_0 = {empty}.
bool in_lower_class(const RiggedPartition& bar, int x, int y, int l, int k) {
  if (l - 1 == 0) return bar.empty() && x == 0 && y == 0;
  return member(bar, initial_condition_set(x, y, l - 1, k), k);
}

}  // namespace

VerifyReport verify_recursion(int l, int k, std::int64_t N) {
  check_level(k);
  if (l < 1 || l > k) throw InputError("verify_recursion needs 1 <= l <= k");
  VerifyReport report = make_report("recursion", {{"l", l}, {"k", k}, {"N", N}});
  std::int64_t checked = 0;
  for_each_rigged_partition(k, l, N, zero_floor(k), [&](const RiggedPartition& rp) {
    ++checked;
    const RiggedPartition bar = rp.lighter_than(l);
    // rho^{(l)}_{m_l}: the smallest rigging among the weight-l parts.
    std::optional<std::int64_t> lowest;
    for (const auto& p : rp.parts()) {
      if (p.weight == l) lowest = p.rigging;
    }
    auto at_least = [&](std::int64_t c) { return !lowest || *lowest >= c; };
    auto exactly = [&](std::int64_t c) { return lowest && *lowest == c; };

    for (int a = 0; a <= l; ++a) {
      for (int b = 0; a + b <= l; ++b) {
        const bool lhs = member(rp, initial_condition_set(a, b, l, k), k);
        int terms = 0;
        if (a + b < l) {
          const std::int64_t c0 = 2 * l - 2 * a - b;
          terms += in_lower_class(bar, a, b, l, k) && at_least(c0);
          for (int c = 0; c < b; ++c) terms += in_lower_class(bar, a, c, l, k) && exactly(c0);
        } else {
          for (int c = 0; c <= a; ++c) {
            for (int d = 0; d <= l - c - 1; ++d) terms += in_lower_class(bar, c, d, l, k) && exactly(l - a);
          }
        }
        if (terms > 1) report.fail(to_text(rp) + " lies in several recursion terms for [" + std::to_string(a) + "," + std::to_string(b) + "]");
        if (lhs != (terms == 1)) {
          report.fail("recursion disagrees for [" + std::to_string(a) + "," + std::to_string(b) + "] at " + to_text(rp));
        }
      }
    }
  });
  report.details["rigged_partitions"] = checked;
  return report;
}

VerifyReport verify_shift(int k, int l, const std::vector<Configuration>& sample) {
  check_level(k);
  VerifyReport report = make_report("shift", {{"k", k}, {"l", l}, {"sample_size", sample.size()}});
  for (const auto& a : sample) {
    const int lp = weight(a, k);
    if (lp >= l) throw InputError("shift sample " + describe(a) + " has weight >= l");
    const Configuration moved = pass_particle(a, k, l);
    const RiggedPartition before = iota(a, k);
    const RiggedPartition after = iota(moved, k);
    std::vector<RiggedPart> expected = before.parts();
    for (auto& p : expected) p.rigging += phase(k, l, p.weight);
    if (after.parts() != expected) {
      report.fail("iota(P_l a) = " + to_text(after) + " for a = " + describe(a) + ", iota(a) = " + to_text(before));
    }
    if (weight(moved, k) != lp) report.fail("P_l changed the weight of " + describe(a));
    if (a.is_positively_supported() && !moved.is_zero() && moved.min_index() < 2) {
      report.fail("P_l a reaches below column 2 for a = " + describe(a));
    }
    if (!a.is_zero()) {
      const Level level{k, lp};
      if (pass_particle(right_move(a, level), k, l) != right_move(moved, level)) {
        report.fail("P_l M+ != M+ P_l at a = " + describe(a));
      }
    }
  }
  return report;
}

std::vector<Configuration> shift_sample(int k, int l, std::int64_t width) {
  if (width < 1) return {Configuration()};
  EnumerationSpec spec = grid_spec(k, width - 1);
  spec.max_weight = l - 1;
  return enumerate(spec);
}

std::vector<VerifyReport> verify_all(const GridLimits& limits) {
  auto k_cap = [&](int k) { return limits.max_k ? std::min(k, *limits.max_k) : k; };
  auto n_cap = [&](std::int64_t n) { return limits.max_N ? std::min(n, *limits.max_N) : n; };
  std::vector<VerifyReport> out;
  for (int k = 1; k <= k_cap(3); ++k) out.push_back(verify_roundtrip(k, n_cap(8)));
  for (int k = 1; k <= k_cap(4); ++k) out.push_back(verify_gordon(k, 20));
  for (int k = 1; k <= k_cap(3); ++k) out.push_back(verify_gordon_r2(k, 20));
  for (int k = 1; k <= k_cap(3); ++k) {
    for (int l = 1; l <= k; ++l) {
      for (std::int64_t N = 0; N <= n_cap(6); ++N) {
        for (int a = 0; a <= l; ++a) {
          for (int b = 0; a + b <= l; ++b) out.push_back(verify_polynomial_identity(k, l, a, b, N));
        }
        out.push_back(verify_init(k, l, N));
        out.push_back(verify_boundary(k, l, N));
        out.push_back(verify_recursion(l, k, N));
      }
    }
  }
  for (int k = 2; k <= k_cap(4); ++k) {
    for (int l = 2; l <= k; ++l) out.push_back(verify_shift(k, l, shift_sample(k, l, 6)));
  }
  return out;
}

}  // namespace rigged
