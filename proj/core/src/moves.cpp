#include "rigged/moves.hpp"

#include <string>

#include "rigged/error.hpp"
#include "rigged/phase.hpp"

namespace rigged {

namespace {

void check_particle_level(Level level) {
  check_level(level.k);
  if (level.l < 1 || level.l > level.k) {
    throw InputError("particle weight l must lie in [1,k], got " + std::to_string(level.l));
  }
}

std::optional<ParticleSighting> sighting_at(const Configuration& a, Level level, std::int64_t i) {
  const bool s = s_functional(a, i) == level.l;
  const bool l = l_functional(a, i) == level.k + level.l;
  if (!s && !l) return std::nullopt;
  return ParticleSighting{i, s ? Saturation::S : Saturation::L, level.l};
}

// Unchecked scans. S and L can only be nonzero on [min-2, max+1].
std::optional<ParticleSighting> scan_highest(const Configuration& a, Level level) {
  if (a.is_zero()) return std::nullopt;
  for (std::int64_t i = a.max_index() + 1; i >= a.min_index() - 2; --i) {
    if (auto s = sighting_at(a, level, i)) return s;
  }
  return std::nullopt;
}

std::optional<ParticleSighting> scan_lowest(const Configuration& a, Level level) {
  if (a.is_zero()) return std::nullopt;
  for (std::int64_t i = a.min_index() - 2; i <= a.max_index() + 1; ++i) {
    if (auto s = sighting_at(a, level, i)) return s;
  }
  return std::nullopt;
}

std::vector<std::int64_t> scan_positions(const Configuration& a, Level level, Side side) {
  std::vector<std::int64_t> out;
  Configuration rest = a;
  while (true) {
    const auto s = side == Side::Right ? scan_highest(rest, level) : scan_lowest(rest, level);
    if (!s) break;
    out.push_back(s->position);
    rest = side == Side::Right ? rest.restricted(rest.min_index(), s->position - 1)
                               : rest.restricted(s->position + 2, rest.max_index());
  }
  return out;
}

bool in_level(const Configuration& a, Level level) {
  return is_admissible(a, level.k, 3) && weight(a, level.k) <= level.l;
}

Configuration unchecked_move(const Configuration& a, std::int64_t position, Side side) {
  return side == Side::Right ? a.adjusted_pair(position, -1, +1) : a.adjusted_pair(position, +1, -1);
}

Configuration unchecked_move_all(const Configuration& a, Level level, Side side) {
  Configuration cur = a;
  const std::size_t m = scan_positions(a, level, side).size();
  for (std::size_t c = 0; c < m; ++c) {
    const auto positions = scan_positions(cur, level, side);
    if (positions.size() != m) {
      throw InternalError("particle count changed during a composite move");
    }
    cur = unchecked_move(cur, positions[c], side);
  }
  return cur;
}

void require_exact_weight(const Configuration& a, Level level) {
  check_particle_level(level);
  if (a.is_zero()) throw InputError("the zero configuration has no particle to move");
  const int w = weight(a, level.k);
  if (w != level.l) {
    throw InputError("configuration has weight " + std::to_string(w) + ", expected exactly " +
                     std::to_string(level.l));
  }
}

}  // namespace

void require_member(const Configuration& a, Level level) {
  check_level(level.k);
  if (level.l < 0 || level.l > level.k) throw InputError("weight bound l must lie in [0,k]");
  if (!is_admissible(a, level.k, 3)) throw InputError("configuration is not (k,3)-admissible");
  const int w = weight(a, level.k);
  if (w > level.l) {
    throw InputError("configuration has weight " + std::to_string(w) + " above l=" +
                     std::to_string(level.l));
  }
}

std::optional<ParticleSighting> highest_particle(const Configuration& a, Level level) {
  require_member(a, level);
  if (level.l == 0) return std::nullopt;
  return scan_highest(a, level);
}

std::optional<ParticleSighting> lowest_particle(const Configuration& a, Level level) {
  require_member(a, level);
  if (level.l == 0) return std::nullopt;
  return scan_lowest(a, level);
}

Configuration right_move(const Configuration& a, Level level) {
  require_exact_weight(a, level);
  const auto s = scan_highest(a, level);
  if (!s || a[s->position] == 0) throw InternalError("right move found no movable particle");
  return unchecked_move(a, s->position, Side::Right);
}

Configuration left_move(const Configuration& a, Level level) {
  require_exact_weight(a, level);
  const auto s = scan_lowest(a, level);
  if (!s || a[s->position + 1] == 0) throw InternalError("left move found no movable particle");
  return unchecked_move(a, s->position, Side::Left);
}

std::vector<std::int64_t> particle_positions(const Configuration& a, Level level, Side side) {
  require_member(a, level);
  if (level.l == 0) return {};
  return scan_positions(a, level, side);
}

Configuration move_cth(const Configuration& a, Level level, int c, Side side) {
  check_particle_level(level);
  require_member(a, level);
  const auto positions = scan_positions(a, level, side);
  if (c < 1 || static_cast<std::size_t>(c) > positions.size()) {
    throw InputError("configuration has " + std::to_string(positions.size()) +
                     " weight-l particles, cannot move particle " + std::to_string(c));
  }
  const std::int64_t position = positions[static_cast<std::size_t>(c - 1)];
  const Configuration moved = unchecked_move(a, position, side);
  if (!in_level(moved, level)) {
    throw InputError("moving particle " + std::to_string(c) +
                     " leaves C^(k,l); composite moves must be applied in order");
  }
  return moved;
}

Configuration move_all(const Configuration& a, Level level, Side side) {
  require_exact_weight(a, level);
  return unchecked_move_all(a, level, side);
}

FreeParticle free_particle(int l, std::int64_t d) {
  if (l < 1) throw InputError("free particle weight must be positive");
  // d = j*c + (j+1)*(l-c) = (j+1)*l - c with 1 <= c <= l.
  std::int64_t j = d / l;
  if (d % l != 0 && d < 0) --j;
  const auto c = static_cast<int>((j + 1) * l - d);
  return FreeParticle{j, c, l, d};
}

Separation separate_highest(const Configuration& a, Level level, std::int64_t extra_steps) {
  require_exact_weight(a, level);
  const std::int64_t top = a.max_index() + 1;
  const std::int64_t cap = length(a) * (top + 1) - energy(a) + 2;

  Configuration cur = a;
  std::int64_t steps = 0;
  std::optional<std::int64_t> freed_at;
  while (true) {
    const auto s = scan_highest(cur, level);
    if (!s) throw InternalError("weight dropped during right moves");
    const std::int64_t i = s->position;
    const bool is_free = !freed_at && s_functional(cur, i) == level.l && cur[i] != 0 &&
                         cur.max_index() <= i + 1;
    if (is_free) freed_at = steps;
    if (freed_at && steps == *freed_at + extra_steps) {
      const int c = cur[i];
      const std::int64_t d = i * c + (i + 1) * (level.l - c);
      return Separation{steps, FreeParticle{i, c, level.l, d}, d - steps,
                        cur.restricted(cur.min_index(), i - 1)};
    }
    if (!freed_at && steps >= cap) {
      throw InternalError("right moves exceeded the separation bound");
    }
    cur = unchecked_move(cur, i, Side::Right);
    ++steps;
  }
}

Configuration build_free_configuration(Level level, std::span<const std::int64_t> energies) {
  check_particle_level(level);
  const std::int64_t spacing = phase(level.k, level.l, level.l);
  Configuration out;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (i > 0 && energies[i - 1] - energies[i] < spacing) {
      throw InputError("free particle energies must differ by at least A_{l,l}=" +
                       std::to_string(spacing));
    }
    const FreeParticle p = free_particle(level.l, energies[i]);
    out = out + Configuration(p.position, {p.upper_count, level.l - p.upper_count});
  }
  return out;
}

namespace {

// Left moves of a + (weight-l particle at column `start`) until the particle
// sits below everything else with two empty columns above it. Optionally
// records history nodes, in which case simulation continues until the
// particle occupies a single column (the "clean" node).
struct PassResult {
  Configuration left_behind;
  std::vector<HistoryNode> nodes;
};

PassResult simulate_pass(const Configuration& a, int k, int l, std::int64_t start, bool record) {
  const Level level{k, l};
  Configuration cur = a.adjusted(start, l);
  const std::int64_t floor_column = a.is_zero() ? start : a.min_index();
  const std::int64_t cap = static_cast<std::int64_t>(l) * (start - floor_column + 12) + 64;

  PassResult result;
  std::optional<std::size_t> first_clean;
  std::optional<std::int64_t> last_position;
  std::optional<Configuration> left_behind;
  for (std::int64_t step = 0;; ++step) {
    if (step > cap) throw InternalError("passing did not terminate within the move bound");
    const auto s = scan_lowest(cur, level);
    if (!s) throw InternalError("passing particle lost its weight");
    const std::int64_t i = s->position;
    if (record && (!last_position || *last_position != i)) {
      result.nodes.push_back(HistoryNode{i, s_functional(cur, i) == l,
                                         l_functional(cur, i) == k + l, cur});
      if (!first_clean && cur.min_index() >= i + 1 && cur[i + 1] == l && cur[i + 2] == 0) {
        first_clean = result.nodes.size() - 1;
      }
    }
    last_position = i;

    if (!left_behind) {
      const std::int64_t j = cur.min_index();
      if (cur[j] + cur[j + 1] == l && cur[j + 2] == 0 && cur[j + 3] == 0) {
        Configuration rest = cur.restricted(j + 2, cur.max_index());
        if (rest.is_zero() || weight(rest, k) < l) left_behind = std::move(rest);
      }
    }
    if (left_behind && (!record || first_clean)) break;
    cur = unchecked_move(cur, i, Side::Left);
  }
  result.left_behind = *left_behind;
  if (first_clean) result.nodes.resize(*first_clean + 1);
  return result;
}

void require_lighter(const Configuration& a, int k, int l) {
  check_particle_level(Level{k, l});
  const int w = weight(a, k);
  if (w >= l) {
    throw InputError("passing requires weight(a) < l; got weight " + std::to_string(w) +
                     " and l=" + std::to_string(l));
  }
}

std::int64_t placement_column(const Configuration& a) {
  return a.is_zero() ? 3 : std::max<std::int64_t>(3, a.max_index() + 4);
}

}  // namespace

Configuration pass_particle(const Configuration& a, int k, int l) {
  require_lighter(a, k, l);
  if (a.is_zero()) return a;
  const std::int64_t start = placement_column(a);
  Configuration out = simulate_pass(a, k, l, start, false).left_behind;
  if (debug_checks_enabled()) {
    if (simulate_pass(a, k, l, start + 1, false).left_behind != out) {
      throw InternalError("P_l depends on the placement column");
    }
  }
  return out;
}

std::vector<HistoryNode> pass_history(const Configuration& a, int k, int l) {
  require_lighter(a, k, l);
  const std::int64_t start = placement_column(a);
  auto nodes = simulate_pass(a, k, l, start, true).nodes;
  const std::int64_t reach = a.is_zero() ? start - 1 : a.max_index() + 1;
  std::vector<HistoryNode> out;
  for (auto& node : nodes) {
    if (node.position > reach) continue;
    out.push_back(std::move(node));
  }
  return out;
}

}  // namespace rigged
