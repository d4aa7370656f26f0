#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rigged/configuration.hpp"

namespace rigged {

/// Admissibility level k together with a maximal-weight bound l.
struct Level {
  int k = 1;
  int l = 1;
};

enum class Side { Right, Left };

/// Which functional is saturated at a particle: S[i,a] = l or L[i,a] = k+l.
enum class Saturation { S, L };

/// Where a weight-l particle sits. When both functionals saturate at the same
/// column, `kind` records S.
struct ParticleSighting {
  std::int64_t position = 0;
  Saturation kind = Saturation::S;
  int weight = 0;

  bool operator==(const ParticleSighting&) const = default;
};

/// A weight-l particle occupying columns (position, position+1) with
/// `upper_count` = a_position in [1,l] and nothing above it.
struct FreeParticle {
  std::int64_t position = 0;
  int upper_count = 0;
  int weight = 0;
  std::int64_t energy = 0;

  bool operator==(const FreeParticle&) const = default;
};

/// Throws InputError unless a is (k,3)-admissible with maximal weight <= l.
void require_member(const Configuration& a, Level level);

/// Largest i with S[i,a] = l or L[i,a] = k+l; empty when weight(a) < l.
std::optional<ParticleSighting> highest_particle(const Configuration& a, Level level);

/// Smallest such i; drives the left move.
std::optional<ParticleSighting> lowest_particle(const Configuration& a, Level level);

/// M+ : moves the highest weight-l particle one energy unit up. Requires
/// weight(a) == l exactly.
Configuration right_move(const Configuration& a, Level level);

/// M- : moves the lowest weight-l particle one energy unit down.
Configuration left_move(const Configuration& a, Level level);

/// Positions of the weight-l particles found by repeated cut-off. Right gives
/// i_1 > i_2 > ... (cutting columns >= i each time), Left gives
/// j_1 < j_2 < ... (cutting columns <= j+1).
std::vector<std::int64_t> particle_positions(const Configuration& a, Level level, Side side);

/// M^{(c)}: raw (-1,+1) change at the c-th particle (mirror for Left). The
/// result is checked to stay in C^{(k,l)}; a violation throws InputError and
/// means the caller broke the composite order M^{(c)}...M^{(1)}.
Configuration move_cth(const Configuration& a, Level level, int c, Side side);

/// M^{(m)} ... M^{(1)} over all m weight-l particles of a.
Configuration move_all(const Configuration& a, Level level, Side side);

struct Separation {
  /// Right moves until the highest particle first became free.
  std::int64_t steps = 0;
  FreeParticle free;
  /// energy of the free particle minus `steps`; does not depend on how
  /// many extra moves are made after freedom.
  std::int64_t shifted_energy = 0;
  /// The configuration with the free particle (and everything above) removed.
  Configuration remainder;
};

/// Pushes the highest weight-l particle to freedom. Requires a != 0 and
/// weight(a) == l. `extra_steps` further moves past first freedom are
/// applied before reading off the result.
Separation separate_highest(const Configuration& a, Level level, std::int64_t extra_steps = 0);

/// The unique free particle of weight l and energy d.
FreeParticle free_particle(int l, std::int64_t d);

/// Superposition of free weight-l particles with the given energies
/// d_1 > d_2 > ... . Consecutive energies must differ by at least A_{l,l}.
Configuration build_free_configuration(Level level, std::span<const std::int64_t> energies);

/// P_l: a weight-l particle passes a (of weight < l) from right to left; the
/// configuration left behind is returned.
Configuration pass_particle(const Configuration& a, int k, int l);

/// A node of a passing history: the first configuration in the left-move
/// sequence at which the lowest weight-l position becomes `position`.
struct HistoryNode {
  std::int64_t position = 0;
  bool s_saturated = false;
  bool l_saturated = false;
  Configuration configuration;
};

/// The nodes of P_l from the first one at which the particle has reached the
/// configuration (position <= max support + 1) through the first one at
/// which it sits alone in a single column below everything else.
std::vector<HistoryNode> pass_history(const Configuration& a, int k, int l);

}  // namespace rigged
