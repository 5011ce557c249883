#ifndef QCEMU_DYNAMICS_HPP
#define QCEMU_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcemu/types.hpp"

namespace qcemu {

using State = std::uint32_t;

/// Largest state space accepted by decompose_orbits.
inline constexpr std::size_t max_decompose_states = 1'000'000;
/// Largest site count accepted by the two-channel lattice gas builder.
inline constexpr int max_lga_sites = 12;

/// An invertible update rule on the configurations 0..num_states()-1.
///
/// Instances are only created through the validating builders below, so the
/// image is always a bijection. The inverse is precomputed on construction.
class ClassicalDynamics {
public:
  static ClassicalDynamics from_permutation(std::vector<State> image,
                                            std::vector<std::string> labels = {});

  std::size_t num_states() const noexcept { return image_.size(); }
  State image(State s) const { return image_[s]; }
  State preimage(State s) const { return inverse_[s]; }
  std::span<const State> image() const noexcept { return image_; }

  /// Human-readable name of a state, or its decimal index when unlabeled.
  std::string label(State s) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

private:
  ClassicalDynamics() = default;

  std::vector<State> image_;
  std::vector<State> inverse_;
  std::vector<std::string> labels_;
};

/// One cycle of the dynamics. members()[n+1] == image(members()[n]) and the
/// first member is the smallest state index on the cycle.
struct Orbit {
  Index id = 0;
  std::vector<State> members;

  Index size() const noexcept { return static_cast<Index>(members.size()); }
  double period(double tau) const noexcept { return static_cast<double>(members.size()) * tau; }
};

struct OrbitPosition {
  Index orbit = 0;
  Index position = 0;
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
  std::vector<OrbitPosition> state_to_orbit;

  const Orbit& orbit_containing(State s) const { return orbits[state_to_orbit[s].orbit]; }
};

/// Single particle hopping one site per step around a ring of `sites` sites.
ClassicalDynamics from_particle_shift(Index sites);

/// Reversible two-channel lattice gas on a ring.
///
/// Bit 2s of a configuration is the right-mover at site s and bit 2s+1 the
/// left-mover. One update advects both channels one site; with `reflect`,
/// a site holding exactly one particle then has that particle's direction
/// reversed.
ClassicalDynamics from_two_channel_lga(int sites, bool reflect);

/// The LGA update applied to a single configuration.
State lga_update(State config, int sites, bool reflect);

OrbitDecomposition decompose_orbits(const ClassicalDynamics& dyn);

Orbit orbit_of(const ClassicalDynamics& dyn, State start);

/// Applies the update `count` times; negative counts step backwards.
State step(const ClassicalDynamics& dyn, State config, std::int64_t count);

}  // namespace qcemu

#endif  // QCEMU_DYNAMICS_HPP
