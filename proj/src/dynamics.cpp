#include "qcemu/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qcemu {

ClassicalDynamics ClassicalDynamics::from_permutation(std::vector<State> image,
                                                      std::vector<std::string> labels) {
  if (image.empty())
    throw Error(ErrorKind::InvalidArgument, "dynamics needs at least one state");
  if (image.size() > std::numeric_limits<State>::max())
    throw Error(ErrorKind::TooLarge, "state space exceeds 32-bit indexing");
  if (!labels.empty() && labels.size() != image.size())
    throw Error(ErrorKind::LengthMismatch, "one label per state required");

  const auto n = image.size();
  std::vector<State> inverse(n);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    const State t = image[s];
    if (t >= n)
      throw Error(ErrorKind::NotBijective,
                  "image of state " + std::to_string(s) + " is out of range: " + std::to_string(t));
    if (seen[t])
      throw Error(ErrorKind::NotBijective, "state " + std::to_string(t) + " has two preimages");
    seen[t] = true;
    inverse[t] = static_cast<State>(s);
  }

  ClassicalDynamics dyn;
  dyn.image_ = std::move(image);
  dyn.inverse_ = std::move(inverse);
  dyn.labels_ = std::move(labels);
  return dyn;
}

std::string ClassicalDynamics::label(State s) const {
  return labels_.empty() ? std::to_string(s) : labels_.at(s);
}

ClassicalDynamics from_particle_shift(Index sites) {
  if (sites < 1) throw Error(ErrorKind::InvalidArgument, "shift needs at least one site");
  std::vector<State> image(static_cast<std::size_t>(sites));
  for (Index i = 0; i < sites; ++i) image[i] = static_cast<State>((i + 1) % sites);
  return ClassicalDynamics::from_permutation(std::move(image));
}

State lga_update(State config, int sites, bool reflect) {
  State next = 0;
  for (int s = 0; s < sites; ++s) {
    const State right = (config >> (2 * s)) & 1u;
    const State left = (config >> (2 * s + 1)) & 1u;
    const int to_right = (s + 1) % sites;
    const int to_left = (s + sites - 1) % sites;
    next |= right << (2 * to_right);
    next |= left << (2 * to_left + 1);
  }
  if (!reflect) return next;

  State out = next;
  for (int s = 0; s < sites; ++s) {
    const State right = (next >> (2 * s)) & 1u;
    const State left = (next >> (2 * s + 1)) & 1u;
    if (right != left) {
      out &= ~(State{3} << (2 * s));
      out |= (left | (right << 1)) << (2 * s);
    }
  }
  return out;
}

ClassicalDynamics from_two_channel_lga(int sites, bool reflect) {
  if (sites < 1) throw Error(ErrorKind::InvalidArgument, "lattice gas needs at least one site");
  if (sites > max_lga_sites)
    throw Error(ErrorKind::TooLarge, "lattice gas limited to " + std::to_string(max_lga_sites) +
                                         " sites");
  const std::size_t n = std::size_t{1} << (2 * sites);
  std::vector<State> image(n);
  for (std::size_t c = 0; c < n; ++c) image[c] = lga_update(static_cast<State>(c), sites, reflect);
  return ClassicalDynamics::from_permutation(std::move(image));
}

namespace {

// Walks the cycle through `start`, rotated so the smallest member comes first.
std::vector<State> canonical_cycle(const ClassicalDynamics& dyn, State start) {
  std::vector<State> cycle{start};
  State c = dyn.image(start);
  while (c != start) {
    if (cycle.size() >= dyn.num_states())
      throw Error(ErrorKind::NoReturn, "cycle through " + std::to_string(start) + " never closes");
    cycle.push_back(c);
    c = dyn.image(c);
  }
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

OrbitDecomposition decompose_orbits(const ClassicalDynamics& dyn) {
  const auto n = dyn.num_states();
  if (n > max_decompose_states)
    throw Error(ErrorKind::TooLarge, "decomposition limited to 10^6 states");

  OrbitDecomposition out;
  out.state_to_orbit.resize(n);
  std::vector<bool> visited(n, false);
  // Scanning in ascending order means each cycle is first met at its minimum.
  for (State s = 0; s < n; ++s) {
    if (visited[s]) continue;
    Orbit orbit{static_cast<Index>(out.orbits.size()), canonical_cycle(dyn, s)};
    for (Index pos = 0; pos < orbit.size(); ++pos) {
      const State m = orbit.members[pos];
      visited[m] = true;
      out.state_to_orbit[m] = {orbit.id, pos};
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

Orbit orbit_of(const ClassicalDynamics& dyn, State start) {
  if (start >= dyn.num_states())
    throw Error(ErrorKind::IndexOutOfRange, "start state out of range");
  auto members = canonical_cycle(dyn, start);

  // Id is the rank of this cycle's minimum among all cycle minima, matching
  // the ordering of decompose_orbits.
  Index id = 0;
  const State lo = members.front();
  std::vector<bool> visited(lo, false);
  for (State s = 0; s < lo; ++s) {
    if (visited[s]) continue;
    ++id;
    for (State c = s;;) {
      if (c < lo) visited[c] = true;
      c = dyn.image(c);
      if (c == s) break;
    }
  }
  return Orbit{id, std::move(members)};
}

State step(const ClassicalDynamics& dyn, State config, std::int64_t count) {
  if (config >= dyn.num_states())
    throw Error(ErrorKind::IndexOutOfRange, "configuration out of range");
  for (; count > 0; --count) config = dyn.image(config);
  for (; count < 0; ++count) config = dyn.preimage(config);
  return config;
}

}  // namespace qcemu
