#pragma once

#include <cstdint>
#include <vector>

#include "takeoff/partition.hpp"

namespace takeoff::dbt {

/// SplitMix64 stream. `mix` is the one-shot finalizer (gamma added, then
/// the xor-shift/multiply steps); `next` walks the stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t x);

  std::uint64_t next();

  /// Uniform double in [0,1): (next() >> 11) * 2^-53.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// Sub-seed for one scenario. This derivation is a wire-level contract:
/// campaigns must reproduce bit-exactly across platforms and runners.
///
///   sub_seed = mix(master_seed XOR mix(partition_ordinal * 64 + scenario_index + 1))
std::uint64_t derive_sub_seed(std::uint64_t master_seed, std::size_t partition_ordinal,
                              int scenario_index);

/// One sampled take-off test case. Roll is fixed to zero; the field exists
/// so a four-axis grid stays a compatible extension.
struct Scenario {
  double theta0 = 0.0;    // initial pitch, degrees
  double psi0 = 0.0;      // initial yaw, degrees
  double phi0 = 0.0;      // initial roll, degrees
  double h_target = 0.0;  // target height, meters
  GridIndex partition_index;
  int scenario_index = 0;
  std::uint64_t sub_seed = 0;

  bool operator==(const Scenario&) const = default;
};

/// n scenarios drawn uniformly inside the partition's box. Each scenario
/// consumes exactly three uniform draws from its own SplitMix64 stream, in
/// axis order theta, psi, h.
std::vector<Scenario> generate_scenarios(const Partition& partition, int n,
                                         std::uint64_t master_seed);

}  // namespace takeoff::dbt
