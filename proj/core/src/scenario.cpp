#include "takeoff/scenario.hpp"

#include <stdexcept>

namespace takeoff::dbt {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

double affine(double unit, const Interval& interval) {
  return interval.lo + unit * (interval.hi - interval.lo);
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t x) {
  std::uint64_t z = x + kGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  const std::uint64_t r = mix(state_);
  state_ += kGamma;
  return r;
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_sub_seed(std::uint64_t master_seed, std::size_t partition_ordinal,
                              int scenario_index) {
  const std::uint64_t tag = static_cast<std::uint64_t>(partition_ordinal) * 64 +
                            static_cast<std::uint64_t>(scenario_index) + 1;
  return SplitMix64::mix(master_seed ^ SplitMix64::mix(tag));
}

std::vector<Scenario> generate_scenarios(const Partition& partition, int n,
                                         std::uint64_t master_seed) {
  if (n < 1) throw std::invalid_argument("scenario count must be >= 1");
  std::vector<Scenario> scenarios;
  scenarios.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::uint64_t sub_seed = derive_sub_seed(master_seed, partition.ordinal, k);
    SplitMix64 rng(sub_seed);
    Scenario s;
    s.theta0 = affine(rng.next_unit(), partition.theta_iv);
    s.psi0 = affine(rng.next_unit(), partition.psi_iv);
    s.phi0 = 0.0;
    s.h_target = affine(rng.next_unit(), partition.h_iv);
    s.partition_index = partition.index;
    s.scenario_index = k;
    s.sub_seed = sub_seed;
    scenarios.push_back(s);
  }
  return scenarios;
}

}  // namespace takeoff::dbt
