#pragma once

#include <cstdint>
#include <random>

namespace mmo {

/// SplitMix64 finalizer; used to derive decorrelated seeds.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic random stream identified by (seed, stream id). Child
/// streams derived with split() are independent of the parent's state, so a
/// sweep can hand each run its own stream without sharing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  double uniform();  // [0, 1)
  double normal();   // N(0, 1)
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace mmo
