#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace mmo {

/// Game parameters: dimension d, gradient bound G (adversary plays
/// ||g|| <= G), horizon T (absent when unknown to the player), and seed.
struct GameConfig {
  std::size_t dim = 2;
  double grad_bound = 1.0;
  std::optional<int> horizon;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless dim >= 1, G > 0 and (if set) T >= 1.
  void validate() const;
};

}  // namespace mmo
