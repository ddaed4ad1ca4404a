#include "mmo/game_config.hpp"

#include <cmath>

#include "mmo/error.hpp"

namespace mmo {

void GameConfig::validate() const {
  if (dim < 1) throw InvalidArgument("game dim must be >= 1");
  if (!(grad_bound > 0.0) || !std::isfinite(grad_bound)) {
    throw InvalidArgument("grad_bound G must be a positive finite number");
  }
  if (horizon && *horizon < 1) throw InvalidArgument("horizon T must be >= 1");
}

}  // namespace mmo
