#pragma once

#include <optional>
#include <string_view>
#include <variant>

namespace mmo {

/// Constant-step gradient descent: w_{t+1} = eta * theta_t.
struct OgdParams {
  double eta = 0.1;
  double G = 1.0;
  std::optional<int> T;  // only needed for the fixed-horizon regret bound
};

/// The pq power family: benchmark (W/p)|x|^p with p in [1, 2].
struct PowerParams {
  double W = 1.0;
  double p = 2.0;
  double G = 1.0;
  int T = 1;
};

/// Known-horizon Normal potential, benchmark eps * exp(||theta||^2 / (2aT)).
/// Requires a > pi G^2 / 2.
struct NormalKnownTParams {
  double eps = 1.0;
  double a = 2.0;
  double G = 1.0;
  int T = 1;
};

/// AdaptiveNormal, potential beta_t exp(||theta||^2 / (2at)) with
/// beta_t = eps / log^2(t+1). Requires a > 3 pi G^2 / 4.
struct AdaptiveNormalParams {
  double eps = 1.0;
  double a = 3.0;
  double G = 1.0;
};

using StrategyParams = std::variant<OgdParams, PowerParams, NormalKnownTParams, AdaptiveNormalParams>;

/// "ogd", "power", "normal_knownT" or "adaptive_normal".
std::string_view strategy_tag(const StrategyParams& params);

/// Gradient bound G of the game the strategy was tuned for.
double strategy_grad_bound(const StrategyParams& params);

/// Horizon the strategy needs, if any.
std::optional<int> strategy_horizon(const StrategyParams& params);

/// Throws InvalidArgument naming the violated precondition.
void validate(const OgdParams& params);
void validate(const PowerParams& params);
void validate(const NormalKnownTParams& params);
void validate(const AdaptiveNormalParams& params);
void validate(const StrategyParams& params);

}  // namespace mmo
