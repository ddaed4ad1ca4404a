#pragma once

// Experiment files: YAML documents describing a sweep of
// strategies x adversaries x seeds. See README.md for the key reference.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmo/adversaries.hpp"
#include "mmo/engine.hpp"
#include "mmo/game_config.hpp"
#include "mmo/params.hpp"

namespace mmo::app {

/// Parse or validation failure; what() is "<file>:<line>: <message>".
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& file, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ComparatorSpec {
  double norm;
  std::uint64_t direction_seed;
};

struct OutputSpec {
  std::string dir = "out";
  bool json = false;
};

struct ExperimentSpec {
  GameConfig game;
  int rounds = 0;
  std::vector<StrategyParams> strategies;
  std::vector<AdversaryParams> adversaries;
  std::vector<ComparatorSpec> comparators;
  int repeats = 1;
  BoundKind bound = BoundKind::published;
  OutputSpec outputs;
};

ExperimentSpec parse_experiment_file(const std::string& path);
ExperimentSpec parse_experiment_text(const std::string& text, const std::string& name = "<string>");

/// u = norm * (unit vector drawn from Rng(direction_seed)); 0 for norm 0.
Point comparator_point(const ComparatorSpec& spec, std::size_t dim);

}  // namespace mmo::app
