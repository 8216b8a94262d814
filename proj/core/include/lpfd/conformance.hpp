#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpfd/model.hpp"

// Cross-validation of the solution-concept routes: direct solvers,
// formula-based solvers, the brute-force oracles, and (for ca on small
// groups) the cover-disjunction expansion must all agree, model by model,
// group by group.
namespace lpfd::conformance {

struct Config {
  int models = 200;
  std::uint64_t seed = 0;
  int maxPlayers = 4;
  int maxActions = 3;
  // The cover disjunction is evaluated for groups up to this size.
  int caExpansionLimit = 4;
};

struct Mismatch {
  int modelIndex = 0;
  std::uint64_t modelSeed = 0;
  std::string label;
  std::string group;
  std::string routeA;
  std::string routeB;
  std::string detail;
};

struct Report {
  int modelsRun = 0;
  long long comparisons = 0;
  std::vector<Mismatch> mismatches;
};

Report run(const Config& config);

// Same comparisons against one existing model (used by fixture tests).
Report runOnModel(const PDModel& model, const Config& config, int modelIndex = 0,
                  std::uint64_t modelSeed = 0);

}  // namespace lpfd::conformance
