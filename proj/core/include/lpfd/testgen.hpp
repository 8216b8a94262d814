#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lpfd/model.hpp"

// Deterministic random model generation and straight-line oracle solvers.
// The oracles transcribe the solution-concept definitions directly against
// the raw model data and deliberately share no code with the analysis
// module; they exist to cross-check it.
namespace lpfd::testgen {

enum class PreferenceMode {
  Utility,         // random integer utilities; induced orders are total
  RandomPreorder,  // reflexive-transitive closure of random pairs
};

struct GenConfig {
  int minPlayers = 2;
  int maxPlayers = 4;
  int minActions = 2;
  int maxActions = 3;
  // Probability that a product profile is admissible; one profile is always
  // kept so the model stays evaluable.
  double profileDensity = 0.8;
  PreferenceMode mode = PreferenceMode::Utility;
  // Regenerate (bounded) until every order is total. Utility mode is total
  // by construction.
  bool requireTotal = false;
  int maxPredicates = 2;
  int maxArity = 2;
  std::uint64_t seed = 0;
};

// Deterministic per seed: equal configs yield equal models.
PDModel generate(const GenConfig& config);

// Stable per-task sub-seed derivation.
std::uint64_t splitSeed(std::uint64_t seed, std::uint64_t index);

// The shared fuzz population recipe: small vocabularies, alternating
// utility/preorder preference modes, seeded per index. Soundness fuzzing
// and solver conformance runs draw from the same models this way.
GenConfig fuzzModelConfig(std::uint64_t baseSeed, int index, int maxPlayers = 4, int maxActions = 3);

// Profiles from which no member of X can strictly gain by deviating alone.
std::vector<int> oracleNash(const PDModel& m, PlayerSet group);

// Profiles with no -X-fixed alternative strictly better for all of X.
std::vector<int> oracleWeakPareto(const PDModel& m, PlayerSet group);

// Profiles with no -X-fixed alternative weakly better for all of X and
// strictly better for at least one member.
std::vector<int> oracleStrongPareto(const PDModel& m, PlayerSet group);

struct OracleCaResult {
  std::vector<int> solutions;
  // First cover found per solution profile, in the fixed candidate order.
  std::map<int, std::vector<PlayerSet>> covers;
};

// Explicit cover search: enumerates families of satisfying proper
// subgroups (candidates in ascending mask order) until one covers X.
// Groups over 5 players are rejected with a ResourceError.
OracleCaResult oracleCa(const PDModel& m, PlayerSet group);

std::vector<int> oracleCa1(const PDModel& m, PlayerSet group);
std::vector<int> oracleCa2(const PDModel& m, PlayerSet group);

}  // namespace lpfd::testgen
