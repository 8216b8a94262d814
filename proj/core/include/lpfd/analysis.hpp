#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpfd/formula.hpp"
#include "lpfd/model.hpp"

namespace lpfd::analysis {

enum class Concept { Nash, WeakPareto, StrongPareto, PaY, Ca, Ca1, Ca2 };

const char* conceptName(Concept c);
std::optional<Concept> conceptFromName(const std::string& name);

struct ProfileEvidence {
  // Failures: a profile witnessing the violated condition, plus the player
  // who strictly gains where the definition singles one out.
  std::optional<int> dominator;
  std::optional<int> gainer;
  // ca2 failures: the subgroup whose optimality fails.
  std::optional<PlayerSet> failedSubgroup;
  // ca successes: a covering family of satisfying proper subsets.
  std::optional<std::vector<PlayerSet>> cover;
};

struct AnalysisReport {
  Concept kind = Concept::Nash;
  PlayerSet group;
  PlayerSet fixedGroup;  // the agreement group used by the search
  std::vector<int> solutions;  // ascending profile indices
  std::map<int, ProfileEvidence> evidence;

  bool isSolution(int profile) const;
  std::vector<bool> solutionMask(int profileCount) const;
};

struct AnalysisOptions {
  // Native ca/ca2 enumerate the subset lattice of X; larger groups are
  // rejected with a ResourceError.
  int caGroupLimit = 16;
};

// Direct-definition solvers. Each searches profiles against the literal
// definition; the formula-based routes below exist for cross-validation.

// No member of X can strictly improve by deviating alone.
AnalysisReport nash(const PDModel& m, PlayerSet group);

// No profile fixing -X strictly improves every member of X.
AnalysisReport weakPareto(const PDModel& m, PlayerSet group);

// No profile fixing -X weakly improves all of X and strictly improves some
// member.
AnalysisReport strongPareto(const PDModel& m, PlayerSet group);

// strongPareto with the fixed group chosen freely instead of -X.
AnalysisReport paY(const PDModel& m, PlayerSet fixed, PlayerSet group);

// Nash for X plus a family of proper subgroups, each optimal with -X
// fixed, that covers X. Witness covers are the maximal satisfying
// subgroups, greedily pruned in canonical order (deterministic, not
// guaranteed minimum cardinality).
AnalysisReport ca(const PDModel& m, PlayerSet group, const AnalysisOptions& options = {});

// Pareto optimal Nash equilibrium.
AnalysisReport ca1(const PDModel& m, PlayerSet group);

// Every subgroup of X (including X itself) in its optimal state.
AnalysisReport ca2(const PDModel& m, PlayerSet group, const AnalysisOptions& options = {});

// Formula route: bind the defining formula and evaluate it everywhere.
// For Ca this is the cover disjunction and is subject to BindOptions
// bounds; prefer the native solver for larger groups.
std::vector<bool> viaFormula(const PDModel& m, Concept kind, PlayerSet group);
std::vector<bool> paYViaFormula(const PDModel& m, PlayerSet fixed, PlayerSet group);

// The shared-complement Nash variant: every conjunct fixes -X rather than
// -{x}. Strictly stronger than `nash` on some models; kept separate so the
// two readings can be compared.
std::vector<bool> nashJointComplementViaFormula(const PDModel& m, PlayerSet group);

}  // namespace lpfd::analysis
