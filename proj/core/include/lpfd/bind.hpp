#pragma once

#include <string>
#include <vector>

#include "lpfd/formula.hpp"

namespace lpfd {

struct BindOptions {
  // Hard cap on |X| for expanding ca(X) into its cover disjunction.
  int caGroupLimit = 12;
  // Cover families explode long before the group cap; searching stops with
  // a ResourceError once this many families have been examined.
  long long caSearchLimit = 4'000'000;
};

struct BindDiagnostics {
  std::vector<std::string> warnings;
};

// Resolves names against the vocabulary, expands every defined operator and
// returns a pure bound formula. Throws VocabularyError for unknown
// players/predicates and arity mismatches, ResourceError when a ca
// expansion exceeds its bounds.
Formula bind(const MacroFormula& f, const Vocabulary& vocab, BindDiagnostics* diagnostics = nullptr,
             const BindOptions& options = {});

// Definitional expansions, shared by the binder and the formula-based
// solvers. All conjunctions run over ascending player index.

// pa(X): for each x in X, no reachable profile fixing -X, weakly improving
// X-{x} and strictly improving x.
Formula paFormula(const Vocabulary& vocab, PlayerSet group);

// paY(Y; X): pa with the fixed group Y chosen freely instead of -X.
Formula paYFormula(const Vocabulary& vocab, PlayerSet fixed, PlayerSet group);

// na(X): conjunction of pa({x}) over x in X; unilateral-deviation reading.
Formula naFormula(const Vocabulary& vocab, PlayerSet group);

// Variant Nash formula that fixes the whole complement -X in every
// conjunct instead of -{x}; strictly stronger than naFormula for |X| > 1.
Formula naJointComplementFormula(const Vocabulary& vocab, PlayerSet group);

// Weak Pareto optimality: no profile fixing -X strictly improves all of X.
Formula weakParetoFormula(const Vocabulary& vocab, PlayerSet group);

Formula ca1Formula(const Vocabulary& vocab, PlayerSet group);
Formula ca2Formula(const Vocabulary& vocab, PlayerSet group);

// The cover disjunction for ca(X): one disjunct per family of proper
// subsets of X with union X. Subject to BindOptions bounds.
Formula caCoverFormula(const Vocabulary& vocab, PlayerSet group, const BindOptions& options = {});

// All families of proper subsets of `group` whose union is `group`,
// deterministic order. Throws ResourceError past `searchLimit` examined
// families.
std::vector<std::vector<PlayerSet>> enumerateCovers(PlayerSet group, long long searchLimit);

}  // namespace lpfd
