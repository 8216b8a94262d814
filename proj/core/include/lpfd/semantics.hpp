#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "lpfd/formula.hpp"
#include "lpfd/model.hpp"

namespace lpfd {

struct EvalResult {
  bool value = false;
  // For a failing modality or dependence atom at the top level: the first
  // reachable profile (canonical order) violating the body. For a true
  // dual: the first reachable profile satisfying it.
  std::optional<int> witness;
};

// Truth evaluation over one model. Results are memoized per (subformula,
// profile) within an Evaluator instance, so cover disjunctions that share
// their pa parts are cheap. Instances are single-model and not shared
// between threads; the model itself is immutable and freely shareable.
class Evaluator {
 public:
  explicit Evaluator(const PDModel& model) : model_(model) {}

  // Plain truth value at a profile.
  bool truth(const Formula& f, int profile);

  // Truth plus top-level witness extraction.
  EvalResult eval(const Formula& f, int profile);

  // Truth at every profile, indexed by profile.
  std::vector<bool> evalAll(const Formula& f);

  // True iff the formula holds at every profile.
  bool valid(const Formula& f);

 private:
  bool truthUnchecked(const Formula& f, int profile);

  const PDModel& model_;
  // Roots pin the shared subterm nodes the memo table keys on.
  std::vector<Formula> roots_;
  std::unordered_map<const void*, std::vector<signed char>> memo_;
};

// One-shot conveniences.
EvalResult eval(const PDModel& model, int profile, const Formula& f);
std::vector<bool> evalAll(const PDModel& model, const Formula& f);
bool valid(const PDModel& model, const Formula& f);

}  // namespace lpfd
