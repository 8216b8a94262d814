#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpfd/formula.hpp"
#include "lpfd/testgen.hpp"

namespace lpfd::axioms {

// Metavariable bindings extracted by a successful schema match. Group
// metavariables bind literal player sets only; complement notation must be
// resolved before matching.
struct Substitution {
  std::map<std::string, PlayerSet> groups;
  std::map<std::string, int> players;
  std::map<std::string, Formula> formulas;
};

struct EnumOptions {
  // Assignment spaces grow fast; enumeration emits at most this many
  // instances, deterministically spread over the space, and flags
  // truncation.
  int maxInstances = 200;
  std::uint64_t sampleSeed = 0;
};

struct EnumResult {
  std::vector<Formula> instances;
  bool truncated = false;
};

// One axiom schema: a named matcher plus a bounded instance enumerator.
// Matching is purely syntactic; side conditions (subset constraints,
// membership, free-player conditions) are checked on the extracted groups.
class Schema {
 public:
  using MatchFn = std::function<std::optional<Substitution>(const Formula&)>;
  using EnumFn =
      std::function<EnumResult(const Vocabulary&, const std::vector<Formula>&, const EnumOptions&)>;

  Schema(std::string name, std::string display, bool isRule, MatchFn match, EnumFn enumerate)
      : name_(std::move(name)),
        display_(std::move(display)),
        isRule_(isRule),
        match_(std::move(match)),
        enumerate_(std::move(enumerate)) {}

  const std::string& name() const { return name_; }
  const std::string& display() const { return display_; }
  bool isRule() const { return isRule_; }

  std::optional<Substitution> match(const Formula& candidate) const {
    return match_ ? match_(candidate) : std::nullopt;
  }
  EnumResult enumerate(const Vocabulary& vocab, const std::vector<Formula>& pool,
                       const EnumOptions& options) const {
    return enumerate_ ? enumerate_(vocab, pool, options) : EnumResult{};
  }

 private:
  std::string name_;
  std::string display_;
  bool isRule_;
  MatchFn match_;
  EnumFn enumerate_;
};

// The full schema table: II.a (necessitation rule), II.b (K), II.c1,
// II.c2, II.d (factivity), II.e (monotonicity), II.f-II.h (weak/strict
// interaction in dual form), II.j (the generalized interaction axiom),
// III.a, III.b (dependence atoms), IV.a (transfer).
const std::vector<Schema>& schemas();
const Schema* findSchema(const std::string& name);

// II.f with the union moved into the strict slot; deliberately unsound,
// used as the fuzzing negative control.
Schema corruptedSchemaIIf();

// Depth-bounded formula pool for enumeration: falsum, truth, predicate
// atoms over a few canonical argument tuples, and `depth` modal layers.
std::vector<Formula> formulaPool(const Vocabulary& vocab, int depth);

// Propositional tautology instance test: truth table over the maximal
// modal/atomic subformulas. Throws ResourceError past maxAtoms distinct
// units.
bool isTautologyInstance(const Formula& f, int maxAtoms = 16);

struct FuzzConfig {
  int models = 200;
  std::uint64_t seed = 0;
  int depth = 1;
  int instancesPerSchema = 60;
  // Model shape: small vocabularies, mixed total/non-total preferences.
  int maxPlayers = 4;
  int maxActions = 3;
};

struct FuzzViolation {
  int modelIndex = 0;
  std::uint64_t modelSeed = 0;
  std::string schema;
  std::string instance;
  std::string profileId;
};

struct FuzzReport {
  int modelsRun = 0;
  long long instancesChecked = 0;
  bool truncated = false;
  std::vector<FuzzViolation> violations;
};

// Validates every enumerated instance of every schema on `models` seeded
// random models; any violation is a finding about the evaluator, the
// matcher or the generator. The necessitation rule is exercised as: for
// every pool formula valid on the model, its boxed forms stay valid.
FuzzReport soundnessFuzz(const FuzzConfig& config);

// Same loop restricted to a single schema; negative controls run through
// this with corruptedSchemaIIf().
FuzzReport soundnessFuzzSchema(const FuzzConfig& config, const Schema& schema);

}  // namespace lpfd::axioms
