#include "lpfd/semantics.hpp"

namespace lpfd {

bool Evaluator::truth(const Formula& f, int profile) {
  validateAgainst(f, model_.vocab());
  roots_.push_back(f);
  if (profile < 0 || profile >= model_.profileCount()) {
    throw DomainError("profile index " + std::to_string(profile) + " is not in this model");
  }
  return truthUnchecked(f, profile);
}

bool Evaluator::truthUnchecked(const Formula& f, int profile) {
  auto& slots = memo_[f.id()];
  if (slots.empty()) slots.assign(static_cast<std::size_t>(model_.profileCount()), -1);
  signed char& slot = slots[static_cast<std::size_t>(profile)];
  if (slot >= 0) return slot != 0;

  bool result = false;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const PredicateInterp* interp = model_.findInterp(f.predicate());
      if (interp == nullptr) {
        result = false;  // empty default interpretation
        break;
      }
      std::vector<int> tuple;
      tuple.reserve(f.args().size());
      const Profile& prof = model_.profile(profile);
      for (int x : f.args()) tuple.push_back(prof.actions[static_cast<std::size_t>(x)]);
      result = interp->tuples.count(tuple) > 0;
      break;
    }
    case Formula::Kind::Falsum:
      result = false;
      break;
    case Formula::Kind::Not:
      result = !truthUnchecked(f.child(), profile);
      break;
    case Formula::Kind::And:
      result = truthUnchecked(f.left(), profile) && truthUnchecked(f.right(), profile);
      break;
    case Formula::Kind::Box: {
      result = true;
      for (int t : model_.reachSet(profile, f.query())) {
        if (!truthUnchecked(f.child(), t)) {
          result = false;
          break;
        }
      }
      break;
    }
    case Formula::Kind::DepAtom: {
      result = true;
      const PlayerSet target = PlayerSet::single(f.depTarget());
      for (int t : model_.reachSet(profile, f.query())) {
        if (!model_.agree(profile, t, target)) {
          result = false;
          break;
        }
      }
      break;
    }
  }
  slot = result ? 1 : 0;
  return result;
}

EvalResult Evaluator::eval(const Formula& f, int profile) {
  EvalResult out;
  out.value = truth(f, profile);

  // Witness extraction for the outermost relevant operator.
  if (!out.value && (f.kind() == Formula::Kind::Box || f.kind() == Formula::Kind::DepAtom)) {
    for (int t : model_.reachSet(profile, f.query())) {
      const bool bodyHolds = f.kind() == Formula::Kind::Box
                                 ? truthUnchecked(f.child(), t)
                                 : model_.agree(profile, t, PlayerSet::single(f.depTarget()));
      if (!bodyHolds) {
        out.witness = t;
        break;
      }
    }
  } else if (out.value && f.kind() == Formula::Kind::Not &&
             f.child().kind() == Formula::Kind::Box) {
    // True negated modality (covers the dual): report the reachable profile
    // that refutes the body.
    const Formula& inner = f.child();
    for (int t : model_.reachSet(profile, inner.query())) {
      if (!truthUnchecked(inner.child(), t)) {
        out.witness = t;
        break;
      }
    }
  }
  return out;
}

std::vector<bool> Evaluator::evalAll(const Formula& f) {
  validateAgainst(f, model_.vocab());
  roots_.push_back(f);
  std::vector<bool> out(static_cast<std::size_t>(model_.profileCount()));
  for (int s = 0; s < model_.profileCount(); ++s) out[static_cast<std::size_t>(s)] = truthUnchecked(f, s);
  return out;
}

bool Evaluator::valid(const Formula& f) {
  validateAgainst(f, model_.vocab());
  roots_.push_back(f);
  for (int s = 0; s < model_.profileCount(); ++s) {
    if (!truthUnchecked(f, s)) return false;
  }
  return true;
}

EvalResult eval(const PDModel& model, int profile, const Formula& f) {
  return Evaluator(model).eval(f, profile);
}

std::vector<bool> evalAll(const PDModel& model, const Formula& f) {
  return Evaluator(model).evalAll(f);
}

bool valid(const PDModel& model, const Formula& f) { return Evaluator(model).valid(f); }

}  // namespace lpfd
