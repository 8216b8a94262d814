#include "lpfd/bind.hpp"

#include <functional>

#include "lpfd/errors.hpp"

namespace lpfd {

namespace {

PlayerSet resolveGroup(const MacroGroup& g, const Vocabulary& vocab) {
  return vocab.resolve(g.names, g.complement);
}

GroupQuery resolveQuery(const MacroQuery& q, const Vocabulary& vocab) {
  return GroupQuery{resolveGroup(q.eq, vocab), resolveGroup(q.weak, vocab),
                    resolveGroup(q.strict, vocab)};
}

}  // namespace

Formula paYFormula(const Vocabulary& vocab, PlayerSet fixed, PlayerSet group) {
  if (!fixed.subsetOf(vocab.allPlayers()) || !group.subsetOf(vocab.allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
  std::vector<Formula> parts;
  for (int x : group) {
    parts.push_back(Formula::box(GroupQuery{fixed, group.without(x), PlayerSet::single(x)},
                                 Formula::falsum()));
  }
  return Formula::conjunctionAll(parts);
}

Formula paFormula(const Vocabulary& vocab, PlayerSet group) {
  return paYFormula(vocab, vocab.allPlayers() - group, group);
}

Formula naFormula(const Vocabulary& vocab, PlayerSet group) {
  if (!group.subsetOf(vocab.allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
  std::vector<Formula> parts;
  for (int x : group) {
    parts.push_back(Formula::box(
        GroupQuery{vocab.allPlayers().without(x), PlayerSet{}, PlayerSet::single(x)},
        Formula::falsum()));
  }
  return Formula::conjunctionAll(parts);
}

Formula naJointComplementFormula(const Vocabulary& vocab, PlayerSet group) {
  if (!group.subsetOf(vocab.allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
  std::vector<Formula> parts;
  for (int x : group) {
    parts.push_back(Formula::box(
        GroupQuery{vocab.allPlayers() - group, PlayerSet{}, PlayerSet::single(x)},
        Formula::falsum()));
  }
  return Formula::conjunctionAll(parts);
}

Formula weakParetoFormula(const Vocabulary& vocab, PlayerSet group) {
  return Formula::box(GroupQuery{vocab.allPlayers() - group, PlayerSet{}, group},
                      Formula::falsum());
}

Formula ca1Formula(const Vocabulary& vocab, PlayerSet group) {
  return Formula::conjunction(paFormula(vocab, group), naFormula(vocab, group));
}

Formula ca2Formula(const Vocabulary& vocab, PlayerSet group) {
  std::vector<Formula> parts;
  for (PlayerSet sub : group.subsets()) parts.push_back(paFormula(vocab, sub));
  return Formula::conjunctionAll(parts);
}

std::vector<std::vector<PlayerSet>> enumerateCovers(PlayerSet group, long long searchLimit) {
  // Candidate members: proper subsets of the group, ascending mask order.
  std::vector<PlayerSet> candidates;
  for (PlayerSet sub : group.subsets()) {
    if (sub != group) candidates.push_back(sub);
  }

  std::vector<std::vector<PlayerSet>> covers;
  std::vector<PlayerSet> chosen;
  long long examined = 0;

  std::function<void(std::size_t, PlayerSet)> walk = [&](std::size_t index, PlayerSet covered) {
    if (index == candidates.size()) {
      if (++examined > searchLimit) {
        throw ResourceError("cover enumeration exceeded its search bound; use the native solver");
      }
      if (covered == group) covers.push_back(chosen);
      return;
    }
    walk(index + 1, covered);
    chosen.push_back(candidates[index]);
    walk(index + 1, covered | candidates[index]);
    chosen.pop_back();
  };
  walk(0, PlayerSet{});
  return covers;
}

Formula caCoverFormula(const Vocabulary& vocab, PlayerSet group, const BindOptions& options) {
  if (group.size() > options.caGroupLimit) {
    throw ResourceError("ca expansion limited to groups of at most " +
                        std::to_string(options.caGroupLimit) + " players; use the native solver");
  }
  const PlayerSet fixed = vocab.allPlayers() - group;
  const Formula nash = naFormula(vocab, group);

  // One pa part per proper subset, shared across all disjuncts.
  std::vector<PlayerSet> properSubsets;
  std::vector<Formula> paParts;
  for (PlayerSet sub : group.subsets()) {
    if (sub == group) continue;
    properSubsets.push_back(sub);
    paParts.push_back(paYFormula(vocab, fixed, sub));
  }
  auto paPartFor = [&](PlayerSet sub) {
    for (std::size_t i = 0; i < properSubsets.size(); ++i) {
      if (properSubsets[i] == sub) return paParts[i];
    }
    return Formula::truth();  // unreachable for cover members
  };

  std::vector<Formula> disjuncts;
  for (const auto& cover : enumerateCovers(group, options.caSearchLimit)) {
    std::vector<Formula> parts;
    parts.push_back(nash);
    for (PlayerSet member : cover) parts.push_back(paPartFor(member));
    disjuncts.push_back(Formula::conjunctionAll(parts));
  }
  return Formula::disjunctionAll(disjuncts);
}

Formula bind(const MacroFormula& f, const Vocabulary& vocab, BindDiagnostics* diagnostics,
             const BindOptions& options) {
  using Kind = MacroFormula::Kind;
  auto warn = [&](const std::string& message) {
    if (diagnostics) diagnostics->warnings.push_back(message);
  };

  switch (f.kind()) {
    case Kind::Atom: {
      if (!vocab.hasPredicate(f.predicate())) {
        throw VocabularyError("unknown predicate '" + f.predicate() + "'");
      }
      if (vocab.arity(f.predicate()) != static_cast<int>(f.args().size())) {
        throw VocabularyError("predicate '" + f.predicate() + "' expects " +
                              std::to_string(vocab.arity(f.predicate())) + " arguments, got " +
                              std::to_string(f.args().size()));
      }
      std::vector<int> args;
      args.reserve(f.args().size());
      for (const auto& name : f.args()) args.push_back(vocab.playerIndexOf(name));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Kind::True:
      return Formula::truth();
    case Kind::False:
      return Formula::falsum();
    case Kind::Not:
      return Formula::negation(bind(f.child(), vocab, diagnostics, options));
    case Kind::And:
      return Formula::conjunction(bind(f.left(), vocab, diagnostics, options),
                                  bind(f.right(), vocab, diagnostics, options));
    case Kind::Or:
      return Formula::disjunction(bind(f.left(), vocab, diagnostics, options),
                                  bind(f.right(), vocab, diagnostics, options));
    case Kind::Implies:
      return Formula::implication(bind(f.left(), vocab, diagnostics, options),
                                  bind(f.right(), vocab, diagnostics, options));
    case Kind::Box:
      return Formula::box(resolveQuery(f.query(), vocab), bind(f.child(), vocab, diagnostics, options));
    case Kind::Dual:
      return Formula::dual(resolveQuery(f.query(), vocab), bind(f.child(), vocab, diagnostics, options));
    case Kind::DepAtom:
      return Formula::depAtom(resolveQuery(f.query(), vocab), vocab.playerIndexOf(f.var()));
    case Kind::DepAll: {
      GroupQuery q = resolveQuery(f.query(), vocab);
      std::vector<Formula> parts;
      for (int y : resolveGroup(f.group(), vocab)) parts.push_back(Formula::depAtom(q, y));
      return Formula::conjunctionAll(parts);
    }
    case Kind::DD:
      return Formula::box(GroupQuery{resolveGroup(f.group(), vocab), {}, {}},
                          bind(f.child(), vocab, diagnostics, options));
    case Kind::D:
      return Formula::depAtom(GroupQuery{resolveGroup(f.group(), vocab), {}, {}},
                              vocab.playerIndexOf(f.var()));
    case Kind::Pa:
      return paFormula(vocab, resolveGroup(f.group(), vocab));
    case Kind::PaY:
      return paYFormula(vocab, resolveGroup(f.fixed(), vocab), resolveGroup(f.group(), vocab));
    case Kind::Na:
      return naFormula(vocab, resolveGroup(f.group(), vocab));
    case Kind::Ca1:
      return ca1Formula(vocab, resolveGroup(f.group(), vocab));
    case Kind::Ca2:
      return ca2Formula(vocab, resolveGroup(f.group(), vocab));
    case Kind::Ca: {
      PlayerSet group = resolveGroup(f.group(), vocab);
      if (group.empty()) {
        warn("ca({}) is vacuously true: the empty family covers the empty group");
      } else if (group.size() == 1) {
        warn("ca of a singleton group is unsatisfiable: no family of proper subsets covers it");
      }
      return caCoverFormula(vocab, group, options);
    }
  }
  throw Error("unhandled formula kind in bind");
}

}  // namespace lpfd
