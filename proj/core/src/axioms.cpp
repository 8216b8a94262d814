#include "lpfd/axioms.hpp"

#include <algorithm>

#include "lpfd/semantics.hpp"

namespace lpfd::axioms {

namespace {

// ---------------------------------------------------------------------------
// Matching helpers

// Flattens a conjunction of dependence atoms sharing one query into
// (query, targets). Rejects mixed queries and repeated targets.
std::optional<std::pair<GroupQuery, PlayerSet>> asDepConjunction(const Formula& f) {
  GroupQuery query;
  PlayerSet targets;
  bool first = true;
  for (const Formula& part : f.conjuncts()) {
    if (part.kind() != Formula::Kind::DepAtom) return std::nullopt;
    if (first) {
      query = part.query();
      first = false;
    } else if (!(part.query() == query)) {
      return std::nullopt;
    }
    if (targets.contains(part.depTarget())) return std::nullopt;
    targets = targets.with(part.depTarget());
  }
  if (first) return std::nullopt;
  return std::make_pair(query, targets);
}

// Canonical conjunction of dependence atoms over ascending targets; the
// shape the matchers rebuild and compare against.
Formula depConjunction(const GroupQuery& query, PlayerSet targets) {
  std::vector<Formula> parts;
  for (int y : targets) parts.push_back(Formula::depAtom(query, y));
  return Formula::conjunctionAll(parts);
}

void putQuery(Substitution& subst, const GroupQuery& q, const char* x = "X", const char* w = "X'",
              const char* s = "X''") {
  subst.groups.emplace(x, q.eq);
  subst.groups.emplace(w, q.weak);
  subst.groups.emplace(s, q.strict);
}

// ---------------------------------------------------------------------------
// Enumeration helpers

// A mixed-radix assignment space with deterministic sparse sampling.
class Space {
 public:
  void dim(long long size) { dims_.push_back(size); }

  long long total() const {
    long long t = 1;
    for (long long d : dims_) {
      if (d <= 0) return 0;
      t *= d;
    }
    return t;
  }

  std::vector<long long> decode(long long index) const {
    std::vector<long long> out(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      out[i] = index % dims_[i];
      index /= dims_[i];
    }
    return out;
  }

 private:
  std::vector<long long> dims_;
};

// Builds instances for up to maxInstances assignments; indexes are spread
// evenly over the space when it is larger than the cap. Builders return
// nullopt for assignments failing a side condition.
template <typename Build>
EnumResult sampleSpace(const Space& space, const EnumOptions& options, Build build) {
  EnumResult result;
  const long long total = space.total();
  if (total == 0) return result;
  if (total <= options.maxInstances) {
    for (long long i = 0; i < total; ++i) {
      if (auto inst = build(space.decode(i))) result.instances.push_back(*inst);
    }
    return result;
  }
  result.truncated = true;
  const long long offset = static_cast<long long>(options.sampleSeed % static_cast<std::uint64_t>(total));
  for (long long i = 0; i < options.maxInstances; ++i) {
    const long long index = (offset + (i * total) / options.maxInstances) % total;
    if (auto inst = build(space.decode(index))) result.instances.push_back(*inst);
  }
  return result;
}

long long subsetCount(int players) { return 1LL << players; }

// Inclusion pairs (A, B) with A subset of B, one trit per player:
// 0 = neither, 1 = B only, 2 = both.
long long inclusionPairCount(int players) {
  long long t = 1;
  for (int i = 0; i < players; ++i) t *= 3;
  return t;
}

std::pair<PlayerSet, PlayerSet> inclusionPair(long long index, int players) {
  PlayerSet a;
  PlayerSet b;
  for (int i = 0; i < players; ++i) {
    switch (index % 3) {
      case 1:
        b = b.with(i);
        break;
      case 2:
        a = a.with(i);
        b = b.with(i);
        break;
      default:
        break;
    }
    index /= 3;
  }
  return {a, b};
}

GroupQuery queryOf(long long eq, long long weak, long long strict) {
  return GroupQuery{PlayerSet::fromMask(static_cast<std::uint64_t>(eq)),
                    PlayerSet::fromMask(static_cast<std::uint64_t>(weak)),
                    PlayerSet::fromMask(static_cast<std::uint64_t>(strict))};
}

// ---------------------------------------------------------------------------
// Schema table

std::vector<Schema> buildSchemas() {
  using F = Formula;
  std::vector<Schema> table;

  // II.a -- necessitation; exercised by the derivation checker and the
  // rule-soundness pass of the fuzzer.
  table.emplace_back("II.a", "from phi infer [q] phi", true, Schema::MatchFn{}, Schema::EnumFn{});

  // II.b -- K distribution, implication reading.
  table.emplace_back(
      "II.b", "[q](phi -> psi) -> ([q]phi -> [q]psi)", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        const auto& [premise, conclusion] = *imp;
        if (premise.kind() != F::Kind::Box) return std::nullopt;
        auto body = premise.child().asImplication();
        if (!body) return std::nullopt;
        const GroupQuery q = premise.query();
        F expected = F::implication(F::box(q, body->first), F::box(q, body->second));
        if (!(conclusion == expected)) return std::nullopt;
        Substitution subst;
        putQuery(subst, q);
        subst.formulas.emplace("phi", body->first);
        subst.formulas.emplace("psi", body->second);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const F& phi = pool[static_cast<std::size_t>(a[3])];
          const F& psi = pool[static_cast<std::size_t>(a[4])];
          return F::implication(F::box(q, F::implication(phi, psi)),
                                F::implication(F::box(q, phi), F::box(q, psi)));
        });
      });

  // II.c1 -- phi -> [=X; <={}; <{}] phi, Free(phi) within X.
  table.emplace_back(
      "II.c1", "phi -> [=X; <={}; <{}] phi provided Free(phi) in X", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        const auto& [phi, conclusion] = *imp;
        if (conclusion.kind() != F::Kind::Box) return std::nullopt;
        const GroupQuery q = conclusion.query();
        if (!q.weak.empty() || !q.strict.empty()) return std::nullopt;
        if (!(conclusion.child() == phi)) return std::nullopt;
        if (!freePlayers(phi).subsetOf(q.eq)) return std::nullopt;
        Substitution subst;
        subst.groups.emplace("X", q.eq);
        subst.formulas.emplace("phi", phi);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        Space space;
        space.dim(subsetCount(vocab.playerCount()));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const PlayerSet x = PlayerSet::fromMask(static_cast<std::uint64_t>(a[0]));
          const F& phi = pool[static_cast<std::size_t>(a[1])];
          if (!freePlayers(phi).subsetOf(x)) return std::nullopt;
          return F::implication(phi, F::box(GroupQuery{x, {}, {}}, phi));
        });
      });

  // II.c2 -- transitivity: [q]phi -> [q][q]phi.
  table.emplace_back(
      "II.c2", "[q]phi -> [q][q]phi", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        const auto& [premise, conclusion] = *imp;
        if (premise.kind() != F::Kind::Box) return std::nullopt;
        if (!(conclusion == F::box(premise.query(), premise))) return std::nullopt;
        Substitution subst;
        putQuery(subst, premise.query());
        subst.formulas.emplace("phi", premise.child());
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          F boxed = F::box(q, pool[static_cast<std::size_t>(a[3])]);
          return F::implication(boxed, F::box(q, boxed));
        });
      });

  // II.d -- factivity with an empty strict group.
  table.emplace_back(
      "II.d", "[=X; <=X'; <{}] phi -> phi", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        const auto& [premise, conclusion] = *imp;
        if (premise.kind() != F::Kind::Box) return std::nullopt;
        if (!premise.query().strict.empty()) return std::nullopt;
        if (!(premise.child() == conclusion)) return std::nullopt;
        Substitution subst;
        subst.groups.emplace("X", premise.query().eq);
        subst.groups.emplace("X'", premise.query().weak);
        subst.formulas.emplace("phi", conclusion);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const F& phi = pool[static_cast<std::size_t>(a[2])];
          return F::implication(F::box(queryOf(a[0], a[1], 0), phi), phi);
        });
      });

  // II.e -- monotonicity in all three groups.
  table.emplace_back(
      "II.e", "[q]phi -> [q']phi provided q grows componentwise", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        const auto& [premise, conclusion] = *imp;
        if (premise.kind() != F::Kind::Box || conclusion.kind() != F::Kind::Box) return std::nullopt;
        if (!(premise.child() == conclusion.child())) return std::nullopt;
        const GroupQuery a = premise.query();
        const GroupQuery b = conclusion.query();
        if (!a.eq.subsetOf(b.eq) || !a.weak.subsetOf(b.weak) || !a.strict.subsetOf(b.strict)) {
          return std::nullopt;
        }
        Substitution subst;
        putQuery(subst, a);
        putQuery(subst, b, "Y", "Y'", "Y''");
        subst.formulas.emplace("phi", premise.child());
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(inclusionPairCount(n));
        space.dim(inclusionPairCount(n));
        space.dim(inclusionPairCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const auto [eqA, eqB] = inclusionPair(a[0], n);
          const auto [weakA, weakB] = inclusionPair(a[1], n);
          const auto [strictA, strictB] = inclusionPair(a[2], n);
          const F& phi = pool[static_cast<std::size_t>(a[3])];
          return F::implication(F::box(GroupQuery{eqA, weakA, strictA}, phi),
                                F::box(GroupQuery{eqB, weakB, strictB}, phi));
        });
      });

  // II.f -- dia[q]phi -> dia[=X; <=X'+X''; <X'']phi.
  table.emplace_back(
      "II.f", "dia[q]phi -> dia[q with weak+strict merged]phi", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        auto premise = imp->first.asDual();
        if (!premise) return std::nullopt;
        const auto& [q, phi] = *premise;
        F expected = F::dual(GroupQuery{q.eq, q.weak | q.strict, q.strict}, phi);
        if (!(imp->second == expected)) return std::nullopt;
        Substitution subst;
        putQuery(subst, q);
        subst.formulas.emplace("phi", phi);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const F& phi = pool[static_cast<std::size_t>(a[3])];
          return F::implication(F::dual(q, phi),
                                F::dual(GroupQuery{q.eq, q.weak | q.strict, q.strict}, phi));
        });
      });

  // II.g -- strictness can absorb part of the weak group across a nested
  // dual step: dia[q] dia[=X; <=X'-Y; <X''+Y]phi -> dia[=X; <=X'; <X''+Y]phi.
  table.emplace_back(
      "II.g", "dia[q] dia[q weak-Y strict+Y]phi -> dia[q strict+Y]phi provided Y in X'", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        auto outer = imp->first.asDual();
        if (!outer) return std::nullopt;
        auto inner = outer->second.asDual();
        if (!inner) return std::nullopt;
        const GroupQuery q1 = outer->first;
        const GroupQuery q2 = inner->first;
        if (!(q2.eq == q1.eq)) return std::nullopt;
        if (!q2.weak.subsetOf(q1.weak)) return std::nullopt;
        const PlayerSet y = q1.weak - q2.weak;
        if (!(q2.strict == (q1.strict | y))) return std::nullopt;
        F expected = F::dual(GroupQuery{q1.eq, q1.weak, q1.strict | y}, inner->second);
        if (!(imp->second == expected)) return std::nullopt;
        Substitution subst;
        putQuery(subst, q1);
        subst.groups.emplace("Y", y);
        subst.formulas.emplace("phi", inner->second);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const PlayerSet y = PlayerSet::fromMask(static_cast<std::uint64_t>(a[3]));
          if (!y.subsetOf(q.weak)) return std::nullopt;
          const F& phi = pool[static_cast<std::size_t>(a[4])];
          F inner = F::dual(GroupQuery{q.eq, q.weak - y, q.strict | y}, phi);
          return F::implication(F::dual(q, inner),
                                F::dual(GroupQuery{q.eq, q.weak, q.strict | y}, phi));
        });
      });

  // II.h -- the converse absorption: dia[q] dia[=X; <=X'+Y; <X''-Y]phi ->
  // dia[=X; <=X'+Y; <X'']phi.
  table.emplace_back(
      "II.h", "dia[q] dia[q weak+Y strict-Y]phi -> dia[q weak+Y]phi provided Y in X''", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        auto outer = imp->first.asDual();
        if (!outer) return std::nullopt;
        auto inner = outer->second.asDual();
        if (!inner) return std::nullopt;
        const GroupQuery q1 = outer->first;
        const GroupQuery q2 = inner->first;
        if (!(q2.eq == q1.eq)) return std::nullopt;
        if (!q2.strict.subsetOf(q1.strict)) return std::nullopt;
        const PlayerSet y = q1.strict - q2.strict;
        if (!(q2.weak == (q1.weak | y))) return std::nullopt;
        F expected = F::dual(GroupQuery{q1.eq, q1.weak | y, q1.strict}, inner->second);
        if (!(imp->second == expected)) return std::nullopt;
        Substitution subst;
        putQuery(subst, q1);
        subst.groups.emplace("Y", y);
        subst.formulas.emplace("phi", inner->second);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const PlayerSet y = PlayerSet::fromMask(static_cast<std::uint64_t>(a[3]));
          if (!y.subsetOf(q.strict)) return std::nullopt;
          const F& phi = pool[static_cast<std::size_t>(a[4])];
          F inner = F::dual(GroupQuery{q.eq, q.weak | y, q.strict - y}, phi);
          return F::implication(F::dual(q, inner),
                                F::dual(GroupQuery{q.eq, q.weak | y, q.strict}, phi));
        });
      });

  // II.j -- the generalized weak/strict interaction: a weakly reachable
  // psi-profile is strictly reachable for some member of the weak group, or
  // sits in the symmetric part.
  table.emplace_back(
      "II.j", "(phi & dia[q]psi) -> (OR_x dia[q strict+x]psi | dia[q](psi & dia[q strict={}]phi))",
      false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        if (imp->first.kind() != F::Kind::And) return std::nullopt;
        const F phi = imp->first.left();
        auto dualPart = imp->first.right().asDual();
        if (!dualPart) return std::nullopt;
        const GroupQuery q = dualPart->first;
        const F psi = dualPart->second;
        std::vector<F> branches;
        for (int x : q.weak) {
          branches.push_back(F::dual(GroupQuery{q.eq, q.weak, q.strict.with(x)}, psi));
        }
        F expected = F::disjunction(
            F::disjunctionAll(branches),
            F::dual(q, F::conjunction(psi, F::dual(GroupQuery{q.eq, q.weak, {}}, phi))));
        if (!(imp->second == expected)) return std::nullopt;
        Substitution subst;
        putQuery(subst, q);
        subst.formulas.emplace("phi", phi);
        subst.formulas.emplace("psi", psi);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const F& phi = pool[static_cast<std::size_t>(a[3])];
          const F& psi = pool[static_cast<std::size_t>(a[4])];
          std::vector<F> branches;
          for (int x : q.weak) {
            branches.push_back(F::dual(GroupQuery{q.eq, q.weak, q.strict.with(x)}, psi));
          }
          return F::implication(
              F::conjunction(phi, F::dual(q, psi)),
              F::disjunction(F::disjunctionAll(branches),
                             F::dual(q, F::conjunction(psi, F::dual(GroupQuery{q.eq, q.weak, {}},
                                                                    phi)))));
        });
      });

  // III.a -- projection: [q]x provided x in X.
  table.emplace_back(
      "III.a", "dep[q]x provided x in X", false,
      [](const F& f) -> std::optional<Substitution> {
        if (f.kind() != F::Kind::DepAtom) return std::nullopt;
        if (!f.query().eq.contains(f.depTarget())) return std::nullopt;
        Substitution subst;
        putQuery(subst, f.query());
        subst.players.emplace("x", f.depTarget());
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        (void)pool;
        const int n = vocab.playerCount();
        Space space;
        space.dim(n);
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const int x = static_cast<int>(a[0]);
          const GroupQuery q = queryOf(a[1], a[2], a[3]);
          if (!q.eq.contains(x)) return std::nullopt;
          return F::depAtom(q, x);
        });
      });

  // III.b -- transitivity of dependence.
  table.emplace_back(
      "III.b", "dep[q]Y & dep[=Y; <=X'; <X'']Z -> dep[q]Z", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        if (imp->first.kind() != F::Kind::And) return std::nullopt;
        auto lhs = asDepConjunction(imp->first.left());
        auto rhs = asDepConjunction(imp->first.right());
        if (!lhs || !rhs) return std::nullopt;
        const auto& [q, y] = *lhs;
        const auto& [qy, z] = *rhs;
        if (!(qy.eq == y) || !(qy.weak == q.weak) || !(qy.strict == q.strict)) return std::nullopt;
        if (!(imp->second == depConjunction(q, z))) return std::nullopt;
        Substitution subst;
        putQuery(subst, q);
        subst.groups.emplace("Y", y);
        subst.groups.emplace("Z", z);
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        (void)pool;
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const PlayerSet y = PlayerSet::fromMask(static_cast<std::uint64_t>(a[3]));
          const PlayerSet z = PlayerSet::fromMask(static_cast<std::uint64_t>(a[4]));
          if (y.empty() || z.empty()) return std::nullopt;
          return F::implication(
              F::conjunction(depConjunction(q, y),
                             depConjunction(GroupQuery{y, q.weak, q.strict}, z)),
              depConjunction(q, z));
        });
      });

  // IV.a -- transfer between dependence atoms and the modality.
  table.emplace_back(
      "IV.a", "dep[q]Y & [=Y; <=X'; <X'']phi -> [q]phi", false,
      [](const F& f) -> std::optional<Substitution> {
        auto imp = f.asImplication();
        if (!imp) return std::nullopt;
        if (imp->first.kind() != F::Kind::And) return std::nullopt;
        auto lhs = asDepConjunction(imp->first.left());
        if (!lhs) return std::nullopt;
        const auto& [q, y] = *lhs;
        const F& boxed = imp->first.right();
        if (boxed.kind() != F::Kind::Box) return std::nullopt;
        const GroupQuery qb = boxed.query();
        if (!(qb.eq == y) || !(qb.weak == q.weak) || !(qb.strict == q.strict)) return std::nullopt;
        if (!(imp->second == F::box(q, boxed.child()))) return std::nullopt;
        Substitution subst;
        putQuery(subst, q);
        subst.groups.emplace("Y", y);
        subst.formulas.emplace("phi", boxed.child());
        return subst;
      },
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const PlayerSet y = PlayerSet::fromMask(static_cast<std::uint64_t>(a[3]));
          if (y.empty()) return std::nullopt;
          const F& phi = pool[static_cast<std::size_t>(a[4])];
          return F::implication(
              F::conjunction(depConjunction(q, y),
                             F::box(GroupQuery{y, q.weak, q.strict}, phi)),
              F::box(q, phi));
        });
      });

  return table;
}

}  // namespace

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = buildSchemas();
  return table;
}

const Schema* findSchema(const std::string& name) {
  for (const Schema& schema : schemas()) {
    if (schema.name() == name) return &schema;
  }
  return nullptr;
}

Schema corruptedSchemaIIf() {
  using F = Formula;
  // The union lands in the strict slot instead of the weak slot.
  return Schema(
      "II.f-corrupted", "dia[q]phi -> dia[q strict+weak]phi (unsound)", false, Schema::MatchFn{},
      [](const Vocabulary& vocab, const std::vector<F>& pool, const EnumOptions& options) {
        const int n = vocab.playerCount();
        Space space;
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(subsetCount(n));
        space.dim(static_cast<long long>(pool.size()));
        return sampleSpace(space, options, [&](const std::vector<long long>& a) -> std::optional<F> {
          const GroupQuery q = queryOf(a[0], a[1], a[2]);
          const F& phi = pool[static_cast<std::size_t>(a[3])];
          return F::implication(F::dual(q, phi),
                                F::dual(GroupQuery{q.eq, q.weak, q.strict | q.weak}, phi));
        });
      });
}

std::vector<Formula> formulaPool(const Vocabulary& vocab, int depth) {
  std::vector<Formula> pool;
  pool.push_back(Formula::falsum());
  pool.push_back(Formula::truth());

  // A few atoms per predicate over lexicographically first argument tuples.
  for (const auto& [name, arity] : vocab.predicates()) {
    long long tupleCount = 1;
    for (int i = 0; i < arity; ++i) tupleCount *= vocab.playerCount();
    const long long take = std::min<long long>(tupleCount, 3);
    for (long long t = 0; t < take; ++t) {
      std::vector<int> args(static_cast<std::size_t>(arity));
      long long rest = t;
      for (int i = arity - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(rest % vocab.playerCount());
        rest /= vocab.playerCount();
      }
      pool.push_back(Formula::atom(name, std::move(args)));
    }
    if (pool.size() >= 8) break;
  }

  std::vector<Formula> base = pool;
  for (int d = 0; d < depth; ++d) {
    std::vector<Formula> layer;
    const PlayerSet first = PlayerSet::single(0);
    for (const Formula& f : base) {
      layer.push_back(Formula::box(GroupQuery{first, {}, {}}, f));
      layer.push_back(Formula::box(GroupQuery{{}, first, {}}, f));
      layer.push_back(Formula::box(GroupQuery{{}, {}, first}, f));
      if (layer.size() >= 9) break;
    }
    pool.insert(pool.end(), layer.begin(), layer.end());
    base = std::move(layer);
  }
  if (pool.size() > 16) pool.resize(16);
  return pool;
}

namespace {

void checkInstances(const PDModel& model, Evaluator& ev, const Schema& schema,
                    const EnumResult& enumerated, int modelIndex, std::uint64_t modelSeed,
                    FuzzReport& report) {
  report.truncated = report.truncated || enumerated.truncated;
  for (const Formula& instance : enumerated.instances) {
    ++report.instancesChecked;
    if (ev.valid(instance)) continue;
    FuzzViolation violation;
    violation.modelIndex = modelIndex;
    violation.modelSeed = modelSeed;
    violation.schema = schema.name();
    violation.instance = print(instance, model.vocab());
    for (int s = 0; s < model.profileCount(); ++s) {
      if (!ev.truth(instance, s)) {
        violation.profileId = model.profileId(s);
        break;
      }
    }
    report.violations.push_back(std::move(violation));
  }
}

void fuzzOneModel(const FuzzConfig& cfg, int index, const Schema* only, FuzzReport& report) {
  const testgen::GenConfig gc = testgen::fuzzModelConfig(cfg.seed, index, cfg.maxPlayers, cfg.maxActions);
  const PDModel model = testgen::generate(gc);
  const std::vector<Formula> pool = formulaPool(model.vocab(), cfg.depth);
  Evaluator ev(model);

  auto runSchema = [&](const Schema& schema, std::uint64_t schemaIndex) {
    if (schema.isRule()) {
      // Necessitation: valid premises must stay valid under any box.
      const std::vector<GroupQuery> queries = {
          GroupQuery{{}, {}, {}},
          GroupQuery{model.vocab().allPlayers(), {}, {}},
          GroupQuery{PlayerSet::single(0), PlayerSet::single(0), {}},
      };
      for (const Formula& phi : pool) {
        if (!ev.valid(phi)) continue;
        for (const GroupQuery& q : queries) {
          const Formula instance = Formula::box(q, phi);
          ++report.instancesChecked;
          if (!ev.valid(instance)) {
            FuzzViolation violation;
            violation.modelIndex = index;
            violation.modelSeed = gc.seed;
            violation.schema = schema.name();
            violation.instance = print(instance, model.vocab());
            report.violations.push_back(std::move(violation));
          }
        }
      }
      return;
    }
    EnumOptions options;
    options.maxInstances = cfg.instancesPerSchema;
    options.sampleSeed = testgen::splitSeed(gc.seed, schemaIndex);
    checkInstances(model, ev, schema, schema.enumerate(model.vocab(), pool, options), index, gc.seed,
                   report);
  };

  if (only != nullptr) {
    runSchema(*only, 0);
  } else {
    std::uint64_t schemaIndex = 0;
    for (const Schema& schema : schemas()) runSchema(schema, ++schemaIndex);
  }
  ++report.modelsRun;
}

}  // namespace

FuzzReport soundnessFuzz(const FuzzConfig& config) {
  FuzzReport report;
  for (int i = 0; i < config.models; ++i) fuzzOneModel(config, i, nullptr, report);
  return report;
}

FuzzReport soundnessFuzzSchema(const FuzzConfig& config, const Schema& schema) {
  FuzzReport report;
  for (int i = 0; i < config.models; ++i) fuzzOneModel(config, i, &schema, report);
  return report;
}

}  // namespace lpfd::axioms
