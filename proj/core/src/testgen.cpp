#include "lpfd/testgen.hpp"

#include <functional>
#include <random>
#include <string>

namespace lpfd::testgen {

std::uint64_t splitSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

int uniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PDModel generateOnce(const GenConfig& cfg, std::mt19937_64& rng) {
  const int players = uniformInt(rng, cfg.minPlayers, cfg.maxPlayers);
  const int actions = uniformInt(rng, cfg.minActions, cfg.maxActions);

  std::vector<std::string> playerNames;
  for (int x = 0; x < players; ++x) playerNames.push_back(std::string(1, static_cast<char>('a' + x)));
  std::vector<std::string> actionNames;
  for (int a = 0; a < actions; ++a) actionNames.push_back(std::string(1, static_cast<char>('0' + a)));

  // Admissible profiles out of the full product.
  std::vector<Profile> profiles;
  std::vector<Profile> product;
  product.push_back(Profile{});
  for (int x = 0; x < players; ++x) {
    std::vector<Profile> next;
    for (const auto& partial : product) {
      for (int a = 0; a < actions; ++a) {
        Profile extended = partial;
        extended.actions.push_back(a);
        next.push_back(std::move(extended));
      }
    }
    product = std::move(next);
  }
  std::bernoulli_distribution keep(cfg.profileDensity);
  for (const auto& prof : product) {
    if (keep(rng)) profiles.push_back(prof);
  }
  if (profiles.empty()) {
    profiles.push_back(product[static_cast<std::size_t>(
        uniformInt(rng, 0, static_cast<int>(product.size()) - 1))]);
  }
  const int n = static_cast<int>(profiles.size());

  std::vector<Preorder> prefs;
  for (int x = 0; x < players; ++x) {
    Preorder pre(n);
    if (cfg.mode == PreferenceMode::Utility) {
      std::vector<int> util(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) util[static_cast<std::size_t>(s)] = uniformInt(rng, 0, 4);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (util[static_cast<std::size_t>(s)] <= util[static_cast<std::size_t>(t)]) pre.set(s, t);
        }
      }
    } else {
      const int pairCount = uniformInt(rng, 0, 2 * n);
      for (int i = 0; i < pairCount; ++i) {
        pre.set(uniformInt(rng, 0, n - 1), uniformInt(rng, 0, n - 1));
      }
      pre.closeTransitively();
    }
    prefs.push_back(std::move(pre));
  }

  std::map<std::string, int> predicates;
  std::map<std::string, PredicateInterp> interp;
  const int predCount = uniformInt(rng, 0, cfg.maxPredicates);
  std::bernoulli_distribution includeTuple(0.4);
  for (int p = 0; p < predCount; ++p) {
    const std::string name = "Q" + std::to_string(p);
    const int arity = uniformInt(rng, 0, cfg.maxArity);
    predicates.emplace(name, arity);
    PredicateInterp pi;
    pi.arity = arity;
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    std::function<void(int)> fill = [&](int pos) {
      if (pos == arity) {
        if (includeTuple(rng)) pi.tuples.insert(tuple);
        return;
      }
      for (int a = 0; a < actions; ++a) {
        tuple[static_cast<std::size_t>(pos)] = a;
        fill(pos + 1);
      }
    };
    fill(0);
    interp.emplace(name, std::move(pi));
  }

  std::vector<std::vector<int>> perPlayer;
  std::vector<int> all;
  for (int a = 0; a < actions; ++a) all.push_back(a);
  for (int x = 0; x < players; ++x) perPlayer.push_back(all);

  return PDModel(Vocabulary(playerNames, predicates), actionNames, std::move(perPlayer),
                 std::move(profiles), std::move(prefs), std::move(interp));
}

}  // namespace

PDModel generate(const GenConfig& cfg) {
  if (cfg.minPlayers < 1 || cfg.minPlayers > cfg.maxPlayers || cfg.maxPlayers > 26 ||
      cfg.minActions < 1 || cfg.minActions > cfg.maxActions || cfg.maxActions > 10 ||
      cfg.profileDensity < 0.0 || cfg.profileDensity > 1.0 || cfg.maxArity < 0 ||
      cfg.maxPredicates < 0) {
    throw FormatError("infeasible generator configuration");
  }
  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PDModel model = generateOnce(cfg, rng);
    if (!cfg.requireTotal || model.isTotal()) return model;
  }
  throw FormatError("could not generate a total model under this configuration");
}

GenConfig fuzzModelConfig(std::uint64_t baseSeed, int index, int maxPlayers, int maxActions) {
  GenConfig cfg;
  cfg.minPlayers = 2;
  cfg.maxPlayers = maxPlayers;
  cfg.minActions = 2;
  cfg.maxActions = maxActions;
  cfg.profileDensity = 0.75;
  cfg.mode = index % 2 == 0 ? PreferenceMode::Utility : PreferenceMode::RandomPreorder;
  cfg.seed = splitSeed(baseSeed, static_cast<std::uint64_t>(index));
  return cfg;
}

// ---------------------------------------------------------------------------
// Oracles. Only raw data access below: profile action vectors and the
// stored weak-preference matrices. Strictness is spelled out inline as
// (s <= t and not t <= s) everywhere.

namespace {

void checkOracleGroup(const PDModel& m, PlayerSet group) {
  if (!group.subsetOf(m.vocab().allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
}

bool sameOutside(const PDModel& m, int s, int t, PlayerSet group) {
  const auto& sa = m.profile(s).actions;
  const auto& ta = m.profile(t).actions;
  for (int y = 0; y < m.playerCount(); ++y) {
    if (!group.contains(y) && sa[static_cast<std::size_t>(y)] != ta[static_cast<std::size_t>(y)]) {
      return false;
    }
  }
  return true;
}

bool sameOn(const PDModel& m, int s, int t, PlayerSet group) {
  const auto& sa = m.profile(s).actions;
  const auto& ta = m.profile(t).actions;
  for (int y : group) {
    if (sa[static_cast<std::size_t>(y)] != ta[static_cast<std::size_t>(y)]) return false;
  }
  return true;
}

// Pa_Y X at s: no t fixing Y that every member of X finds at least as good
// and some member finds strictly better.
bool paHoldsAt(const PDModel& m, int s, PlayerSet fixed, PlayerSet group) {
  for (int t = 0; t < m.profileCount(); ++t) {
    if (!sameOn(m, s, t, fixed)) continue;
    bool allWeak = true;
    for (int x : group) {
      if (!m.weakPref(x, s, t)) {
        allWeak = false;
        break;
      }
    }
    if (!allWeak) continue;
    for (int x : group) {
      if (m.weakPref(x, s, t) && !m.weakPref(x, t, s)) return false;
    }
  }
  return true;
}

bool nashHoldsAt(const PDModel& m, int s, PlayerSet group) {
  for (int x : group) {
    for (int t = 0; t < m.profileCount(); ++t) {
      if (!sameOutside(m, s, t, PlayerSet::single(x))) continue;
      if (m.weakPref(x, s, t) && !m.weakPref(x, t, s)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> oracleNash(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  std::vector<int> out;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (nashHoldsAt(m, s, group)) out.push_back(s);
  }
  return out;
}

std::vector<int> oracleWeakPareto(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  std::vector<int> out;
  for (int s = 0; s < m.profileCount(); ++s) {
    bool optimal = true;
    for (int t = 0; t < m.profileCount() && optimal; ++t) {
      if (!sameOutside(m, s, t, group)) continue;
      bool allStrict = true;
      for (int x : group) {
        if (!(m.weakPref(x, s, t) && !m.weakPref(x, t, s))) {
          allStrict = false;
          break;
        }
      }
      // For the empty group the inner condition is vacuous, so t = s
      // already witnesses an "improvement": nothing is optimal then.
      if (allStrict) optimal = false;
    }
    if (optimal) out.push_back(s);
  }
  return out;
}

std::vector<int> oracleStrongPareto(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  std::vector<int> out;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (paHoldsAt(m, s, m.vocab().allPlayers() - group, group)) out.push_back(s);
  }
  return out;
}

OracleCaResult oracleCa(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  if (group.size() > 5) {
    throw ResourceError("oracleCa enumerates covers explicitly; groups over 5 players rejected");
  }
  const PlayerSet fixed = m.vocab().allPlayers() - group;

  std::vector<PlayerSet> properSubsets;
  for (PlayerSet sub : group.subsets()) {
    if (sub != group) properSubsets.push_back(sub);
  }

  OracleCaResult result;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (!nashHoldsAt(m, s, group)) continue;

    std::vector<PlayerSet> candidates;
    for (PlayerSet sub : properSubsets) {
      if (paHoldsAt(m, s, fixed, sub)) candidates.push_back(sub);
    }

    // Depth-first over families of candidates, include-first, pruned when
    // the remaining candidates cannot complete the union.
    std::vector<PlayerSet> remainingUnion(candidates.size() + 1);
    for (std::size_t i = candidates.size(); i-- > 0;) {
      remainingUnion[i] = remainingUnion[i + 1] | candidates[i];
    }
    std::vector<PlayerSet> chosen;
    std::function<bool(std::size_t, PlayerSet)> search = [&](std::size_t index,
                                                             PlayerSet covered) -> bool {
      if (covered == group) return true;
      if (index == candidates.size()) return false;
      if ((covered | remainingUnion[index]) != group) return false;
      chosen.push_back(candidates[index]);
      if (search(index + 1, covered | candidates[index])) return true;
      chosen.pop_back();
      return search(index + 1, covered);
    };
    if (search(0, PlayerSet{})) {
      result.solutions.push_back(s);
      result.covers.emplace(s, chosen);
    }
  }
  return result;
}

std::vector<int> oracleCa1(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  std::vector<int> out;
  const PlayerSet fixed = m.vocab().allPlayers() - group;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (paHoldsAt(m, s, fixed, group) && nashHoldsAt(m, s, group)) out.push_back(s);
  }
  return out;
}

std::vector<int> oracleCa2(const PDModel& m, PlayerSet group) {
  checkOracleGroup(m, group);
  std::vector<int> out;
  for (int s = 0; s < m.profileCount(); ++s) {
    bool holds = true;
    for (PlayerSet sub : group.subsets()) {
      if (!paHoldsAt(m, s, m.vocab().allPlayers() - sub, sub)) {
        holds = false;
        break;
      }
    }
    if (holds) out.push_back(s);
  }
  return out;
}

}  // namespace lpfd::testgen
