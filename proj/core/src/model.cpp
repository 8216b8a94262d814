#include "lpfd/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lpfd {

namespace {

bool isIdentifier(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void requireIdentifier(const std::string& name, const char* what) {
  if (!isIdentifier(name)) {
    throw FormatError(std::string(what) + " name '" + name + "' is not a plain identifier");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw FormatError("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::fromDouble(double value) {
  if (!std::isfinite(value)) throw FormatError("utility value is not finite");
  if (value == std::floor(value) && std::abs(value) < 9.0e18) {
    return Rational(static_cast<long long>(value));
  }
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5,1)
  // 53 mantissa bits make mant*2^53 integral.
  long long num = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  while (exp > 0) {
    if (num > (1LL << 61)) throw FormatError("utility value out of exact range");
    num <<= 1;
    --exp;
  }
  long long den = 1;
  while (exp < 0) {
    if (num % 2 == 0) {
      num /= 2;
    } else {
      if (den > (1LL << 61)) throw FormatError("utility value out of exact range");
      den <<= 1;
    }
    ++exp;
  }
  return Rational(num, den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::toString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Vocabulary

Vocabulary::Vocabulary(std::vector<std::string> players, std::map<std::string, int> predicates)
    : players_(std::move(players)), predicates_(std::move(predicates)) {
  if (players_.empty()) throw FormatError("vocabulary needs at least one player");
  if (players_.size() > PlayerSet::kMaxPlayers) {
    throw FormatError("vocabulary supports at most 64 players");
  }
  for (int i = 0; i < static_cast<int>(players_.size()); ++i) {
    requireIdentifier(players_[i], "player");
    if (!playerIndex_.emplace(players_[i], i).second) {
      throw FormatError("duplicate player '" + players_[i] + "'");
    }
  }
  for (const auto& [name, arity] : predicates_) {
    requireIdentifier(name, "predicate");
    if (arity < 0) throw FormatError("negative arity for predicate '" + name + "'");
  }
}

const std::string& Vocabulary::playerName(int index) const {
  if (index < 0 || index >= playerCount()) throw VocabularyError("player index out of range");
  return players_[static_cast<std::size_t>(index)];
}

std::optional<int> Vocabulary::findPlayer(const std::string& name) const {
  auto it = playerIndex_.find(name);
  if (it == playerIndex_.end()) return std::nullopt;
  return it->second;
}

int Vocabulary::playerIndexOf(const std::string& name) const {
  auto idx = findPlayer(name);
  if (!idx) throw VocabularyError("unknown player '" + name + "'");
  return *idx;
}

int Vocabulary::arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw VocabularyError("unknown predicate '" + name + "'");
  return it->second;
}

PlayerSet Vocabulary::resolve(const std::vector<std::string>& names, bool complement) const {
  PlayerSet set;
  for (const auto& name : names) set = set.with(playerIndexOf(name));
  return complement ? allPlayers() - set : set;
}

std::string Vocabulary::describeSet(PlayerSet set) const {
  std::string out = "{";
  bool first = true;
  for (int i : set) {
    if (!first) out += ",";
    out += playerName(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Preorder

void Preorder::closeTransitively() {
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < n_; ++i) {
      if (!holds(i, k)) continue;
      for (int j = 0; j < n_; ++j) {
        if (holds(k, j)) set(i, j);
      }
    }
  }
}

bool Preorder::isReflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!holds(i, i)) return false;
  }
  return true;
}

bool Preorder::isTransitive() const {
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      if (!holds(i, k)) continue;
      for (int j = 0; j < n_; ++j) {
        if (holds(k, j) && !holds(i, j)) return false;
      }
    }
  }
  return true;
}

bool Preorder::isTotal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!holds(i, j) && !holds(j, i)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// PDModel

PDModel::PDModel(Vocabulary vocab, std::vector<std::string> actions,
                 std::vector<std::vector<int>> actionsPerPlayer, std::vector<Profile> profiles,
                 std::vector<Preorder> preferences, std::map<std::string, PredicateInterp> interp)
    : vocab_(std::move(vocab)),
      actions_(std::move(actions)),
      actionsPerPlayer_(std::move(actionsPerPlayer)),
      profiles_(std::move(profiles)),
      prefs_(std::move(preferences)),
      interp_(std::move(interp)) {
  const int players = vocab_.playerCount();
  const int actionCount = static_cast<int>(actions_.size());

  if (actions_.empty()) throw FormatError("model needs at least one action");
  for (const auto& a : actions_) requireIdentifier(a, "action");
  {
    std::set<std::string> seen(actions_.begin(), actions_.end());
    if (static_cast<int>(seen.size()) != actionCount) throw FormatError("duplicate action name");
  }

  if (static_cast<int>(actionsPerPlayer_.size()) != players) {
    throw FormatError("per-player action lists do not match the player count");
  }
  std::vector<bool> mentioned(static_cast<std::size_t>(actionCount), false);
  for (const auto& list : actionsPerPlayer_) {
    if (list.empty()) throw FormatError("a player has an empty action list");
    for (int a : list) {
      if (a < 0 || a >= actionCount) throw FormatError("per-player action index out of range");
      mentioned[static_cast<std::size_t>(a)] = true;
    }
  }
  for (int a = 0; a < actionCount; ++a) {
    if (!mentioned[static_cast<std::size_t>(a)]) {
      throw FormatError("action '" + actions_[static_cast<std::size_t>(a)] +
                        "' is not available to any player");
    }
  }

  if (profiles_.empty()) throw FormatError("model needs at least one admissible profile");
  bool compactIds = true;
  for (const auto& name : actions_) {
    if (name.size() != 1) compactIds = false;
  }
  profileIds_.reserve(profiles_.size());
  for (int p = 0; p < static_cast<int>(profiles_.size()); ++p) {
    const Profile& prof = profiles_[static_cast<std::size_t>(p)];
    if (static_cast<int>(prof.actions.size()) != players) {
      throw FormatError("profile does not assign an action to every player");
    }
    std::string id;
    for (int x = 0; x < players; ++x) {
      int a = prof.actions[static_cast<std::size_t>(x)];
      if (a < 0 || a >= actionCount) throw FormatError("profile uses an unknown action");
      const auto& allowed = actionsPerPlayer_[static_cast<std::size_t>(x)];
      if (std::find(allowed.begin(), allowed.end(), a) == allowed.end()) {
        throw FormatError("profile assigns an action not available to player '" +
                          vocab_.playerName(x) + "'");
      }
      if (!compactIds && x > 0) id += ",";
      id += actions_[static_cast<std::size_t>(a)];
    }
    if (!profileIndex_.emplace(id, p).second) throw FormatError("duplicate profile '" + id + "'");
    profileIds_.push_back(std::move(id));
  }

  if (static_cast<int>(prefs_.size()) != players) {
    throw FormatError("model needs one preference order per player");
  }
  total_ = true;
  for (int x = 0; x < players; ++x) {
    const Preorder& pre = prefs_[static_cast<std::size_t>(x)];
    if (pre.size() != profileCount()) {
      throw FormatError("preference order size does not match the profile count");
    }
    if (!pre.isReflexive() || !pre.isTransitive()) {
      throw FormatError("preference order for player '" + vocab_.playerName(x) +
                        "' is not a preorder");
    }
    if (!pre.isTotal()) total_ = false;
  }

  for (const auto& [name, pi] : interp_) {
    if (!vocab_.hasPredicate(name)) {
      throw VocabularyError("interpretation for unknown predicate '" + name + "'");
    }
    if (pi.arity != vocab_.arity(name)) {
      throw FormatError("interpretation arity mismatch for predicate '" + name + "'");
    }
    for (const auto& tuple : pi.tuples) {
      if (static_cast<int>(tuple.size()) != pi.arity) {
        throw FormatError("interpretation tuple of wrong length for '" + name + "'");
      }
      for (int a : tuple) {
        if (a < 0 || a >= actionCount) {
          throw FormatError("interpretation tuple uses an unknown action");
        }
      }
    }
  }
  // Unmentioned predicates default to the empty interpretation.
  for (const auto& [name, arity] : vocab_.predicates()) {
    if (interp_.find(name) == interp_.end()) interp_.emplace(name, PredicateInterp{arity, {}});
  }
}

namespace {

struct ResolvedBase {
  Vocabulary vocab;
  std::vector<std::string> actions;
  std::vector<std::vector<int>> actionsPerPlayer;
  std::vector<Profile> profiles;
  std::map<std::string, PredicateInterp> interp;
};

// Shared front half of the two builders: resolve names, generate or resolve
// the profile list, resolve the predicate interpretation.
ResolvedBase resolveBase(const std::vector<std::string>& players,
                         const std::vector<std::vector<std::string>>& actionsPerPlayer,
                         const std::optional<std::vector<std::vector<std::string>>>& profiles,
                         const std::map<std::string, int>& predicates,
                         const std::map<std::string, std::set<std::vector<std::string>>>& interp) {
  if (actionsPerPlayer.size() != players.size()) {
    throw FormatError("need one action list per player");
  }
  Vocabulary vocab(players, predicates);

  std::vector<std::string> actions;
  std::map<std::string, int> actionIndex;
  auto internAction = [&](const std::string& name) {
    auto it = actionIndex.find(name);
    if (it != actionIndex.end()) return it->second;
    int idx = static_cast<int>(actions.size());
    actions.push_back(name);
    actionIndex.emplace(name, idx);
    return idx;
  };

  std::vector<std::vector<int>> perPlayer;
  perPlayer.reserve(players.size());
  for (const auto& list : actionsPerPlayer) {
    std::vector<int> resolved;
    resolved.reserve(list.size());
    for (const auto& name : list) resolved.push_back(internAction(name));
    perPlayer.push_back(std::move(resolved));
  }

  std::vector<Profile> resolvedProfiles;
  if (profiles) {
    for (const auto& tuple : *profiles) {
      if (tuple.size() != players.size()) {
        throw FormatError("profile tuple does not match the player count");
      }
      Profile prof;
      for (const auto& name : tuple) {
        auto it = actionIndex.find(name);
        if (it == actionIndex.end()) throw FormatError("profile uses unknown action '" + name + "'");
        prof.actions.push_back(it->second);
      }
      resolvedProfiles.push_back(std::move(prof));
    }
  } else {
    // Full product in player-major order.
    resolvedProfiles.push_back(Profile{});
    for (std::size_t x = 0; x < perPlayer.size(); ++x) {
      std::vector<Profile> next;
      next.reserve(resolvedProfiles.size() * perPlayer[x].size());
      for (const auto& partial : resolvedProfiles) {
        for (int a : perPlayer[x]) {
          Profile extended = partial;
          extended.actions.push_back(a);
          next.push_back(std::move(extended));
        }
      }
      resolvedProfiles = std::move(next);
    }
  }

  std::map<std::string, PredicateInterp> resolvedInterp;
  for (const auto& [name, tuples] : interp) {
    auto arityIt = predicates.find(name);
    if (arityIt == predicates.end()) {
      throw VocabularyError("interpretation for unknown predicate '" + name + "'");
    }
    PredicateInterp pi;
    pi.arity = arityIt->second;
    for (const auto& tuple : tuples) {
      std::vector<int> resolved;
      for (const auto& actionName : tuple) {
        auto it = actionIndex.find(actionName);
        if (it == actionIndex.end()) {
          throw FormatError("interpretation uses unknown action '" + actionName + "'");
        }
        resolved.push_back(it->second);
      }
      pi.tuples.insert(std::move(resolved));
    }
    resolvedInterp.emplace(name, std::move(pi));
  }

  return ResolvedBase{std::move(vocab), std::move(actions), std::move(perPlayer),
                      std::move(resolvedProfiles), std::move(resolvedInterp)};
}

}  // namespace

PDModel PDModel::fromPayoffTable(const PayoffTableSpec& spec) {
  ResolvedBase base = resolveBase(spec.players, spec.actionsPerPlayer, spec.profiles,
                                  spec.predicates, spec.interpretation);
  const int players = base.vocab.playerCount();
  const int n = static_cast<int>(base.profiles.size());

  // Look the utility row up by action-name tuple.
  std::vector<std::vector<Rational>> utility(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    std::vector<std::string> key;
    key.reserve(static_cast<std::size_t>(players));
    for (int a : base.profiles[static_cast<std::size_t>(p)].actions) {
      key.push_back(base.actions[static_cast<std::size_t>(a)]);
    }
    auto it = spec.utilities.find(key);
    if (it == spec.utilities.end()) {
      std::string id;
      for (std::size_t i = 0; i < key.size(); ++i) id += (i ? "," : "") + key[i];
      throw FormatError("missing utility entry for profile '" + id + "'");
    }
    if (static_cast<int>(it->second.size()) != players) {
      throw FormatError("utility row does not cover every player");
    }
    utility[static_cast<std::size_t>(p)] = it->second;
  }

  std::vector<Preorder> prefs;
  prefs.reserve(static_cast<std::size_t>(players));
  for (int x = 0; x < players; ++x) {
    Preorder pre(n);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (utility[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] <=
            utility[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)]) {
          pre.set(s, t);
        }
      }
    }
    prefs.push_back(std::move(pre));
  }

  return PDModel(std::move(base.vocab), std::move(base.actions), std::move(base.actionsPerPlayer),
                 std::move(base.profiles), std::move(prefs), std::move(base.interp));
}

PDModel PDModel::fromExplicitPreorder(const ExplicitPreorderSpec& spec) {
  ResolvedBase base = resolveBase(spec.players, spec.actionsPerPlayer, spec.profiles,
                                  spec.predicates, spec.interpretation);
  const int players = base.vocab.playerCount();
  const int n = static_cast<int>(base.profiles.size());

  std::map<std::vector<int>, int> profileLookup;
  for (int p = 0; p < n; ++p) profileLookup.emplace(base.profiles[static_cast<std::size_t>(p)].actions, p);

  auto resolveProfile = [&](const std::vector<std::string>& tuple) {
    std::vector<int> resolved;
    for (const auto& name : tuple) {
      for (int a = 0; a < static_cast<int>(base.actions.size()); ++a) {
        if (base.actions[static_cast<std::size_t>(a)] == name) {
          resolved.push_back(a);
          break;
        }
      }
    }
    if (resolved.size() != tuple.size()) throw FormatError("preference pair uses an unknown action");
    auto it = profileLookup.find(resolved);
    if (it == profileLookup.end()) {
      throw FormatError("preference pair references a profile outside the admissible set");
    }
    return it->second;
  };

  std::vector<Preorder> prefs;
  prefs.reserve(static_cast<std::size_t>(players));
  for (int x = 0; x < players; ++x) {
    Preorder pre(n);
    auto it = spec.pairsPerPlayer.find(spec.players[static_cast<std::size_t>(x)]);
    if (it != spec.pairsPerPlayer.end()) {
      for (const auto& [lo, hi] : it->second) pre.set(resolveProfile(lo), resolveProfile(hi));
    }
    pre.closeTransitively();
    prefs.push_back(std::move(pre));
  }

  return PDModel(std::move(base.vocab), std::move(base.actions), std::move(base.actionsPerPlayer),
                 std::move(base.profiles), std::move(prefs), std::move(base.interp));
}

std::optional<int> PDModel::findAction(const std::string& name) const {
  for (int a = 0; a < static_cast<int>(actions_.size()); ++a) {
    if (actions_[static_cast<std::size_t>(a)] == name) return a;
  }
  return std::nullopt;
}

const Profile& PDModel::profile(int index) const {
  checkProfileIndex(index);
  return profiles_[static_cast<std::size_t>(index)];
}

const std::string& PDModel::profileId(int index) const {
  checkProfileIndex(index);
  return profileIds_[static_cast<std::size_t>(index)];
}

std::optional<int> PDModel::findProfile(const std::string& id) const {
  auto it = profileIndex_.find(id);
  if (it != profileIndex_.end()) return it->second;
  // Tolerate the comma-joined spelling for compact-id models and, when
  // unambiguous, the compact spelling for comma-id models.
  std::string normalized;
  if (id.find(',') != std::string::npos) {
    for (char c : id) {
      if (c != ',') normalized += c;
    }
  } else {
    for (char c : id) {
      if (!normalized.empty()) normalized += ',';
      normalized += c;
    }
  }
  it = profileIndex_.find(normalized);
  if (it != profileIndex_.end()) return it->second;
  return std::nullopt;
}

const Preorder& PDModel::preference(int player) const {
  if (player < 0 || player >= playerCount()) throw VocabularyError("player index out of range");
  return prefs_[static_cast<std::size_t>(player)];
}

const PredicateInterp* PDModel::findInterp(const std::string& predicate) const {
  auto it = interp_.find(predicate);
  return it == interp_.end() ? nullptr : &it->second;
}

void PDModel::checkProfileIndex(int index) const {
  if (index < 0 || index >= profileCount()) {
    throw DomainError("profile index " + std::to_string(index) + " is not in this model");
  }
}

void PDModel::checkGroup(PlayerSet group) const {
  if (!group.subsetOf(vocab_.allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
}

bool PDModel::agree(int s, int t, PlayerSet group) const {
  checkProfileIndex(s);
  checkProfileIndex(t);
  checkGroup(group);
  const Profile& ps = profiles_[static_cast<std::size_t>(s)];
  const Profile& pt = profiles_[static_cast<std::size_t>(t)];
  for (int x : group) {
    if (ps.actions[static_cast<std::size_t>(x)] != pt.actions[static_cast<std::size_t>(x)]) {
      return false;
    }
  }
  return true;
}

bool PDModel::weakPrefAll(int s, int t, PlayerSet group) const {
  checkProfileIndex(s);
  checkProfileIndex(t);
  checkGroup(group);
  for (int x : group) {
    if (!prefs_[static_cast<std::size_t>(x)].holds(s, t)) return false;
  }
  return true;
}

bool PDModel::strictPrefAll(int s, int t, PlayerSet group) const {
  checkProfileIndex(s);
  checkProfileIndex(t);
  checkGroup(group);
  for (int x : group) {
    const Preorder& pre = prefs_[static_cast<std::size_t>(x)];
    if (!pre.holds(s, t) || pre.holds(t, s)) return false;
  }
  return true;
}

bool PDModel::weakPref(int player, int s, int t) const { return preference(player).holds(s, t); }

bool PDModel::strictPref(int player, int s, int t) const {
  const Preorder& pre = preference(player);
  return pre.holds(s, t) && !pre.holds(t, s);
}

std::vector<int> PDModel::reachSet(int s, const GroupQuery& query) const {
  checkProfileIndex(s);
  checkGroup(query.eq);
  checkGroup(query.weak);
  checkGroup(query.strict);
  std::vector<int> out;
  for (int t = 0; t < profileCount(); ++t) {
    if (agree(s, t, query.eq) && weakPrefAll(s, t, query.weak) && strictPrefAll(s, t, query.strict)) {
      out.push_back(t);
    }
  }
  return out;
}

bool operator==(const PDModel& a, const PDModel& b) {
  return a.vocab_ == b.vocab_ && a.actions_ == b.actions_ &&
         a.actionsPerPlayer_ == b.actionsPerPlayer_ && a.profiles_ == b.profiles_ &&
         a.prefs_ == b.prefs_ && a.interp_ == b.interp_;
}

}  // namespace lpfd
