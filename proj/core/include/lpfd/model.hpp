#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpfd/errors.hpp"
#include "lpfd/player_set.hpp"

namespace lpfd {

// Exact rational number used for utilities. Comparing exact values keeps
// induced preference orders free of floating-point strictness artifacts.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long numerator) : num_(numerator), den_(1) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  // Exact conversion; every finite double is a dyadic rational.
  static Rational fromDouble(double value);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

  std::string toString() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Players plus a relational signature (predicate name -> arity).
class Vocabulary {
 public:
  Vocabulary(std::vector<std::string> players, std::map<std::string, int> predicates = {});

  int playerCount() const { return static_cast<int>(players_.size()); }
  const std::vector<std::string>& players() const { return players_; }
  const std::string& playerName(int index) const;
  std::optional<int> findPlayer(const std::string& name) const;
  int playerIndexOf(const std::string& name) const;  // throws VocabularyError

  const std::map<std::string, int>& predicates() const { return predicates_; }
  bool hasPredicate(const std::string& name) const { return predicates_.count(name) > 0; }
  int arity(const std::string& name) const;  // throws VocabularyError

  PlayerSet allPlayers() const { return PlayerSet::firstN(playerCount()); }

  // Resolves player names to a set; complement=true yields V minus the names.
  PlayerSet resolve(const std::vector<std::string>& names, bool complement = false) const;

  std::string describeSet(PlayerSet set) const;  // "{E,A}" in player order

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.players_ == b.players_ && a.predicates_ == b.predicates_;
  }

 private:
  std::vector<std::string> players_;
  std::map<std::string, int> playerIndex_;
  std::map<std::string, int> predicates_;
};

// One admissible joint assignment: action index per player, player order.
struct Profile {
  std::vector<int> actions;

  friend bool operator==(const Profile& a, const Profile& b) = default;
};

// The three subscript groups of a modality or dependence atom:
// agreement (=), weak preference (<=) and strict preference (<).
struct GroupQuery {
  PlayerSet eq;
  PlayerSet weak;
  PlayerSet strict;

  friend bool operator==(const GroupQuery& a, const GroupQuery& b) = default;
  friend bool operator<(const GroupQuery& a, const GroupQuery& b) {
    if (a.eq != b.eq) return a.eq < b.eq;
    if (a.weak != b.weak) return a.weak < b.weak;
    return a.strict < b.strict;
  }
};

// A reflexive-transitive relation over profile indices 0..n-1.
class Preorder {
 public:
  Preorder() = default;
  explicit Preorder(int n) : n_(n), leq_(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i) set(i, i);
  }

  int size() const { return n_; }
  bool holds(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  void set(int a, int b) { leq_[static_cast<std::size_t>(a) * n_ + b] = 1; }

  void closeTransitively();
  bool isReflexive() const;
  bool isTransitive() const;
  bool isTotal() const;

  friend bool operator==(const Preorder& a, const Preorder& b) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
};

struct PredicateInterp {
  int arity = 0;
  std::set<std::vector<int>> tuples;  // tuples of action indices

  friend bool operator==(const PredicateInterp& a, const PredicateInterp& b) = default;
};

// Input for PDModel::fromPayoffTable. Profiles default to the full product
// of the per-player action lists; utilities are keyed by action-name tuple.
struct PayoffTableSpec {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actionsPerPlayer;
  std::optional<std::vector<std::vector<std::string>>> profiles;
  std::map<std::vector<std::string>, std::vector<Rational>> utilities;
  std::map<std::string, int> predicates;
  std::map<std::string, std::set<std::vector<std::string>>> interpretation;
};

// Input for PDModel::fromExplicitPreorder. Pairs are (lower, higher)
// profile tuples per player; the builder takes the reflexive-transitive
// closure, so any pair list yields a preorder.
struct ExplicitPreorderSpec {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actionsPerPlayer;
  std::optional<std::vector<std::vector<std::string>>> profiles;
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>>
      pairsPerPlayer;
  std::map<std::string, int> predicates;
  std::map<std::string, std::set<std::vector<std::string>>> interpretation;
};

// A preference-dependence model: admissible strategy profiles over a finite
// action domain, one preference preorder per player, and a predicate
// interpretation. Immutable after construction; all invariants are checked
// by the constructor.
class PDModel {
 public:
  PDModel(Vocabulary vocab, std::vector<std::string> actions,
          std::vector<std::vector<int>> actionsPerPlayer, std::vector<Profile> profiles,
          std::vector<Preorder> preferences, std::map<std::string, PredicateInterp> interp);

  static PDModel fromPayoffTable(const PayoffTableSpec& spec);
  static PDModel fromExplicitPreorder(const ExplicitPreorderSpec& spec);

  const Vocabulary& vocab() const { return vocab_; }
  int playerCount() const { return vocab_.playerCount(); }

  const std::vector<std::string>& actions() const { return actions_; }
  const std::string& actionName(int index) const { return actions_[static_cast<std::size_t>(index)]; }
  std::optional<int> findAction(const std::string& name) const;
  const std::vector<std::vector<int>>& actionsPerPlayer() const { return actionsPerPlayer_; }

  int profileCount() const { return static_cast<int>(profiles_.size()); }
  const std::vector<Profile>& profiles() const { return profiles_; }
  const Profile& profile(int index) const;
  const std::string& profileId(int index) const;
  // Accepts the canonical id; also the comma-joined and compact spellings.
  std::optional<int> findProfile(const std::string& id) const;

  const Preorder& preference(int player) const;
  const std::map<std::string, PredicateInterp>& interpretation() const { return interp_; }
  const PredicateInterp* findInterp(const std::string& predicate) const;

  // True when every player's preorder is total.
  bool isTotal() const { return total_; }

  // s and t assign the same action to every member of X. Always true for
  // the empty group.
  bool agree(int s, int t, PlayerSet group) const;

  // s is weakly preferred-or-equal to t by every member of X (vacuously
  // true for the empty group).
  bool weakPrefAll(int s, int t, PlayerSet group) const;

  // Strictly preferred by every member of X; strict preference is derived
  // from the stored preorder as (s <= t and not t <= s).
  bool strictPrefAll(int s, int t, PlayerSet group) const;

  bool weakPref(int player, int s, int t) const;
  bool strictPref(int player, int s, int t) const;

  // Profiles t with s =_X t, s <=_X' t and s <_X'' t, ascending index order.
  std::vector<int> reachSet(int s, const GroupQuery& query) const;

  // Semantic equality: same vocabulary, actions, profiles, preferences and
  // interpretation. Per-player action lists are builder metadata and are
  // included as well.
  friend bool operator==(const PDModel& a, const PDModel& b);

 private:
  void checkProfileIndex(int index) const;
  void checkGroup(PlayerSet group) const;

  Vocabulary vocab_;
  std::vector<std::string> actions_;
  std::vector<std::vector<int>> actionsPerPlayer_;
  std::vector<Profile> profiles_;
  std::vector<std::string> profileIds_;
  std::map<std::string, int> profileIndex_;
  std::vector<Preorder> prefs_;
  std::map<std::string, PredicateInterp> interp_;
  bool total_ = false;
};

}  // namespace lpfd
