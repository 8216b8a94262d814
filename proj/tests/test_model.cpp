#include <doctest.h>

#include <algorithm>
#include <random>

#include <lpfd/model.hpp>
#include <lpfd/testgen.hpp>

#include "fixtures.hpp"

using namespace lpfd;

namespace {

int pid(const PDModel& m, const std::string& id) {
  auto idx = m.findProfile(id);
  REQUIRE(idx.has_value());
  return *idx;
}

PlayerSet group(const PDModel& m, std::initializer_list<const char*> names) {
  PlayerSet set;
  for (const char* name : names) set = set.with(m.vocab().playerIndexOf(name));
  return set;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("rational comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational::fromDouble(0.25) == Rational(1, 4));
  CHECK(Rational::fromDouble(3.0) == Rational(3));
  CHECK_FALSE(Rational(1, 3) < Rational(1, 3));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), FormatError);
}

TEST_CASE("vocabulary rejects duplicates and resolves complements") {
  CHECK_THROWS_AS(Vocabulary({"a", "a"}), FormatError);
  CHECK_THROWS_AS(Vocabulary({}), FormatError);
  Vocabulary vocab({"a", "b", "c"});
  CHECK(vocab.playerIndexOf("b") == 1);
  CHECK_THROWS_AS(vocab.playerIndexOf("z"), VocabularyError);
  CHECK(vocab.resolve({"a"}, true) == PlayerSet::of({1, 2}));
  CHECK(vocab.resolve({}, true) == vocab.allPlayers());
}

TEST_CASE("rock-jazz agreement facts") {
  PDModel m = fixtures::rockJazz();
  const int rr = pid(m, "RR"), rj = pid(m, "RJ"), jr = pid(m, "JR"), jj = pid(m, "JJ");

  CHECK(m.agree(rr, rj, group(m, {"E"})));
  CHECK(m.agree(rr, jj, PlayerSet{}));  // the empty group relates everything
  CHECK_FALSE(m.agree(rr, jr, group(m, {"E"})));
  CHECK(m.agree(jj, jj, m.vocab().allPlayers()));
  CHECK_THROWS_AS(m.agree(rr, rj, PlayerSet::of({7})), VocabularyError);
}

TEST_CASE("rock-jazz preference chain: RJ ~ JR < RR < JJ for both players") {
  PDModel m = fixtures::rockJazz();
  const int rr = pid(m, "RR"), rj = pid(m, "RJ"), jr = pid(m, "JR"), jj = pid(m, "JJ");
  const PlayerSet both = m.vocab().allPlayers();

  CHECK(m.weakPrefAll(rr, jj, both));
  CHECK_FALSE(m.weakPrefAll(jj, rr, group(m, {"E"})));
  CHECK(m.weakPrefAll(rj, jr, both));  // equivalent profiles
  CHECK(m.weakPrefAll(jr, rj, both));

  CHECK(m.strictPrefAll(rr, jj, both));
  CHECK(m.strictPrefAll(rj, rr, both));
  CHECK_FALSE(m.strictPrefAll(rj, jr, group(m, {"E"})));  // tie is not strict
  for (int s = 0; s < m.profileCount(); ++s) {
    CHECK(m.weakPrefAll(s, s, both));             // reflexive
    CHECK_FALSE(m.strictPrefAll(s, s, both));     // irreflexive strict part
    CHECK(m.strictPrefAll(s, s, PlayerSet{}));    // vacuous on the empty group
  }
}

TEST_CASE("rock-jazz reach sets") {
  PDModel m = fixtures::rockJazz();
  const int rr = pid(m, "RR"), jj = pid(m, "JJ");
  const int e = m.vocab().playerIndexOf("E");
  const int a = m.vocab().playerIndexOf("A");

  // Fixing E at the rock club, nothing is strictly better for A.
  CHECK(m.reachSet(rr, {PlayerSet::single(e), {}, PlayerSet::single(a)}).empty());
  // No constraints: every profile.
  CHECK(m.reachSet(rr, {{}, {}, {}}) == std::vector<int>{0, 1, 2, 3});
  // Strictly better for both than RR: only JJ.
  CHECK(m.reachSet(rr, {{}, {}, m.vocab().allPlayers()}) == std::vector<int>{jj});
  CHECK_THROWS_AS(m.reachSet(99, {{}, {}, {}}), DomainError);
}

TEST_CASE("payoff tables induce total preorders") {
  PDModel m = fixtures::rockJazz();
  CHECK(m.isTotal());
  CHECK(m.profileCount() == 4);

  PayoffTableSpec constant;
  constant.players = {"x", "y"};
  constant.actionsPerPlayer = {{"0", "1"}, {"0", "1"}};
  for (const auto& ax : {"0", "1"}) {
    for (const auto& ay : {"0", "1"}) constant.utilities[{ax, ay}] = {7, 7};
  }
  PDModel flat = PDModel::fromPayoffTable(constant);
  for (int x = 0; x < 2; ++x) {
    for (int s = 0; s < flat.profileCount(); ++s) {
      for (int t = 0; t < flat.profileCount(); ++t) {
        CHECK(flat.weakPref(x, s, t));  // total indifference
      }
    }
  }

  PDModel three = fixtures::pd2();
  CHECK(three.playerCount() == 3);
  CHECK(three.profileCount() == 4);  // the third player has one action
  CHECK(three.isTotal());
  CHECK(three.findProfile("conf,conf,observe").has_value());
}

TEST_CASE("missing utility entries are format errors") {
  PayoffTableSpec spec;
  spec.players = {"x"};
  spec.actionsPerPlayer = {{"0", "1"}};
  spec.utilities = {{{"0"}, {1}}};  // entry for "1" missing
  CHECK_THROWS_AS(PDModel::fromPayoffTable(spec), FormatError);
}

TEST_CASE("explicit preorders close reflexively and transitively") {
  ExplicitPreorderSpec spec;
  spec.players = {"x"};
  spec.actionsPerPlayer = {{"0", "1", "2"}};
  spec.pairsPerPlayer = {{"x", {{{"0"}, {"1"}}, {{"1"}, {"2"}}}}};
  PDModel m = PDModel::fromExplicitPreorder(spec);

  const int p0 = pid(m, "0"), p1 = pid(m, "1"), p2 = pid(m, "2");
  CHECK(m.weakPref(0, p0, p1));
  CHECK(m.weakPref(0, p1, p2));
  CHECK(m.weakPref(0, p0, p2));  // transitivity
  CHECK(m.weakPref(0, p1, p1));  // reflexivity
  CHECK_FALSE(m.weakPref(0, p2, p0));
  CHECK(m.isTotal());  // a chain happens to be total

  ExplicitPreorderSpec discrete = spec;
  discrete.pairsPerPlayer = {};
  PDModel d = PDModel::fromExplicitPreorder(discrete);
  CHECK_FALSE(d.isTotal());
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) CHECK(d.weakPref(0, s, t) == (s == t));
  }

  ExplicitPreorderSpec bad = spec;
  bad.pairsPerPlayer = {{"x", {{{"9"}, {"1"}}}}};
  CHECK_THROWS_AS(PDModel::fromExplicitPreorder(bad), FormatError);
}

TEST_CASE("model invariants are enforced") {
  Vocabulary vocab({"x"});
  // No profiles.
  CHECK_THROWS_AS(PDModel(vocab, {"0"}, {{0}}, {}, {Preorder(0)}, {}), FormatError);
  // Non-transitive preference matrix.
  Preorder broken(3);
  broken.set(0, 1);
  broken.set(1, 2);
  std::vector<Profile> profiles{Profile{{0}}, Profile{{1}}, Profile{{2}}};
  CHECK_THROWS_AS(PDModel(vocab, {"0", "1", "2"}, {{0, 1, 2}}, profiles, {broken}, {}),
                  FormatError);
  // Duplicate profile.
  CHECK_THROWS_AS(PDModel(vocab, {"0"}, {{0}}, {Profile{{0}}, Profile{{0}}},
                          {Preorder(2)}, {}),
                  FormatError);
}

TEST_CASE("profile lookup accepts both id spellings") {
  PDModel compact = fixtures::rockJazz();
  CHECK(compact.findProfile("RJ") == compact.findProfile("R,J"));
  PDModel comma = fixtures::pd1();
  CHECK(comma.findProfile("coop,conf").has_value());
  CHECK_FALSE(comma.findProfile("nope").has_value());
}

TEST_CASE("agreement is an equivalence and splits over unions") {
  for (int seedIndex = 0; seedIndex < 25; ++seedIndex) {
    testgen::GenConfig cfg = testgen::fuzzModelConfig(11, seedIndex);
    PDModel m = testgen::generate(cfg);
    const PlayerSet all = m.vocab().allPlayers();
    const int n = m.profileCount();
    std::mt19937_64 rng(cfg.seed);
    for (int round = 0; round < 30; ++round) {
      const PlayerSet x = PlayerSet::fromMask(rng() & all.mask());
      const PlayerSet y = PlayerSet::fromMask(rng() & all.mask());
      const int s = static_cast<int>(rng() % n);
      const int t = static_cast<int>(rng() % n);
      const int u = static_cast<int>(rng() % n);

      CHECK(m.agree(s, s, x));
      CHECK(m.agree(s, t, x) == m.agree(t, s, x));
      if (m.agree(s, t, x) && m.agree(t, u, x)) CHECK(m.agree(s, u, x));
      CHECK(m.agree(s, t, PlayerSet{}));
      CHECK(m.agree(s, t, x | y) == (m.agree(s, t, x) && m.agree(s, t, y)));

      // Strictness is definitionally tied to the weak order.
      for (int p : x) {
        CHECK(m.strictPrefAll(s, t, PlayerSet::single(p)) ==
              (m.weakPrefAll(s, t, PlayerSet::single(p)) &&
               !m.weakPrefAll(t, s, PlayerSet::single(p))));
      }
    }
  }
}

TEST_CASE("reach sets shrink as any group grows") {
  for (int seedIndex = 0; seedIndex < 15; ++seedIndex) {
    testgen::GenConfig cfg = testgen::fuzzModelConfig(23, seedIndex);
    PDModel m = testgen::generate(cfg);
    const PlayerSet all = m.vocab().allPlayers();
    std::mt19937_64 rng(cfg.seed + 1);
    for (int round = 0; round < 20; ++round) {
      GroupQuery small{PlayerSet::fromMask(rng() & all.mask()),
                       PlayerSet::fromMask(rng() & all.mask()),
                       PlayerSet::fromMask(rng() & all.mask())};
      GroupQuery large{small.eq | PlayerSet::fromMask(rng() & all.mask()),
                       small.weak | PlayerSet::fromMask(rng() & all.mask()),
                       small.strict | PlayerSet::fromMask(rng() & all.mask())};
      const int s = static_cast<int>(rng() % m.profileCount());
      const auto wide = m.reachSet(s, small);
      for (int t : m.reachSet(s, large)) {
        CHECK(std::find(wide.begin(), wide.end(), t) != wide.end());
      }
    }
  }
}

TEST_CASE("induced preorders survive a pair-export round trip") {
  for (int seedIndex = 0; seedIndex < 10; ++seedIndex) {
    PDModel m = testgen::generate(testgen::fuzzModelConfig(37, seedIndex));

    ExplicitPreorderSpec spec;
    spec.players = m.vocab().players();
    for (int x = 0; x < m.playerCount(); ++x) {
      std::vector<std::string> actions;
      for (int a : m.actionsPerPlayer()[static_cast<std::size_t>(x)]) {
        actions.push_back(m.actionName(a));
      }
      spec.actionsPerPlayer.push_back(std::move(actions));
    }
    std::vector<std::vector<std::string>> profiles;
    for (int p = 0; p < m.profileCount(); ++p) {
      std::vector<std::string> tuple;
      for (int a : m.profile(p).actions) tuple.push_back(m.actionName(a));
      profiles.push_back(std::move(tuple));
    }
    spec.profiles = profiles;
    for (int x = 0; x < m.playerCount(); ++x) {
      auto& pairs = spec.pairsPerPlayer[m.vocab().playerName(x)];
      for (int s = 0; s < m.profileCount(); ++s) {
        for (int t = 0; t < m.profileCount(); ++t) {
          if (m.weakPref(x, s, t)) {
            pairs.emplace_back(profiles[static_cast<std::size_t>(s)],
                               profiles[static_cast<std::size_t>(t)]);
          }
        }
      }
    }
    PDModel rebuilt = PDModel::fromExplicitPreorder(spec);
    for (int x = 0; x < m.playerCount(); ++x) {
      CHECK(rebuilt.preference(x) == m.preference(x));
    }
    CHECK(rebuilt.isTotal() == m.isTotal());
  }
}

}  // TEST_SUITE
