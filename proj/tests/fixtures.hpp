#pragma once

#include <lpfd/model.hpp>

// In-code copies of the shipped example games. Built directly through the
// payoff builder so file-format bugs cannot leak into unrelated tests.
namespace fixtures {

// Coordination game: both players prefer meeting, and the J club over the
// R club. Profiles in canonical order: RR, RJ, JR, JJ.
inline lpfd::PDModel rockJazz() {
  lpfd::PayoffTableSpec spec;
  spec.players = {"E", "A"};
  spec.actionsPerPlayer = {{"R", "J"}, {"R", "J"}};
  spec.utilities = {
      {{"R", "R"}, {1, 1}},
      {{"R", "J"}, {0, 0}},
      {{"J", "R"}, {0, 0}},
      {{"J", "J"}, {4, 4}},
  };
  spec.predicates = {{"P", 1}};
  spec.interpretation = {{"P", {{"J"}}}};
  return lpfd::PDModel::fromPayoffTable(spec);
}

// Two prisoners. Profiles: coop,coop / coop,conf / conf,coop / conf,conf.
inline lpfd::PDModel pd1() {
  lpfd::PayoffTableSpec spec;
  spec.players = {"1", "2"};
  spec.actionsPerPlayer = {{"coop", "conf"}, {"coop", "conf"}};
  spec.utilities = {
      {{"coop", "coop"}, {2, 2}},
      {{"coop", "conf"}, {0, 4}},
      {{"conf", "coop"}, {4, 0}},
      {{"conf", "conf"}, {1, 1}},
  };
  return lpfd::PDModel::fromPayoffTable(spec);
}

// Two prisoners plus the prosecutor, who only observes but has preferences.
inline lpfd::PDModel pd2() {
  lpfd::PayoffTableSpec spec;
  spec.players = {"1", "2", "3"};
  spec.actionsPerPlayer = {{"coop", "conf"}, {"coop", "conf"}, {"observe"}};
  spec.utilities = {
      {{"coop", "coop", "observe"}, {2, 2, 0}},
      {{"coop", "conf", "observe"}, {0, 4, 1}},
      {{"conf", "coop", "observe"}, {4, 0, 1}},
      {{"conf", "conf", "observe"}, {1, 1, 4}},
  };
  return lpfd::PDModel::fromPayoffTable(spec);
}

}  // namespace fixtures
