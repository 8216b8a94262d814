#include "lpfd/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lpfd::io {

using nlohmann::ordered_json;

namespace {

ordered_json parseJson(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> stringList(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw FormatError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rationalFrom(const ordered_json& j, const std::string& context) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational::fromDouble(j.get<double>());
  throw FormatError("utility for " + context + " must be a number");
}

// The builders key utilities by action tuple; files key them by profile id.
// Recreate the id scheme here to translate.
struct ProfileTable {
  std::vector<std::vector<std::string>> tuples;
  std::vector<std::string> ids;

  int find(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == id) return static_cast<int>(i);
    }
    return -1;
  }
};

ProfileTable buildProfileTable(const std::vector<std::vector<std::string>>& actionsPerPlayer,
                               const std::optional<std::vector<std::vector<std::string>>>& explicitProfiles) {
  ProfileTable table;
  if (explicitProfiles) {
    table.tuples = *explicitProfiles;
  } else {
    table.tuples.push_back({});
    for (const auto& actions : actionsPerPlayer) {
      std::vector<std::vector<std::string>> next;
      for (const auto& partial : table.tuples) {
        for (const auto& action : actions) {
          auto extended = partial;
          extended.push_back(action);
          next.push_back(std::move(extended));
        }
      }
      table.tuples = std::move(next);
    }
  }
  bool compact = true;
  for (const auto& actions : actionsPerPlayer) {
    for (const auto& a : actions) {
      if (a.size() != 1) compact = false;
    }
  }
  for (const auto& tuple : table.tuples) {
    std::string id;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (!compact && i > 0) id += ",";
      id += tuple[i];
    }
    table.ids.push_back(std::move(id));
  }
  return table;
}

}  // namespace

PDModel parseModel(const std::string& jsonText) {
  const ordered_json doc = parseJson(jsonText);
  if (!doc.is_object()) throw FormatError("model document must be an object");

  if (!doc.contains("players")) throw FormatError("model needs a 'players' list");
  std::vector<std::string> players = stringList(doc["players"], "players");

  if (!doc.contains("actions")) throw FormatError("model needs an 'actions' entry");
  std::vector<std::vector<std::string>> actionsPerPlayer;
  const ordered_json& actions = doc["actions"];
  if (actions.is_array()) {
    std::vector<std::string> shared = stringList(actions, "actions");
    actionsPerPlayer.assign(players.size(), shared);
  } else if (actions.is_object()) {
    for (const auto& player : players) {
      if (!actions.contains(player)) {
        throw FormatError("actions map is missing player '" + player + "'");
      }
      actionsPerPlayer.push_back(stringList(actions[player], "actions"));
    }
  } else {
    throw FormatError("'actions' must be a list or a per-player map");
  }

  std::optional<std::vector<std::vector<std::string>>> profiles;
  if (doc.contains("profiles")) {
    std::vector<std::vector<std::string>> given;
    for (const auto& tuple : doc["profiles"]) given.push_back(stringList(tuple, "profile"));
    profiles = std::move(given);
  }

  std::map<std::string, int> predicates;
  std::map<std::string, std::set<std::vector<std::string>>> interpretation;
  if (doc.contains("predicates")) {
    for (const auto& [name, entry] : doc["predicates"].items()) {
      if (!entry.is_object() || !entry.contains("arity")) {
        throw FormatError("predicate '" + name + "' needs an arity");
      }
      predicates.emplace(name, entry["arity"].get<int>());
      std::set<std::vector<std::string>> tuples;
      if (entry.contains("tuples")) {
        for (const auto& tuple : entry["tuples"]) tuples.insert(stringList(tuple, "tuple"));
      }
      interpretation.emplace(name, std::move(tuples));
    }
  }

  if (!doc.contains("preferences") || !doc["preferences"].is_object()) {
    throw FormatError("model needs a 'preferences' object");
  }
  const ordered_json& prefs = doc["preferences"];
  const std::string mode = prefs.value("mode", "");

  const ProfileTable table = buildProfileTable(actionsPerPlayer, profiles);

  if (mode == "utility") {
    if (!prefs.contains("utility")) throw FormatError("utility mode needs a 'utility' map");
    PayoffTableSpec spec;
    spec.players = players;
    spec.actionsPerPlayer = actionsPerPlayer;
    spec.profiles = profiles;
    spec.predicates = predicates;
    spec.interpretation = interpretation;
    const ordered_json& utility = prefs["utility"];
    for (std::size_t p = 0; p < table.tuples.size(); ++p) {
      const std::string& id = table.ids[p];
      if (!utility.contains(id)) throw FormatError("missing utility entry for profile '" + id + "'");
      const ordered_json& row = utility[id];
      std::vector<Rational> values;
      for (const auto& player : players) {
        if (!row.contains(player)) {
          throw FormatError("utility entry '" + id + "' is missing player '" + player + "'");
        }
        values.push_back(rationalFrom(row[player], id + "/" + player));
      }
      spec.utilities.emplace(table.tuples[p], std::move(values));
    }
    return PDModel::fromPayoffTable(spec);
  }
  if (mode == "preorder") {
    if (!prefs.contains("pairs")) throw FormatError("preorder mode needs a 'pairs' map");
    ExplicitPreorderSpec spec;
    spec.players = players;
    spec.actionsPerPlayer = actionsPerPlayer;
    spec.profiles = profiles;
    spec.predicates = predicates;
    spec.interpretation = interpretation;
    for (const auto& [player, pairList] : prefs["pairs"].items()) {
      std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs;
      for (const auto& pair : pairList) {
        if (!pair.is_array() || pair.size() != 2) {
          throw FormatError("preference pairs must be [low, high] profile ids");
        }
        const int lo = table.find(pair[0].get<std::string>());
        const int hi = table.find(pair[1].get<std::string>());
        if (lo < 0 || hi < 0) {
          throw FormatError("preference pair references an unknown profile id");
        }
        pairs.emplace_back(table.tuples[static_cast<std::size_t>(lo)],
                           table.tuples[static_cast<std::size_t>(hi)]);
      }
      spec.pairsPerPlayer.emplace(player, std::move(pairs));
    }
    return PDModel::fromExplicitPreorder(spec);
  }
  throw FormatError("preferences mode must be 'utility' or 'preorder'");
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PDModel loadModel(const std::string& path) { return parseModel(readFile(path)); }

std::string exportModel(const PDModel& model) {
  ordered_json doc;
  doc["players"] = model.vocab().players();

  bool uniform = true;
  const auto& perPlayer = model.actionsPerPlayer();
  for (const auto& list : perPlayer) {
    if (static_cast<int>(list.size()) != static_cast<int>(model.actions().size())) uniform = false;
  }
  if (uniform) {
    doc["actions"] = model.actions();
  } else {
    ordered_json map = ordered_json::object();
    for (int x = 0; x < model.playerCount(); ++x) {
      ordered_json list = ordered_json::array();
      for (int a : perPlayer[static_cast<std::size_t>(x)]) list.push_back(model.actionName(a));
      map[model.vocab().playerName(x)] = std::move(list);
    }
    doc["actions"] = std::move(map);
  }

  ordered_json profiles = ordered_json::array();
  for (int p = 0; p < model.profileCount(); ++p) {
    ordered_json tuple = ordered_json::array();
    for (int a : model.profile(p).actions) tuple.push_back(model.actionName(a));
    profiles.push_back(std::move(tuple));
  }
  doc["profiles"] = std::move(profiles);

  ordered_json pairs = ordered_json::object();
  for (int x = 0; x < model.playerCount(); ++x) {
    ordered_json list = ordered_json::array();
    const Preorder& pre = model.preference(x);
    for (int s = 0; s < model.profileCount(); ++s) {
      for (int t = 0; t < model.profileCount(); ++t) {
        if (pre.holds(s, t)) list.push_back({model.profileId(s), model.profileId(t)});
      }
    }
    pairs[model.vocab().playerName(x)] = std::move(list);
  }
  doc["preferences"] = {{"mode", "preorder"}, {"pairs", std::move(pairs)}};

  ordered_json predicates = ordered_json::object();
  for (const auto& [name, interp] : model.interpretation()) {
    ordered_json tuples = ordered_json::array();
    for (const auto& tuple : interp.tuples) {
      ordered_json names = ordered_json::array();
      for (int a : tuple) names.push_back(model.actionName(a));
      tuples.push_back(std::move(names));
    }
    predicates[name] = {{"arity", interp.arity}, {"tuples", std::move(tuples)}};
  }
  doc["predicates"] = std::move(predicates);
  doc["total"] = model.isTotal();

  return doc.dump(2) + "\n";
}

void saveModel(const PDModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << exportModel(model);
}

std::string reportToJson(const PDModel& model, const analysis::AnalysisReport& report) {
  ordered_json doc;
  doc["concept"] = analysis::conceptName(report.kind);

  auto groupNames = [&](PlayerSet set) {
    ordered_json list = ordered_json::array();
    for (int x : set) list.push_back(model.vocab().playerName(x));
    return list;
  };
  doc["group"] = groupNames(report.group);
  doc["fixed"] = groupNames(report.fixedGroup);

  ordered_json solutions = ordered_json::array();
  for (int s : report.solutions) solutions.push_back(model.profileId(s));
  doc["solutions"] = std::move(solutions);

  ordered_json evidence = ordered_json::object();
  for (const auto& [profile, ev] : report.evidence) {
    ordered_json entry = ordered_json::object();
    if (ev.dominator) entry["blocked_by"] = model.profileId(*ev.dominator);
    if (ev.gainer) entry["gainer"] = model.vocab().playerName(*ev.gainer);
    if (ev.failedSubgroup) entry["failed_subgroup"] = groupNames(*ev.failedSubgroup);
    if (ev.cover) {
      ordered_json cover = ordered_json::array();
      for (PlayerSet member : *ev.cover) cover.push_back(groupNames(member));
      entry["cover"] = std::move(cover);
    }
    evidence[model.profileId(profile)] = std::move(entry);
  }
  doc["evidence"] = std::move(evidence);
  return doc.dump(2) + "\n";
}

testgen::GenConfig parseGenConfig(const std::string& jsonText) {
  const ordered_json doc = parseJson(jsonText);
  if (!doc.is_object()) throw FormatError("generator config must be an object");
  testgen::GenConfig cfg;
  cfg.minPlayers = doc.value("min_players", cfg.minPlayers);
  cfg.maxPlayers = doc.value("max_players", cfg.maxPlayers);
  cfg.minActions = doc.value("min_actions", cfg.minActions);
  cfg.maxActions = doc.value("max_actions", cfg.maxActions);
  cfg.profileDensity = doc.value("profile_density", cfg.profileDensity);
  cfg.requireTotal = doc.value("require_total", cfg.requireTotal);
  cfg.maxPredicates = doc.value("max_predicates", cfg.maxPredicates);
  cfg.maxArity = doc.value("max_arity", cfg.maxArity);
  cfg.seed = doc.value("seed", cfg.seed);
  const std::string mode = doc.value("mode", "utility");
  if (mode == "utility") {
    cfg.mode = testgen::PreferenceMode::Utility;
  } else if (mode == "preorder") {
    cfg.mode = testgen::PreferenceMode::RandomPreorder;
  } else {
    throw FormatError("generator mode must be 'utility' or 'preorder'");
  }
  return cfg;
}

testgen::GenConfig loadGenConfig(const std::string& path) { return parseGenConfig(readFile(path)); }

}  // namespace lpfd::io
