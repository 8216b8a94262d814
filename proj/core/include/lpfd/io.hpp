#pragma once

#include <string>

#include "lpfd/analysis.hpp"
#include "lpfd/model.hpp"
#include "lpfd/testgen.hpp"

namespace lpfd::io {

// Model documents are JSON, one model per document:
//
//   {
//     "players": ["E", "A"],
//     "actions": ["R", "J"],                 // or {"E": [...], "A": [...]}
//     "profiles": [["R","R"], ["R","J"]],    // optional; full product if absent
//     "preferences": {
//       "mode": "utility",                   // or "preorder"
//       "utility": {"RR": {"E": 1, "A": 1}, ...},
//       "pairs": {"E": [["RR","JJ"], ...], ...}
//     },
//     "predicates": {"P": {"arity": 1, "tuples": [["R"]]}}
//   }
//
// Profile ids concatenate action names in player order, comma-separated
// when any action name has more than one character.
PDModel parseModel(const std::string& jsonText);
PDModel loadModel(const std::string& path);

// Canonical export: explicit profiles, preferences in preorder form (the
// full relation; re-closing is a no-op). loadModel(exportModel(m)) is
// semantically identical to m.
std::string exportModel(const PDModel& model);
void saveModel(const PDModel& model, const std::string& path);

// Stable-order JSON rendering of a solver report.
std::string reportToJson(const PDModel& model, const analysis::AnalysisReport& report);

testgen::GenConfig parseGenConfig(const std::string& jsonText);
testgen::GenConfig loadGenConfig(const std::string& path);

std::string readFile(const std::string& path);  // FormatError when unreadable

}  // namespace lpfd::io
