#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpfd/formula.hpp"

namespace lpfd::axioms {

struct LineJustification {
  enum class Kind { Axiom, Taut, ModusPonens, Necessitation };

  Kind kind = Kind::Taut;
  // Axiom citations; hints are raw (name, value) pairs resolved during
  // checking, e.g. ("X", "{a,b}") or ("x", "a").
  std::string axiomName;
  std::vector<std::pair<std::string, std::string>> hints;
  // Modus ponens: major cites the implication, minor its antecedent.
  int major = 0;
  int minor = 0;
  // Necessitation premise plus the optional quoted subscript text.
  int premise = 0;
  std::optional<std::string> necQueryText;
};

struct DerivationLine {
  int number = 0;
  MacroFormula statement;
  LineJustification justification;
  std::string sourceText;
};

// A Hilbert-style proof script bound to one vocabulary.
struct Derivation {
  Vocabulary vocab;
  std::vector<DerivationLine> lines;
};

// Script format, one step per line:
//
//   # comment
//   players: a, b, c
//   predicates: P/1, Q/2          (optional)
//   1. <formula> BY axiom(II.e, X={a}, Y={a,b})
//   2. <formula> BY TAUT
//   3. <formula> BY MP 1,2
//   4. <formula> BY NEC 3 [={a}; <={}; <{}]
//
// Group hints must be literal sets; complements are resolved against the
// declared players when the script is checked.
Derivation parseDerivation(const std::string& text);

struct CheckResult {
  bool accepted = true;
  int failLine = 0;  // 1-based line number when rejected
  std::string reason;
};

// Accepts iff every line is a matching axiom instance with its side
// conditions satisfied, a propositional tautology instance, modus ponens
// from earlier lines, or necessitation of an earlier line.
CheckResult checkDerivation(const Derivation& derivation);

}  // namespace lpfd::axioms
