#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpfd/model.hpp"

namespace lpfd {

// A bound formula: players resolved to indices, groups to sets, macros
// expanded. Immutable tree with shared subterms; value-semantic handle.
//
// The modality written [=X; <=X'; <X''] is universal: it quantifies over
// every profile agreeing on X and (weakly/strictly) preferred by X'/X''.
// Its dual dia[...] and all other connectives beyond ~, &, atoms and the
// dependence atom are expanded away at bind time.
class Formula {
 public:
  enum class Kind { Atom, Falsum, Not, And, Box, DepAtom };

  Formula() = default;  // empty handle; only valid after assignment

  static Formula atom(std::string predicate, std::vector<int> args);
  static Formula falsum();
  static Formula truth() { return negation(falsum()); }
  static Formula negation(Formula f);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right) {
    return negation(conjunction(negation(left), negation(std::move(right))));
  }
  static Formula implication(Formula left, Formula right) {
    return negation(conjunction(std::move(left), negation(std::move(right))));
  }
  static Formula box(GroupQuery query, Formula body);
  static Formula dual(GroupQuery query, Formula body) {
    return negation(box(query, negation(std::move(body))));
  }
  static Formula depAtom(GroupQuery query, int player);

  // Left-associative fold; empty input yields the stated unit.
  static Formula conjunctionAll(const std::vector<Formula>& parts);  // unit: truth
  static Formula disjunctionAll(const std::vector<Formula>& parts);  // unit: falsum

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;

  const std::string& predicate() const;    // Atom
  const std::vector<int>& args() const;    // Atom
  const GroupQuery& query() const;         // Box, DepAtom
  int depTarget() const;                    // DepAtom
  const Formula& child() const;             // Not, Box
  const Formula& left() const;              // And
  const Formula& right() const;             // And

  // Stable node identity; usable as a memoization key for shared subterms.
  const void* id() const { return node_.get(); }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

  // ~(a & ~b), the implication encoding.
  std::optional<std::pair<Formula, Formula>> asImplication() const;
  // ~[q]~f, the dual encoding.
  std::optional<std::pair<GroupQuery, Formula>> asDual() const;
  // Conjunction leaves in left-to-right order; the formula itself if it is
  // not a conjunction.
  std::vector<Formula> conjuncts() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Free players: the agreement group for modalities and dependence atoms,
// argument players for atoms, closed under the connectives.
PlayerSet freePlayers(const Formula& f);

// Checks player indices, predicate names and arities against a vocabulary.
// Throws VocabularyError on mismatch.
void validateAgainst(const Formula& f, const Vocabulary& vocab);

// Canonical concrete syntax. Parsing the result and binding it against the
// same vocabulary reproduces the formula.
std::string print(const Formula& f, const Vocabulary& vocab);

// ---------------------------------------------------------------------------
// Surface syntax
// ---------------------------------------------------------------------------

// A group literal as written: named players, or the complement marker
// -{...} which resolves to V minus the names at bind time.
struct MacroGroup {
  std::vector<std::string> names;
  bool complement = false;

  friend bool operator==(const MacroGroup& a, const MacroGroup& b) = default;
};

struct MacroQuery {
  MacroGroup eq;
  MacroGroup weak;
  MacroGroup strict;

  friend bool operator==(const MacroQuery& a, const MacroQuery& b) = default;
};

// Parsed but unbound formula: names unresolved, defined operators (pa, na,
// ca...) not yet expanded.
class MacroFormula {
 public:
  enum class Kind {
    Atom,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Box,
    Dual,
    DepAtom,
    DepAll,  // dep[q] {y1,...}: conjunction of dependence atoms
    DD,      // DD({X}) phi        == [=X; <={}; <{}] phi
    D,       // D({X}; y)          == dep[=X; <={}; <{}] y
    Pa,      // strong Pareto optimality of a group
    PaY,     // Pa with the fixed group chosen freely
    Na,      // Nash condition
    Ca1,
    Ca2,
    Ca,
  };

  MacroFormula() = default;

  static MacroFormula atom(std::string predicate, std::vector<std::string> args);
  static MacroFormula truth();
  static MacroFormula falsity();
  static MacroFormula negation(MacroFormula f);
  static MacroFormula conjunction(MacroFormula l, MacroFormula r);
  static MacroFormula disjunction(MacroFormula l, MacroFormula r);
  static MacroFormula implication(MacroFormula l, MacroFormula r);
  static MacroFormula box(MacroQuery q, MacroFormula body);
  static MacroFormula dual(MacroQuery q, MacroFormula body);
  static MacroFormula depAtom(MacroQuery q, std::string var);
  static MacroFormula depAll(MacroQuery q, MacroGroup targets);
  static MacroFormula dd(MacroGroup group, MacroFormula body);
  static MacroFormula d(MacroGroup group, std::string var);
  static MacroFormula pa(MacroGroup group);
  static MacroFormula paY(MacroGroup fixed, MacroGroup group);
  static MacroFormula na(MacroGroup group);
  static MacroFormula ca1(MacroGroup group);
  static MacroFormula ca2(MacroGroup group);
  static MacroFormula ca(MacroGroup group);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;

  const std::string& predicate() const;
  const std::vector<std::string>& args() const;
  const MacroQuery& query() const;
  const std::string& var() const;
  const MacroGroup& group() const;   // macro argument X (Pa, Na, Ca*, DD, D, DepAll targets)
  const MacroGroup& fixed() const;   // PaY's Y
  const MacroFormula& child() const;
  const MacroFormula& left() const;
  const MacroFormula& right() const;

  friend bool operator==(const MacroFormula& a, const MacroFormula& b);

 private:
  struct Node;
  explicit MacroFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<Node> makeNode(Kind kind);

  std::shared_ptr<const Node> node_;
};

// Canonical concrete syntax; parse(print(f)) == f structurally.
std::string print(const MacroFormula& f);

std::string toString(const MacroGroup& g);

}  // namespace lpfd
