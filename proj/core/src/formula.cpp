#include "lpfd/formula.hpp"

#include <algorithm>

namespace lpfd {

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  std::string pred;
  std::vector<int> args;
  GroupQuery query{};
  int depTarget = -1;
  Formula first;
  Formula second;
};

Formula Formula::atom(std::string predicate, std::vector<int> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->pred = std::move(predicate);
  node->args = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::falsum() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Falsum;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->first = std::move(f);
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->first = std::move(left);
  node->second = std::move(right);
  return Formula(std::move(node));
}

Formula Formula::box(GroupQuery query, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Box;
  node->query = query;
  node->first = std::move(body);
  return Formula(std::move(node));
}

Formula Formula::depAtom(GroupQuery query, int player) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::DepAtom;
  node->query = query;
  node->depTarget = player;
  return Formula(std::move(node));
}

namespace {

// Left-biased balanced fold: identical to a left-assoc chain for up to
// three parts, logarithmic depth for the bulk expansions.
template <typename Join>
Formula foldBalanced(const std::vector<Formula>& parts, std::size_t lo, std::size_t hi,
                     Join join) {
  if (hi - lo == 1) return parts[lo];
  std::size_t mid = lo + (hi - lo + 1) / 2;
  return join(foldBalanced(parts, lo, mid, join), foldBalanced(parts, mid, hi, join));
}

}  // namespace

Formula Formula::conjunctionAll(const std::vector<Formula>& parts) {
  if (parts.empty()) return truth();
  return foldBalanced(parts, 0, parts.size(),
                      [](Formula a, Formula b) { return conjunction(std::move(a), std::move(b)); });
}

Formula Formula::disjunctionAll(const std::vector<Formula>& parts) {
  if (parts.empty()) return falsum();
  return foldBalanced(parts, 0, parts.size(),
                      [](Formula a, Formula b) { return disjunction(std::move(a), std::move(b)); });
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::predicate() const { return node_->pred; }
const std::vector<int>& Formula::args() const { return node_->args; }
const GroupQuery& Formula::query() const { return node_->query; }
int Formula::depTarget() const { return node_->depTarget; }
const Formula& Formula::child() const { return node_->first; }
const Formula& Formula::left() const { return node_->first; }
const Formula& Formula::right() const { return node_->second; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Atom:
      return a.node_->pred == b.node_->pred && a.node_->args == b.node_->args;
    case Formula::Kind::Falsum:
      return true;
    case Formula::Kind::Not:
      return a.node_->first == b.node_->first;
    case Formula::Kind::And:
      return a.node_->first == b.node_->first && a.node_->second == b.node_->second;
    case Formula::Kind::Box:
      return a.node_->query == b.node_->query && a.node_->first == b.node_->first;
    case Formula::Kind::DepAtom:
      return a.node_->query == b.node_->query && a.node_->depTarget == b.node_->depTarget;
  }
  return false;
}

std::optional<std::pair<Formula, Formula>> Formula::asImplication() const {
  if (kind() != Kind::Not) return std::nullopt;
  const Formula& inner = child();
  if (inner.kind() != Kind::And) return std::nullopt;
  if (inner.right().kind() != Kind::Not) return std::nullopt;
  return std::make_pair(inner.left(), inner.right().child());
}

std::optional<std::pair<GroupQuery, Formula>> Formula::asDual() const {
  if (kind() != Kind::Not) return std::nullopt;
  const Formula& inner = child();
  if (inner.kind() != Kind::Box) return std::nullopt;
  if (inner.child().kind() != Kind::Not) return std::nullopt;
  return std::make_pair(inner.query(), inner.child().child());
}

std::vector<Formula> Formula::conjuncts() const {
  std::vector<Formula> out;
  std::vector<Formula> stack{*this};
  while (!stack.empty()) {
    Formula f = std::move(stack.back());
    stack.pop_back();
    if (f.kind() == Kind::And) {
      stack.push_back(f.right());
      stack.push_back(f.left());
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

PlayerSet freePlayers(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      PlayerSet set;
      for (int x : f.args()) set = set.with(x);
      return set;
    }
    case Formula::Kind::Falsum:
      return {};
    case Formula::Kind::Not:
      return freePlayers(f.child());
    case Formula::Kind::And:
      return freePlayers(f.left()) | freePlayers(f.right());
    case Formula::Kind::Box:
    case Formula::Kind::DepAtom:
      return f.query().eq;
  }
  return {};
}

void validateAgainst(const Formula& f, const Vocabulary& vocab) {
  const PlayerSet all = vocab.allPlayers();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      if (!vocab.hasPredicate(f.predicate())) {
        throw VocabularyError("unknown predicate '" + f.predicate() + "'");
      }
      if (vocab.arity(f.predicate()) != static_cast<int>(f.args().size())) {
        throw VocabularyError("arity mismatch for predicate '" + f.predicate() + "'");
      }
      for (int x : f.args()) {
        if (x < 0 || x >= vocab.playerCount()) {
          throw VocabularyError("atom argument is not a player of this vocabulary");
        }
      }
      return;
    }
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Not:
      validateAgainst(f.child(), vocab);
      return;
    case Formula::Kind::And:
      validateAgainst(f.left(), vocab);
      validateAgainst(f.right(), vocab);
      return;
    case Formula::Kind::Box:
    case Formula::Kind::DepAtom: {
      const GroupQuery& q = f.query();
      if (!q.eq.subsetOf(all) || !q.weak.subsetOf(all) || !q.strict.subsetOf(all)) {
        throw VocabularyError("modality group mentions a player outside the vocabulary");
      }
      if (f.kind() == Formula::Kind::DepAtom) {
        if (f.depTarget() < 0 || f.depTarget() >= vocab.playerCount()) {
          throw VocabularyError("dependence target is not a player of this vocabulary");
        }
      } else {
        validateAgainst(f.child(), vocab);
      }
      return;
    }
  }
}

namespace {

std::string queryText(const GroupQuery& q, const Vocabulary& vocab) {
  return "=" + vocab.describeSet(q.eq) + "; <=" + vocab.describeSet(q.weak) + "; <" +
         vocab.describeSet(q.strict);
}

}  // namespace

std::string print(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::string out = f.predicate() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ",";
        out += vocab.playerName(f.args()[i]);
      }
      return out + ")";
    }
    case Formula::Kind::Falsum:
      return "false";
    case Formula::Kind::Not:
      return "~" + print(f.child(), vocab);
    case Formula::Kind::And:
      return "(" + print(f.left(), vocab) + " & " + print(f.right(), vocab) + ")";
    case Formula::Kind::Box:
      return "[" + queryText(f.query(), vocab) + "] " + print(f.child(), vocab);
    case Formula::Kind::DepAtom:
      return "dep[" + queryText(f.query(), vocab) + "] " + vocab.playerName(f.depTarget());
  }
  return {};
}

// ---------------------------------------------------------------------------
// MacroFormula

struct MacroFormula::Node {
  Kind kind;
  std::string pred;
  std::vector<std::string> args;
  MacroQuery query;
  std::string var;
  MacroGroup group;
  MacroGroup fixedGroup;
  MacroFormula first;
  MacroFormula second;
};

std::shared_ptr<MacroFormula::Node> MacroFormula::makeNode(Kind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return node;
}

MacroFormula MacroFormula::atom(std::string predicate, std::vector<std::string> args) {
  auto node = makeNode(Kind::Atom);
  node->pred = std::move(predicate);
  node->args = std::move(args);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::truth() { return MacroFormula(makeNode(Kind::True)); }
MacroFormula MacroFormula::falsity() { return MacroFormula(makeNode(Kind::False)); }

MacroFormula MacroFormula::negation(MacroFormula f) {
  auto node = makeNode(Kind::Not);
  node->first = std::move(f);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::conjunction(MacroFormula l, MacroFormula r) {
  auto node = makeNode(Kind::And);
  node->first = std::move(l);
  node->second = std::move(r);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::disjunction(MacroFormula l, MacroFormula r) {
  auto node = makeNode(Kind::Or);
  node->first = std::move(l);
  node->second = std::move(r);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::implication(MacroFormula l, MacroFormula r) {
  auto node = makeNode(Kind::Implies);
  node->first = std::move(l);
  node->second = std::move(r);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::box(MacroQuery q, MacroFormula body) {
  auto node = makeNode(Kind::Box);
  node->query = std::move(q);
  node->first = std::move(body);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::dual(MacroQuery q, MacroFormula body) {
  auto node = makeNode(Kind::Dual);
  node->query = std::move(q);
  node->first = std::move(body);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::depAtom(MacroQuery q, std::string var) {
  auto node = makeNode(Kind::DepAtom);
  node->query = std::move(q);
  node->var = std::move(var);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::depAll(MacroQuery q, MacroGroup targets) {
  auto node = makeNode(Kind::DepAll);
  node->query = std::move(q);
  node->group = std::move(targets);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::dd(MacroGroup group, MacroFormula body) {
  auto node = makeNode(Kind::DD);
  node->group = std::move(group);
  node->first = std::move(body);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::d(MacroGroup group, std::string var) {
  auto node = makeNode(Kind::D);
  node->group = std::move(group);
  node->var = std::move(var);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::pa(MacroGroup group) {
  auto node = makeNode(Kind::Pa);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::paY(MacroGroup fixed, MacroGroup group) {
  auto node = makeNode(Kind::PaY);
  node->fixedGroup = std::move(fixed);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::na(MacroGroup group) {
  auto node = makeNode(Kind::Na);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::ca1(MacroGroup group) {
  auto node = makeNode(Kind::Ca1);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::ca2(MacroGroup group) {
  auto node = makeNode(Kind::Ca2);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula MacroFormula::ca(MacroGroup group) {
  auto node = makeNode(Kind::Ca);
  node->group = std::move(group);
  return MacroFormula(std::move(node));
}

MacroFormula::Kind MacroFormula::kind() const { return node_->kind; }
const std::string& MacroFormula::predicate() const { return node_->pred; }
const std::vector<std::string>& MacroFormula::args() const { return node_->args; }
const MacroQuery& MacroFormula::query() const { return node_->query; }
const std::string& MacroFormula::var() const { return node_->var; }
const MacroGroup& MacroFormula::group() const { return node_->group; }
const MacroGroup& MacroFormula::fixed() const { return node_->fixedGroup; }
const MacroFormula& MacroFormula::child() const { return node_->first; }
const MacroFormula& MacroFormula::left() const { return node_->first; }
const MacroFormula& MacroFormula::right() const { return node_->second; }

bool operator==(const MacroFormula& a, const MacroFormula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.pred != y.pred || x.args != y.args || x.query != y.query ||
      x.var != y.var || x.group != y.group || x.fixedGroup != y.fixedGroup) {
    return false;
  }
  const bool firstEqual =
      (!x.first.valid() && !y.first.valid()) || (x.first.valid() && y.first.valid() && x.first == y.first);
  const bool secondEqual = (!x.second.valid() && !y.second.valid()) ||
                           (x.second.valid() && y.second.valid() && x.second == y.second);
  return firstEqual && secondEqual;
}

std::string toString(const MacroGroup& g) {
  std::string out = g.complement ? "-{" : "{";
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    if (i) out += ",";
    out += g.names[i];
  }
  return out + "}";
}

namespace {

std::string queryText(const MacroQuery& q) {
  return "=" + toString(q.eq) + "; <=" + toString(q.weak) + "; <" + toString(q.strict);
}

}  // namespace

std::string print(const MacroFormula& f) {
  using Kind = MacroFormula::Kind;
  switch (f.kind()) {
    case Kind::Atom: {
      std::string out = f.predicate() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ",";
        out += f.args()[i];
      }
      return out + ")";
    }
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Not:
      return "~" + print(f.child());
    case Kind::And:
      return "(" + print(f.left()) + " & " + print(f.right()) + ")";
    case Kind::Or:
      return "(" + print(f.left()) + " | " + print(f.right()) + ")";
    case Kind::Implies:
      return "(" + print(f.left()) + " -> " + print(f.right()) + ")";
    case Kind::Box:
      return "[" + queryText(f.query()) + "] " + print(f.child());
    case Kind::Dual:
      return "dia[" + queryText(f.query()) + "] " + print(f.child());
    case Kind::DepAtom:
      return "dep[" + queryText(f.query()) + "] " + f.var();
    case Kind::DepAll:
      return "dep[" + queryText(f.query()) + "] " + toString(f.group());
    case Kind::DD:
      return "DD(" + toString(f.group()) + ") " + print(f.child());
    case Kind::D:
      return "D(" + toString(f.group()) + "; " + f.var() + ")";
    case Kind::Pa:
      return "pa(" + toString(f.group()) + ")";
    case Kind::PaY:
      return "paY(" + toString(f.fixed()) + "; " + toString(f.group()) + ")";
    case Kind::Na:
      return "na(" + toString(f.group()) + ")";
    case Kind::Ca1:
      return "ca1(" + toString(f.group()) + ")";
    case Kind::Ca2:
      return "ca2(" + toString(f.group()) + ")";
    case Kind::Ca:
      return "ca(" + toString(f.group()) + ")";
  }
  return {};
}

}  // namespace lpfd
