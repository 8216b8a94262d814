#include "lpfd/derivation.hpp"

#include <cctype>

#include "lpfd/axioms.hpp"
#include "lpfd/bind.hpp"
#include "lpfd/parser.hpp"

namespace lpfd::axioms {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Splits on top-level commas only; braces shield their contents.
std::vector<std::string> splitTopLevel(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty()) parts.push_back(trim(current));
  return parts;
}

int parseInt(const std::string& s, int lineNo, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'", lineNo, 1);
  }
}

LineJustification parseJustification(const std::string& text, int lineNo) {
  LineJustification just;
  std::string body = trim(text);

  if (body == "TAUT") {
    just.kind = LineJustification::Kind::Taut;
    return just;
  }
  if (body.rfind("MP", 0) == 0) {
    just.kind = LineJustification::Kind::ModusPonens;
    auto parts = splitTopLevel(trim(body.substr(2)));
    if (parts.size() != 2) throw ParseError("MP needs two line numbers", lineNo, 1);
    just.major = parseInt(parts[0], lineNo, "a line number");
    just.minor = parseInt(parts[1], lineNo, "a line number");
    return just;
  }
  if (body.rfind("NEC", 0) == 0) {
    just.kind = LineJustification::Kind::Necessitation;
    std::string rest = trim(body.substr(3));
    std::size_t bracket = rest.find('[');
    if (bracket != std::string::npos) {
      just.necQueryText = trim(rest.substr(bracket));
      rest = trim(rest.substr(0, bracket));
    }
    just.premise = parseInt(rest, lineNo, "a line number");
    return just;
  }
  if (body.rfind("axiom(", 0) == 0 && body.back() == ')') {
    just.kind = LineJustification::Kind::Axiom;
    auto parts = splitTopLevel(body.substr(6, body.size() - 7));
    if (parts.empty()) throw ParseError("axiom() needs a schema name", lineNo, 1);
    just.axiomName = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::size_t eq = parts[i].find('=');
      if (eq == std::string::npos) {
        throw ParseError("axiom hint must be name=value: '" + parts[i] + "'", lineNo, 1);
      }
      just.hints.emplace_back(trim(parts[i].substr(0, eq)), trim(parts[i].substr(eq + 1)));
    }
    return just;
  }
  throw ParseError("unknown justification '" + body + "'", lineNo, 1);
}

}  // namespace

Derivation parseDerivation(const std::string& text) {
  std::vector<std::string> players;
  std::map<std::string, int> predicates;
  std::vector<DerivationLine> lines;

  std::size_t pos = 0;
  int lineNo = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineNo;

    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("players:", 0) == 0) {
      for (const auto& name : splitTopLevel(line.substr(8))) players.push_back(name);
      continue;
    }
    if (line.rfind("predicates:", 0) == 0) {
      for (const auto& entry : splitTopLevel(line.substr(11))) {
        std::size_t slash = entry.find('/');
        if (slash == std::string::npos) {
          throw ParseError("predicate declaration must be name/arity: '" + entry + "'", lineNo, 1);
        }
        predicates.emplace(trim(entry.substr(0, slash)),
                           parseInt(trim(entry.substr(slash + 1)), lineNo, "an arity"));
      }
      continue;
    }

    std::size_t dot = line.find('.');
    if (dot == std::string::npos) throw ParseError("proof step must start with 'n.'", lineNo, 1);
    DerivationLine step;
    step.number = parseInt(trim(line.substr(0, dot)), lineNo, "a line number");
    step.sourceText = line;

    std::string rest = line.substr(dot + 1);
    std::size_t by = rest.rfind(" BY ");
    if (by == std::string::npos) throw ParseError("proof step needs a BY justification", lineNo, 1);
    step.statement = parseFormula(trim(rest.substr(0, by)));
    step.justification = parseJustification(rest.substr(by + 4), lineNo);

    if (step.number != static_cast<int>(lines.size()) + 1) {
      throw ParseError("steps must be numbered consecutively from 1", lineNo, 1);
    }
    lines.push_back(std::move(step));
  }

  if (players.empty()) throw FormatError("proof script must declare players");
  return Derivation{Vocabulary(players, predicates), std::move(lines)};
}

CheckResult checkDerivation(const Derivation& derivation) {
  auto reject = [](int line, std::string reason) {
    return CheckResult{false, line, std::move(reason)};
  };

  const int count = static_cast<int>(derivation.lines.size());
  std::vector<Formula> bound;
  bound.reserve(derivation.lines.size());
  for (const DerivationLine& line : derivation.lines) {
    try {
      bound.push_back(bind(line.statement, derivation.vocab));
    } catch (const Error& e) {
      return reject(line.number, std::string("binding failed: ") + e.what());
    }
  }

  for (int i = 0; i < count; ++i) {
    const DerivationLine& line = derivation.lines[static_cast<std::size_t>(i)];
    const Formula& formula = bound[static_cast<std::size_t>(i)];
    const LineJustification& just = line.justification;

    switch (just.kind) {
      case LineJustification::Kind::Taut: {
        bool ok = false;
        try {
          ok = isTautologyInstance(formula);
        } catch (const Error& e) {
          return reject(line.number, std::string("tautology check failed: ") + e.what());
        }
        if (!ok) return reject(line.number, "not a propositional tautology instance");
        break;
      }
      case LineJustification::Kind::Axiom: {
        const Schema* schema = findSchema(just.axiomName);
        if (schema == nullptr) return reject(line.number, "unknown schema '" + just.axiomName + "'");
        if (schema->isRule()) {
          return reject(line.number, "'" + just.axiomName + "' is a rule; cite it via NEC");
        }
        auto subst = schema->match(formula);
        if (!subst) {
          return reject(line.number,
                        "no match for schema " + just.axiomName + " (or a side condition failed)");
        }
        for (const auto& [name, value] : just.hints) {
          try {
            if (!value.empty() && (value[0] == '{' || value[0] == '-')) {
              MacroGroup g = parseGroupLiteral(value);
              PlayerSet set = derivation.vocab.resolve(g.names, g.complement);
              auto it = subst->groups.find(name);
              if (it == subst->groups.end() || !(it->second == set)) {
                return reject(line.number, "hint " + name + "=" + value + " does not match");
              }
            } else {
              int player = derivation.vocab.playerIndexOf(value);
              auto it = subst->players.find(name);
              if (it == subst->players.end() || it->second != player) {
                return reject(line.number, "hint " + name + "=" + value + " does not match");
              }
            }
          } catch (const Error& e) {
            return reject(line.number, std::string("bad hint: ") + e.what());
          }
        }
        break;
      }
      case LineJustification::Kind::ModusPonens: {
        if (just.major < 1 || just.major >= line.number || just.minor < 1 ||
            just.minor >= line.number) {
          return reject(line.number, "MP must cite earlier lines");
        }
        auto imp = bound[static_cast<std::size_t>(just.major - 1)].asImplication();
        if (!imp) {
          return reject(line.number, "line " + std::to_string(just.major) + " is not an implication");
        }
        if (!(imp->first == bound[static_cast<std::size_t>(just.minor - 1)])) {
          return reject(line.number, "line " + std::to_string(just.minor) +
                                         " is not the antecedent of line " +
                                         std::to_string(just.major));
        }
        if (!(imp->second == formula)) {
          return reject(line.number,
                        "statement is not the consequent of line " + std::to_string(just.major));
        }
        break;
      }
      case LineJustification::Kind::Necessitation: {
        if (just.premise < 1 || just.premise >= line.number) {
          return reject(line.number, "NEC must cite an earlier line");
        }
        if (formula.kind() != Formula::Kind::Box) {
          return reject(line.number, "necessitation must derive a boxed formula");
        }
        if (!(formula.child() == bound[static_cast<std::size_t>(just.premise - 1)])) {
          return reject(line.number,
                        "body does not match line " + std::to_string(just.premise));
        }
        if (just.necQueryText) {
          try {
            MacroQuery mq = parseQueryLiteral(*just.necQueryText);
            GroupQuery q{derivation.vocab.resolve(mq.eq.names, mq.eq.complement),
                         derivation.vocab.resolve(mq.weak.names, mq.weak.complement),
                         derivation.vocab.resolve(mq.strict.names, mq.strict.complement)};
            if (!(q == formula.query())) {
              return reject(line.number, "stated subscripts do not match the derived modality");
            }
          } catch (const Error& e) {
            return reject(line.number, std::string("bad NEC subscripts: ") + e.what());
          }
        }
        break;
      }
    }
  }
  return CheckResult{};
}

}  // namespace lpfd::axioms
