#include "lpfd/parser.hpp"

#include <cctype>
#include <utility>

#include "lpfd/errors.hpp"

namespace lpfd {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  Eq,
  Leq,
  Lt,
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : input_(input) {}

  Token next() {
    skipSpace();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= input_.size()) {
      tok.kind = Tok::End;
      return tok;
    }
    char c = input_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_')) {
        advance();
      }
      tok.kind = Tok::Ident;
      tok.text = input_.substr(start, pos_ - start);
      return tok;
    }
    switch (c) {
      case '(': tok.kind = Tok::LParen; break;
      case ')': tok.kind = Tok::RParen; break;
      case '[': tok.kind = Tok::LBracket; break;
      case ']': tok.kind = Tok::RBracket; break;
      case '{': tok.kind = Tok::LBrace; break;
      case '}': tok.kind = Tok::RBrace; break;
      case ',': tok.kind = Tok::Comma; break;
      case ';': tok.kind = Tok::Semi; break;
      case '~': tok.kind = Tok::Tilde; break;
      case '&': tok.kind = Tok::Amp; break;
      case '|': tok.kind = Tok::Pipe; break;
      case '=': tok.kind = Tok::Eq; break;
      case '<':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '=') {
          advance();
          tok.kind = Tok::Leq;
        } else {
          tok.kind = Tok::Lt;
        }
        break;
      case '-':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
          advance();
          tok.kind = Tok::Arrow;
        } else {
          tok.kind = Tok::Minus;
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    advance();
    return tok;
  }

 private:
  void advance() {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) advance();
  }

  const std::string& input_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& input) : lexer_(input) { shift(); }

  MacroFormula parseAll() {
    MacroFormula f = parseImplies();
    expect(Tok::End, "end of input");
    return f;
  }

  MacroGroup parseGroupOnly() {
    MacroGroup g = parseGroup();
    expect(Tok::End, "end of input");
    return g;
  }

  MacroQuery parseQueryOnly() {
    MacroQuery q = parseQuery();
    expect(Tok::End, "end of input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, current_.line, current_.column);
  }

  void shift() { current_ = lexer_.next(); }

  bool at(Tok kind) const { return current_.kind == kind; }

  Token take(Tok kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what);
    Token tok = current_;
    shift();
    return tok;
  }

  void expect(Tok kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what);
  }

  // "->" is right-associative and binds loosest.
  MacroFormula parseImplies() {
    MacroFormula left = parseOr();
    if (at(Tok::Arrow)) {
      shift();
      return MacroFormula::implication(std::move(left), parseImplies());
    }
    return left;
  }

  MacroFormula parseOr() {
    MacroFormula acc = parseAnd();
    while (at(Tok::Pipe)) {
      shift();
      acc = MacroFormula::disjunction(std::move(acc), parseAnd());
    }
    return acc;
  }

  MacroFormula parseAnd() {
    MacroFormula acc = parseUnary();
    while (at(Tok::Amp)) {
      shift();
      acc = MacroFormula::conjunction(std::move(acc), parseUnary());
    }
    return acc;
  }

  MacroFormula parseUnary() {
    if (at(Tok::Tilde)) {
      shift();
      return MacroFormula::negation(parseUnary());
    }
    if (at(Tok::LBracket)) {
      MacroQuery q = parseQuery();
      return MacroFormula::box(std::move(q), parseUnary());
    }
    return parsePrimary();
  }

  MacroQuery parseQuery() {
    take(Tok::LBracket, "'['");
    MacroQuery q;
    take(Tok::Eq, "'='");
    q.eq = parseGroup();
    take(Tok::Semi, "';'");
    take(Tok::Leq, "'<='");
    q.weak = parseGroup();
    take(Tok::Semi, "';'");
    take(Tok::Lt, "'<'");
    q.strict = parseGroup();
    take(Tok::RBracket, "']'");
    return q;
  }

  MacroGroup parseGroup() {
    MacroGroup g;
    if (at(Tok::Minus)) {
      shift();
      g.complement = true;
    }
    take(Tok::LBrace, "'{'");
    if (!at(Tok::RBrace)) {
      g.names.push_back(take(Tok::Ident, "player name").text);
      while (at(Tok::Comma)) {
        shift();
        g.names.push_back(take(Tok::Ident, "player name").text);
      }
    }
    take(Tok::RBrace, "'}'");
    return g;
  }

  bool groupAhead() const { return at(Tok::LBrace) || at(Tok::Minus); }

  MacroFormula parsePrimary() {
    if (at(Tok::LParen)) {
      shift();
      MacroFormula inner = parseImplies();
      take(Tok::RParen, "')'");
      return inner;
    }
    if (!at(Tok::Ident)) fail("expected a formula");
    Token head = current_;
    shift();

    if (head.text == "true") return MacroFormula::truth();
    if (head.text == "false") return MacroFormula::falsity();

    if (head.text == "dia" && at(Tok::LBracket)) {
      MacroQuery q = parseQuery();
      return MacroFormula::dual(std::move(q), parseUnary());
    }
    if (head.text == "dep" && at(Tok::LBracket)) {
      MacroQuery q = parseQuery();
      if (groupAhead()) return MacroFormula::depAll(std::move(q), parseGroup());
      return MacroFormula::depAtom(std::move(q), take(Tok::Ident, "player name").text);
    }

    if (!at(Tok::LParen)) fail("expected '(' after '" + head.text + "'");
    shift();

    // A brace (or complement) directly after '(' marks a defined operator;
    // otherwise this is a predicate atom. Lets predicates reuse those names.
    if (groupAhead()) {
      if (head.text == "pa") {
        MacroGroup g = parseGroup();
        take(Tok::RParen, "')'");
        return MacroFormula::pa(std::move(g));
      }
      if (head.text == "paY") {
        MacroGroup fixed = parseGroup();
        take(Tok::Semi, "';'");
        MacroGroup g = parseGroup();
        take(Tok::RParen, "')'");
        return MacroFormula::paY(std::move(fixed), std::move(g));
      }
      if (head.text == "na" || head.text == "ca1" || head.text == "ca2" || head.text == "ca") {
        MacroGroup g = parseGroup();
        take(Tok::RParen, "')'");
        if (head.text == "na") return MacroFormula::na(std::move(g));
        if (head.text == "ca1") return MacroFormula::ca1(std::move(g));
        if (head.text == "ca2") return MacroFormula::ca2(std::move(g));
        return MacroFormula::ca(std::move(g));
      }
      if (head.text == "D") {
        MacroGroup g = parseGroup();
        take(Tok::Semi, "';'");
        std::string var = take(Tok::Ident, "player name").text;
        take(Tok::RParen, "')'");
        return MacroFormula::d(std::move(g), std::move(var));
      }
      if (head.text == "DD") {
        MacroGroup g = parseGroup();
        take(Tok::RParen, "')'");
        return MacroFormula::dd(std::move(g), parseUnary());
      }
      fail("'" + head.text + "' is not a defined operator");
    }

    // Predicate atom, possibly 0-ary.
    std::vector<std::string> args;
    if (!at(Tok::RParen)) {
      args.push_back(take(Tok::Ident, "player name").text);
      while (at(Tok::Comma)) {
        shift();
        args.push_back(take(Tok::Ident, "player name").text);
      }
    }
    take(Tok::RParen, "')'");
    return MacroFormula::atom(head.text, std::move(args));
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

MacroFormula parseFormula(const std::string& text) { return Parser(text).parseAll(); }

MacroGroup parseGroupLiteral(const std::string& text) {
  // Bare "E,A" is accepted as CLI shorthand for "{E,A}".
  std::string trimmed;
  std::size_t begin = text.find_first_not_of(" \t\n");
  std::size_t end = text.find_last_not_of(" \t\n");
  if (begin == std::string::npos) throw ParseError("empty group", 1, 1);
  trimmed = text.substr(begin, end - begin + 1);
  if (trimmed.front() != '{' && trimmed.front() != '-') trimmed = "{" + trimmed + "}";
  return Parser(trimmed).parseGroupOnly();
}

MacroQuery parseQueryLiteral(const std::string& text) { return Parser(text).parseQueryOnly(); }

}  // namespace lpfd
