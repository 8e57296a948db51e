#include "term.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace relcat {

TermPtr Term::mk(Kind k, std::vector<TermPtr> args, std::vector<Sort> sorts) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->args = std::move(args);
  t->sorts = std::move(sorts);
  return t;
}

TermPtr Term::mkName(std::string n) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Name;
  t->name = std::move(n);
  return t;
}

namespace {

using Kind = Term::Kind;

struct FnSig {
  Kind kind;
  int termArgs;   // -1 when the name is a sort-bracket constant
  int sortArgs;
};

const std::map<std::string, FnSig>& functionTable() {
  static const std::map<std::string, FnSig> table = {
      {"conv", {Kind::Conv, 1, 0}},   {"star", {Kind::Star, 1, 0}},
      {"dom", {Kind::Dom, 1, 0}},     {"lres", {Kind::LRes, 2, 0}},
      {"rres", {Kind::RRes, 2, 0}},   {"syq", {Kind::Syq, 2, 0}},
      {"ubd", {Kind::Ubd, 2, 0}},     {"lbd", {Kind::Lbd, 2, 0}},
      {"lub", {Kind::Lub, 2, 0}},     {"glb", {Kind::Glb, 2, 0}},
      {"fork", {Kind::Fork, 2, 0}},   {"pair", {Kind::Pair, 2, 0}},
      {"tensor", {Kind::Tensor, 2, 0}},
      {"I", {Kind::Id, -1, 1}},       {"bot", {Kind::Bot, -1, 2}},
      {"top", {Kind::Top, -1, 2}},    {"pi", {Kind::Pi, -1, 2}},
      {"rho", {Kind::Rho, -1, 2}},    {"eps", {Kind::Eps, -1, 1}},
      {"neps", {Kind::NeEps, -1, 1}}, {"assoc", {Kind::Assoc, -1, 3}},
      {"swap", {Kind::Swap, -1, 2}},
  };
  return table;
}

struct Token {
  enum class T { Ident, Number, Str, Sym, End } type = T::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& src, int line = 1) : src_(src), line_(line) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  bool atEnd() const { return tok_.type == Token::T::End; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::SyntaxError,
         msg + " at line " + std::to_string(tok_.line) + ", column " + std::to_string(tok_.col));
  }

  bool accept(const std::string& sym) {
    if (tok_.type == Token::T::Sym && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }

  void expect(const std::string& sym) {
    if (!accept(sym)) error("expected '" + sym + "', found '" + tok_.text + "'");
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') { ++line_; col_ = 0; ++pos_; ++col_; continue; }
      if (c == ' ' || c == '\t' || c == '\r') { ++pos_; ++col_; continue; }
      if (c == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) { tok_.type = Token::T::End; tok_.text = "<end>"; return; }

    char c = src_[pos_];
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t s = pos_;
      while (pos_ < src_.size() &&
             (isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '\''))
        ++pos_, ++col_;
      tok_.type = Token::T::Ident;
      tok_.text = src_.substr(s, pos_ - s);
      return;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t s = pos_;
      while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++col_;
      tok_.type = Token::T::Number;
      tok_.text = src_.substr(s, pos_ - s);
      return;
    }
    if (c == '"') {
      size_t s = ++pos_;
      ++col_;
      while (pos_ < src_.size() && src_[pos_] != '"') ++pos_, ++col_;
      if (pos_ >= src_.size()) fail(Errc::SyntaxError, "unterminated string literal");
      tok_.type = Token::T::Str;
      tok_.text = src_.substr(s, pos_ - s);
      ++pos_;
      ++col_;
      return;
    }
    // multi-char symbols first
    for (const char* sym : {"->", "<="}) {
      if (src_.compare(pos_, 2, sym) == 0) {
        tok_.type = Token::T::Sym;
        tok_.text = sym;
        pos_ += 2;
        col_ += 2;
        return;
      }
    }
    static const std::string singles = ";&|=()[],:*";
    if (singles.find(c) != std::string::npos) {
      tok_.type = Token::T::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    fail(Errc::SyntaxError, std::string("unexpected character '") + c + "' at line " +
                                std::to_string(line_) + ", column " + std::to_string(col_));
  }

  const std::string& src_;
  size_t pos_ = 0;
  Token tok_;
  int line_ = 1, col_ = 1;
};

Sort parseSortExpr(Lexer& lx);

Sort parseSortAtom(Lexer& lx) {
  if (lx.accept("(")) {
    Sort s = parseSortExpr(lx);
    lx.expect(")");
    return s;
  }
  Token t = lx.peek();
  if (t.type == Token::T::Number) {
    lx.next();
    if (t.text != "1") lx.error("the only numeric sort is the unit '1'");
    return Sort::unit();
  }
  if (t.type != Token::T::Ident) lx.error("expected a sort");
  lx.next();
  if ((t.text == "P" || t.text == "N") && lx.accept("(")) {
    Sort inner = parseSortExpr(lx);
    lx.expect(")");
    return t.text == "P" ? Sort::pow(inner) : Sort::nepow(inner);
  }
  return Sort::base(t.text);
}

Sort parseSortExpr(Lexer& lx) {
  Sort s = parseSortAtom(lx);
  if (lx.accept("*")) {
    Sort r = parseSortAtom(lx);
    return Sort::prod(std::move(s), std::move(r));
  }
  return s;
}

TermPtr parseImpl(Lexer& lx);

TermPtr parseAtom(Lexer& lx) {
  if (lx.accept("(")) {
    TermPtr t = parseImpl(lx);
    lx.expect(")");
    return t;
  }
  Token t = lx.peek();
  if (t.type != Token::T::Ident) lx.error("expected a term, found '" + t.text + "'");
  lx.next();
  auto it = functionTable().find(t.text);
  if (it == functionTable().end()) return Term::mkName(t.text);

  const FnSig& sig = it->second;
  if (sig.termArgs >= 0) {
    lx.expect("(");
    std::vector<TermPtr> args;
    args.push_back(parseImpl(lx));
    while (lx.accept(",")) args.push_back(parseImpl(lx));
    lx.expect(")");
    if (static_cast<int>(args.size()) != sig.termArgs)
      lx.error("'" + t.text + "' takes " + std::to_string(sig.termArgs) + " arguments");
    return Term::mk(sig.kind, std::move(args));
  }
  lx.expect("[");
  std::vector<Sort> sorts;
  sorts.push_back(parseSortExpr(lx));
  while (lx.accept(",")) sorts.push_back(parseSortExpr(lx));
  lx.expect("]");
  if (static_cast<int>(sorts.size()) != sig.sortArgs)
    lx.error("'" + t.text + "' takes " + std::to_string(sig.sortArgs) + " sort arguments");
  return Term::mk(sig.kind, {}, std::move(sorts));
}

TermPtr parseComp(Lexer& lx) {
  TermPtr t = parseAtom(lx);
  while (lx.accept(";")) t = Term::mk(Kind::Comp, {t, parseAtom(lx)});
  return t;
}

TermPtr parseMeet(Lexer& lx) {
  TermPtr t = parseComp(lx);
  while (lx.accept("&")) t = Term::mk(Kind::Meet, {t, parseComp(lx)});
  return t;
}

TermPtr parseJoin(Lexer& lx) {
  TermPtr t = parseMeet(lx);
  while (lx.accept("|")) t = Term::mk(Kind::Join, {t, parseMeet(lx)});
  return t;
}

TermPtr parseImpl(Lexer& lx) {
  TermPtr t = parseJoin(lx);
  if (lx.accept("->")) return Term::mk(Kind::Impl, {t, parseImpl(lx)});
  return t;
}

int level(Kind k) {
  switch (k) {
    case Kind::Impl: return 1;
    case Kind::Join: return 2;
    case Kind::Meet: return 3;
    case Kind::Comp: return 4;
    default: return 5;
  }
}

const char* infixSym(Kind k) {
  switch (k) {
    case Kind::Impl: return "->";
    case Kind::Join: return "|";
    case Kind::Meet: return "&";
    case Kind::Comp: return ";";
    default: return nullptr;
  }
}

void printInto(const TermPtr& t, int parent, std::string& out) {
  int lv = level(t->kind);
  if (const char* sym = infixSym(t->kind)) {
    bool paren = lv < parent;
    if (paren) out += '(';
    bool rightAssoc = t->kind == Kind::Impl;
    printInto(t->args[0], rightAssoc ? lv + 1 : lv, out);
    out += ' ';
    out += sym;
    out += ' ';
    printInto(t->args[1], rightAssoc ? lv : lv + 1, out);
    if (paren) out += ')';
    return;
  }
  if (t->kind == Kind::Name) {
    out += t->name;
    return;
  }
  std::string fname;
  for (const auto& [name, sig] : functionTable())
    if (sig.kind == t->kind) fname = name;
  out += fname;
  if (!t->args.empty()) {
    out += '(';
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ", ";
      printInto(t->args[i], 0, out);
    }
    out += ')';
  } else {
    out += '[';
    for (size_t i = 0; i < t->sorts.size(); ++i) {
      if (i) out += ',';
      out += t->sorts[i].str();
    }
    out += ']';
  }
}

Hyp parseHyp(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.type == Token::T::Ident && isPredicateName(t.text)) {
    // lookahead for '(' is implicit: predicate names are not term functions,
    // so a predicate identifier is only valid as a call
    Hyp h;
    h.kind = Hyp::Kind::Pred;
    h.pred = lx.next().text;
    lx.expect("(");
    h.args.push_back(parseImpl(lx));
    while (lx.accept(",")) h.args.push_back(parseImpl(lx));
    lx.expect(")");
    return h;
  }
  Hyp h;
  h.lhs = parseImpl(lx);
  if (lx.accept("<=")) h.kind = Hyp::Kind::Incl;
  else if (lx.accept("=")) h.kind = Hyp::Kind::Eq;
  else lx.error("expected '<=' or '=' in hypothesis");
  h.rhs = parseImpl(lx);
  return h;
}

}  // namespace

TermPtr parseTerm(const std::string& text) {
  Lexer lx(text);
  TermPtr t = parseImpl(lx);
  if (!lx.atEnd()) lx.error("trailing input after term");
  return t;
}

std::string printTerm(const TermPtr& t) {
  std::string out;
  printInto(t, 0, out);
  return out;
}

bool termEq(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size() ||
      a->sorts.size() != b->sorts.size())
    return false;
  for (size_t i = 0; i < a->sorts.size(); ++i)
    if (a->sorts[i] != b->sorts[i]) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!termEq(a->args[i], b->args[i])) return false;
  return true;
}

Sort parseSort(const std::string& text) {
  Lexer lx(text);
  Sort s = parseSortExpr(lx);
  if (!lx.atEnd()) lx.error("trailing input after sort");
  return s;
}

const std::vector<std::string>& predicateNames() {
  static const std::vector<std::string> names = {
      "univalent", "total", "injective", "surjective", "map", "bijection", "point",
      "transitive", "dense", "asymmetric", "strict_order", "linear_strict_order",
      "reflexive", "antisymmetric", "ordering", "partial_identity", "regular",
      "complemented", "crisp", "symmetric",
  };
  return names;
}

bool isPredicateName(const std::string& name) {
  const auto& v = predicateNames();
  return std::find(v.begin(), v.end(), name) != v.end();
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void printHyp(const Hyp& h, std::string& out) {
  if (h.kind == Hyp::Kind::Pred) {
    out += h.pred;
    out += '(';
    for (size_t i = 0; i < h.args.size(); ++i) {
      if (i) out += ", ";
      out += printTerm(h.args[i]);
    }
    out += ')';
  } else {
    out += printTerm(h.lhs);
    out += h.kind == Hyp::Kind::Incl ? " <= " : " = ";
    out += printTerm(h.rhs);
  }
}

}  // namespace

std::string printLaw(const Law& law) {
  std::string out = "law " + law.id + "\n";
  if (!law.anchor.empty()) out += "anchor " + quote(law.anchor) + "\n";
  if (!law.notes.empty()) out += "note " + quote(law.notes) + "\n";
  if (law.expectFail) out += "expect-fail\n";
  if (law.crispOnly) out += "crisp-only\n";
  if (!law.fixtureModel.empty()) out += "fixture " + quote(law.fixtureModel) + "\n";
  for (const auto& g : law.givens)
    out += "given " + g.name + " : " + g.src.str() + " -> " + g.tgt.str() + "\n";
  for (const auto& v : law.vars)
    out += "var " + v.name + " : " + v.src.str() + " -> " + v.tgt.str() + "\n";
  for (const auto& [name, t] : law.lets) out += "let " + name + " = " + printTerm(t) + "\n";
  for (const auto& h : law.hyps) {
    out += "assume ";
    printHyp(h, out);
    out += "\n";
  }
  for (const auto& c : law.clauses) {
    out += "conclude ";
    if (!c.guards.empty()) {
      out += "if ";
      for (size_t i = 0; i < c.guards.size(); ++i) {
        if (i) out += ", ";
        printHyp(c.guards[i], out);
      }
      out += " : ";
    }
    out += printTerm(c.lhs);
    out += c.kind == Clause::Kind::Eq ? " = " : " <= ";
    out += printTerm(c.rhs);
    if (c.kind == Clause::Kind::IffIncl) {
      out += " iff " + printTerm(c.lhs2) + " <= " + printTerm(c.rhs2);
    }
    out += "\n";
  }
  return out;
}

std::vector<Law> parseLaws(const std::string& text) {
  std::vector<Law> laws;
  Law* cur = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    // strip comments and whitespace
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    size_t sp = line.find_first_of(" \t");
    std::string head = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    Lexer lx(rest, lineNo);

    auto need = [&]() -> Law& {
      if (!cur) fail(Errc::SyntaxError, "directive before 'law' at line " + std::to_string(lineNo));
      return *cur;
    };

    if (head == "law") {
      Token t = lx.next();
      if (t.type != Token::T::Ident) lx.error("expected a law identifier");
      laws.push_back(Law{});
      cur = &laws.back();
      cur->id = t.text;
    } else if (head == "anchor") {
      Token t = lx.next();
      if (t.type != Token::T::Str) lx.error("anchor takes a quoted string");
      need().anchor = t.text;
    } else if (head == "note") {
      Token t = lx.next();
      if (t.type != Token::T::Str) lx.error("note takes a quoted string");
      need().notes = t.text;
    } else if (head == "expect-fail") {
      need().expectFail = true;
    } else if (head == "crisp-only") {
      need().crispOnly = true;
    } else if (head == "fixture") {
      Token t = lx.next();
      if (t.type != Token::T::Str) lx.error("fixture takes a quoted string");
      need().fixtureModel = t.text;
    } else if (head == "var" || head == "given") {
      Token t = lx.next();
      if (t.type != Token::T::Ident) lx.error("expected a name");
      VarDecl d;
      d.name = t.text;
      lx.expect(":");
      d.src = parseSortExpr(lx);
      lx.expect("->");
      d.tgt = parseSortExpr(lx);
      (head == "var" ? need().vars : need().givens).push_back(std::move(d));
    } else if (head == "let") {
      Token t = lx.next();
      if (t.type != Token::T::Ident) lx.error("expected a name");
      lx.expect("=");
      need().lets.emplace_back(t.text, parseImpl(lx));
    } else if (head == "assume") {
      need().hyps.push_back(parseHyp(lx));
    } else if (head == "conclude") {
      Clause c;
      if (lx.peek().type == Token::T::Ident && lx.peek().text == "if") {
        lx.next();
        c.guards.push_back(parseHyp(lx));
        while (lx.accept(",")) c.guards.push_back(parseHyp(lx));
        lx.expect(":");
      }
      c.lhs = parseImpl(lx);
      if (lx.accept("<=")) c.kind = Clause::Kind::Incl;
      else if (lx.accept("=")) c.kind = Clause::Kind::Eq;
      else lx.error("expected '<=' or '=' in conclusion");
      c.rhs = parseImpl(lx);
      if (lx.peek().type == Token::T::Ident && lx.peek().text == "iff") {
        lx.next();
        if (c.kind != Clause::Kind::Incl) lx.error("'iff' links two inclusions");
        c.kind = Clause::Kind::IffIncl;
        c.lhs2 = parseImpl(lx);
        lx.expect("<=");
        c.rhs2 = parseImpl(lx);
      }
      need().clauses.push_back(std::move(c));
    } else {
      fail(Errc::SyntaxError,
           "unknown directive '" + head + "' at line " + std::to_string(lineNo));
    }
    if (!lx.atEnd() && head != "law") lx.error("trailing input");
  }
  for (const Law& l : laws)
    if (l.clauses.empty())
      fail(Errc::SyntaxError, "law '" + l.id + "' has no conclusion");
  return laws;
}

Law parseLaw(const std::string& text) {
  auto laws = parseLaws(text);
  if (laws.size() != 1) fail(Errc::SyntaxError, "expected exactly one law block");
  return std::move(laws.front());
}

}  // namespace relcat
