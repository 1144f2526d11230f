#include <cctype>
#include <charconv>
#include <sstream>

#include "csc/io/problem.hpp"

namespace csc::io {

namespace {

const char* kind_name(ParseErrorKind kind)
{
  switch (kind) {
  case ParseErrorKind::Lexical: return "lexical error";
  case ParseErrorKind::Syntax: return "syntax error";
  case ParseErrorKind::Sort: return "sort error";
  }
  return "error";
}

std::string positioned(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
{
  std::ostringstream out;
  out << line << ':' << column << ": " << kind_name(kind) << ": " << message;
  return out.str();
}

} // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
  : std::runtime_error(positioned(kind, line, column, message)), kind_(kind), line_(line), column_(column),
    detail_(message)
{
}

ClauseSet ProblemFile::clauses() const
{
  ClauseSet out;
  for (const ProblemItem& item : items) {
    if (item.kind != ItemKind::Formula) out.push_back(item.clause);
  }
  return out;
}

std::vector<csc::Formula> ProblemFile::formulas() const
{
  std::vector<csc::Formula> out;
  for (const ProblemItem& item : items) {
    if (item.kind == ItemKind::Formula) out.push_back(*item.formula);
  }
  return out;
}

bool ProblemFile::has_nclauses() const
{
  for (const ProblemItem& item : items) {
    if (item.kind == ItemKind::NClause) return true;
  }
  return false;
}

namespace {

enum class Tok
{
  Ident,
  Number,
  String,
  Punct,
  End,
};

struct Token
{
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text)
{
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  static const char* const puncts[] = {"<->", "!=", "=>", "->", "(", ")", ",", ".", ":", "|", "&", "~", "=", "[", "]"};
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t start_line = line;
    std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      if (c == '$' && j == i + 1) throw ParseError(ParseErrorKind::Lexical, line, col, "stray '$'");
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), start_line, start_col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), start_line, start_col});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError(ParseErrorKind::Lexical, line, col, "unterminated string");
      out.push_back({Tok::String, std::string(text.substr(i + 1, j - i - 1)), start_line, start_col});
      advance(j + 1 - i);
      continue;
    }
    bool matched = false;
    for (const char* p : puncts) {
      std::string_view ps(p);
      if (text.substr(i, ps.size()) == ps) {
        out.push_back({Tok::Punct, std::string(ps), start_line, start_col});
        advance(ps.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(ParseErrorKind::Lexical, line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Terms and formulas are first parsed into a resolved tree whose variables
// point into a slot table; sorts of undeclared variables are inferred from
// their argument positions before any Term is built.

struct Slot
{
  std::string name;
  std::optional<SortId> sort;
  std::size_t line;
  std::size_t column;
};

struct RTerm
{
  TermKind kind;
  std::uint32_t id = 0;
  std::vector<RTerm> args;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct RLit
{
  bool positive = true;
  bool equation = false;
  RTerm lhs;
  RTerm rhs;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct RForm
{
  FormulaKind kind;
  std::optional<RLit> lit;
  std::vector<RForm> kids;
  std::uint32_t slot = 0;
};

constexpr unsigned kMaxNumeral = 10000;

class Parser
{
public:
  Parser(std::string_view text, Signature sig) : toks_(tokenize(text)), sig_(std::move(sig)) {}

  ProblemFile problem()
  {
    ProblemFile file;
    while (peek().type != Tok::End) item(file);
    file.signature = sig_;
    return file;
  }

  Term single_term(SortId expected)
  {
    reset_slots();
    RTerm t = term();
    expect_end();
    for (int pass = 0; pass < 2; ++pass) infer(t, expected);
    check_slots();
    return build(t);
  }

  csc::Formula single_formula()
  {
    reset_slots();
    RForm f = formula();
    expect_end();
    return finish_formula(f);
  }

private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool is_punct(const char* p, std::size_t k = 0) const
  {
    return peek(k).type == Tok::Punct && peek(k).text == p;
  }

  bool accept(const char* p)
  {
    if (!is_punct(p)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& message) const
  {
    throw ParseError(kind, at.line, at.column, message);
  }

  [[noreturn]] void unexpected(const std::string& wanted) const
  {
    const Token& t = peek();
    std::string got = t.type == Tok::End ? "end of input" : "'" + t.text + "'";
    fail(ParseErrorKind::Syntax, t, "expected " + wanted + ", found " + got);
  }

  void expect(const char* p)
  {
    if (!accept(p)) unexpected(std::string("'") + p + "'");
  }

  void expect_end()
  {
    accept(".");
    if (peek().type != Tok::End) unexpected("end of input");
  }

  std::string identifier(const std::string& what)
  {
    if (peek().type != Tok::Ident) unexpected(what);
    return next().text;
  }

  SortId sort_ref()
  {
    const Token& t = peek();
    std::string name = identifier("a sort name");
    auto s = sig_.find_sort(name);
    if (!s) fail(ParseErrorKind::Sort, t, "unknown sort '" + name + "'");
    return *s;
  }

  // Declarations and items.

  void item(ProblemFile& file)
  {
    const Token& head = peek();
    std::string kw = identifier("an item keyword");
    try {
      if (kw == "sort") {
        sig_.add_sort(identifier("a sort name"));
      } else if (kw == "func") {
        function_decl();
      } else if (kw == "pred") {
        predicate_decl();
      } else if (kw == "clause" || kw == "nclause") {
        ProblemItem it;
        it.kind = kw == "clause" ? ItemKind::Clause : ItemKind::NClause;
        it.clause = clause_item();
        file.items.push_back(std::move(it));
      } else if (kw == "formula") {
        reset_slots();
        RForm f = formula();
        file.items.push_back(ProblemItem{ItemKind::Formula, Clause(), finish_formula(f)});
      } else if (kw == "name") {
        if (peek().type != Tok::String) unexpected("a quoted name");
        file.name = next().text;
      } else if (kw == "expect") {
        file.expect = identifier("an expected verdict");
      } else {
        fail(ParseErrorKind::Syntax, head, "unknown item keyword '" + kw + "'");
      }
    } catch (const SortError& e) {
      fail(ParseErrorKind::Sort, head, e.what());
    }
    expect(".");
  }

  void function_decl()
  {
    std::string name = identifier("a function name");
    expect(":");
    std::vector<SortId> args;
    SortId result;
    if (accept("->")) {
      result = sort_ref();
    } else {
      args.push_back(sort_ref());
      while (accept(",")) args.push_back(sort_ref());
      if (accept("->")) {
        result = sort_ref();
      } else if (args.size() == 1) {
        result = args.front();
        args.clear();
      } else {
        unexpected("'->'");
      }
    }
    sig_.add_function(name, std::move(args), result);
  }

  void predicate_decl()
  {
    std::string name = identifier("a predicate name");
    std::vector<SortId> args;
    if (accept(":")) {
      args.push_back(sort_ref());
      while (accept(",")) args.push_back(sort_ref());
    }
    sig_.add_predicate(name, std::move(args));
  }

  Clause clause_item()
  {
    reset_slots();
    if (peek().type == Tok::Ident && peek().text == "forall") {
      next();
      bindings();
      accept(".");
    }
    std::vector<RLit> lits;
    if (peek().type == Tok::Ident && peek().text == "$false") {
      next();
    } else {
      lits.push_back(literal());
      if (is_punct("&") || is_punct("=>")) {
        // a1 & ... & an => b1 | ... | bm is the clause ~a1 | ... | ~an | b1 | ... | bm
        for (RLit& l : lits) l.positive = !l.positive;
        while (accept("&")) {
          lits.push_back(literal());
          lits.back().positive = !lits.back().positive;
        }
        expect("=>");
        if (peek().type == Tok::Ident && peek().text == "$false") {
          next();
        } else {
          lits.push_back(literal());
          while (accept("|")) lits.push_back(literal());
        }
      } else {
        while (accept("|")) lits.push_back(literal());
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (RLit& l : lits) changed |= infer(l);
    }
    check_slots();
    std::vector<Literal> built;
    for (const RLit& l : lits) built.push_back(build(l));
    return normalize_variables(Clause(std::move(built)));
  }

  std::vector<std::uint32_t> bindings()
  {
    std::vector<std::uint32_t> out;
    do {
      const Token& at = peek();
      std::string name = identifier("a variable name");
      if (name == "eta") fail(ParseErrorKind::Syntax, at, "'eta' cannot be bound");
      expect(":");
      SortId s = sort_ref();
      slots_.push_back(Slot{name, s, at.line, at.column});
      std::uint32_t id = static_cast<std::uint32_t>(slots_.size() - 1);
      scope_.emplace_back(name, id);
      out.push_back(id);
    } while (accept(","));
    return out;
  }

  // Terms and literals.

  RTerm term()
  {
    const Token& at = peek();
    RTerm t;
    t.line = at.line;
    t.column = at.column;
    if (at.type == Tok::Number) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(at.text.data(), at.text.data() + at.text.size(), value);
      if (ec != std::errc() || value > kMaxNumeral) fail(ParseErrorKind::Lexical, at, "numeral too large");
      next();
      t.kind = TermKind::Function;
      t.id = kZero;
      for (unsigned k = 0; k < value; ++k) {
        RTerm s;
        s.kind = TermKind::Function;
        s.id = kSucc;
        s.line = at.line;
        s.column = at.column;
        s.args.push_back(std::move(t));
        t = std::move(s);
      }
      return t;
    }
    if (at.type != Tok::Ident || at.text.front() == '$') unexpected("a term");
    std::string name = next().text;
    std::vector<RTerm> args;
    bool call = false;
    if (is_punct("(")) {
      call = true;
      const Token open = next();
      args.push_back(term());
      while (accept(",")) args.push_back(term());
      if (!accept(")")) {
        if (peek().type == Tok::End || is_punct(".")) fail(ParseErrorKind::Syntax, open, "unbalanced '('");
        unexpected("',' or ')'");
      }
    }
    if (name == "eta") {
      if (call) fail(ParseErrorKind::Sort, at, "'eta' takes no arguments");
      t.kind = TermKind::Parameter;
      return t;
    }
    if (!call) {
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->first == name) {
          t.kind = TermKind::Variable;
          t.id = it->second;
          return t;
        }
      }
    }
    if (auto f = sig_.find_function(name)) {
      if (sig_.function(*f).args.size() != args.size()) {
        fail(ParseErrorKind::Sort, at,
             "'" + name + "' expects " + std::to_string(sig_.function(*f).args.size()) + " argument(s)");
      }
      t.kind = TermKind::Function;
      t.id = *f;
      t.args = std::move(args);
      return t;
    }
    if (auto p = sig_.find_predicate(name)) {
      if (sig_.predicate(*p).args.size() != args.size()) {
        fail(ParseErrorKind::Sort, at,
             "'" + name + "' expects " + std::to_string(sig_.predicate(*p).args.size()) + " argument(s)");
      }
      t.kind = TermKind::Predicate;
      t.id = *p;
      t.args = std::move(args);
      return t;
    }
    if (call) fail(ParseErrorKind::Sort, at, "undeclared symbol '" + name + "'");
    auto found = free_.find(name);
    if (found == free_.end()) {
      slots_.push_back(Slot{name, std::nullopt, at.line, at.column});
      found = free_.emplace(name, static_cast<std::uint32_t>(slots_.size() - 1)).first;
    }
    t.kind = TermKind::Variable;
    t.id = found->second;
    return t;
  }

  RLit literal()
  {
    const Token& at = peek();
    RLit l;
    l.line = at.line;
    l.column = at.column;
    if (accept("~")) {
      l = literal();
      l.positive = !l.positive;
      return l;
    }
    l.lhs = term();
    if (is_punct("=") || is_punct("!=")) {
      l.positive = next().text == "=";
      l.equation = true;
      l.rhs = term();
      if (l.lhs.kind == TermKind::Predicate || l.rhs.kind == TermKind::Predicate) {
        fail(ParseErrorKind::Sort, at, "predicate application used as a term");
      }
      return l;
    }
    if (l.lhs.kind != TermKind::Predicate) fail(ParseErrorKind::Sort, at, "literal is not a predicate application");
    return l;
  }

  // Formulas.

  RForm formula()
  {
    RForm lhs = implication();
    if (accept("<->")) {
      RForm f{FormulaKind::Iff, std::nullopt, {}, 0};
      f.kids.push_back(std::move(lhs));
      f.kids.push_back(implication());
      if (is_punct("<->")) unexpected("a parenthesised equivalence");
      return f;
    }
    return lhs;
  }

  RForm implication()
  {
    RForm lhs = junction(FormulaKind::Or);
    if (accept("->")) {
      RForm f{FormulaKind::Implies, std::nullopt, {}, 0};
      f.kids.push_back(std::move(lhs));
      f.kids.push_back(implication());
      return f;
    }
    return lhs;
  }

  RForm junction(FormulaKind kind)
  {
    const char* op = kind == FormulaKind::Or ? "|" : "&";
    auto operand = [&] { return kind == FormulaKind::Or ? junction(FormulaKind::And) : unary(); };
    RForm first = operand();
    if (!is_punct(op)) return first;
    RForm f{kind, std::nullopt, {}, 0};
    f.kids.push_back(std::move(first));
    while (accept(op)) f.kids.push_back(operand());
    return f;
  }

  RForm unary()
  {
    const Token& at = peek();
    if (accept("~")) {
      RForm f{FormulaKind::Not, std::nullopt, {}, 0};
      f.kids.push_back(unary());
      return f;
    }
    if (accept("(")) {
      RForm f = formula();
      if (!accept(")")) {
        if (peek().type == Tok::End || is_punct(".")) fail(ParseErrorKind::Syntax, at, "unbalanced '('");
        unexpected("')'");
      }
      return f;
    }
    if (at.type == Tok::Ident && (at.text == "forall" || at.text == "exists")) {
      FormulaKind kind = at.text == "forall" ? FormulaKind::Forall : FormulaKind::Exists;
      next();
      std::size_t depth = scope_.size();
      std::vector<std::uint32_t> vars = bindings();
      expect(".");
      RForm body = formula();
      scope_.resize(depth);
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        RForm q{kind, std::nullopt, {}, *it};
        q.kids.push_back(std::move(body));
        body = std::move(q);
      }
      return body;
    }
    if (at.type == Tok::Ident && at.text == "$true") {
      next();
      return RForm{FormulaKind::True, std::nullopt, {}, 0};
    }
    if (at.type == Tok::Ident && at.text == "$false") {
      next();
      return RForm{FormulaKind::False, std::nullopt, {}, 0};
    }
    RLit l = literal();
    bool positive = l.positive;
    l.positive = true;
    RForm a{FormulaKind::Atom, std::move(l), {}, 0};
    if (positive) return a;
    RForm n{FormulaKind::Not, std::nullopt, {}, 0};
    n.kids.push_back(std::move(a));
    return n;
  }

  csc::Formula finish_formula(RForm& f)
  {
    bool changed = true;
    while (changed) changed = infer(f);
    check_slots();
    return build(f);
  }

  // Sort inference.

  void reset_slots()
  {
    slots_.clear();
    scope_.clear();
    free_.clear();
  }

  void mismatch(const RTerm& t, SortId want, SortId got) const
  {
    throw ParseError(ParseErrorKind::Sort, t.line, t.column,
                     "expected sort " + sig_.sort_name(want) + ", found " + sig_.sort_name(got));
  }

  std::optional<SortId> infer(RTerm& t, std::optional<SortId> expected, bool* changed = nullptr)
  {
    std::optional<SortId> sort;
    switch (t.kind) {
    case TermKind::Parameter: sort = kNatSort; break;
    case TermKind::Variable: {
      Slot& slot = slots_[t.id];
      if (!slot.sort && expected) {
        slot.sort = expected;
        if (changed) *changed = true;
      }
      sort = slot.sort;
      break;
    }
    case TermKind::Function: {
      const FunctionDecl& d = sig_.function(t.id);
      for (std::size_t i = 0; i < t.args.size(); ++i) infer(t.args[i], d.args[i], changed);
      sort = d.result;
      break;
    }
    case TermKind::Predicate:
      throw ParseError(ParseErrorKind::Sort, t.line, t.column, "predicate application used as a term");
    case TermKind::Top: break;
    }
    if (sort && expected && *sort != *expected) mismatch(t, *expected, *sort);
    return sort;
  }

  bool infer(RLit& l)
  {
    bool changed = false;
    if (!l.equation) {
      const PredicateDecl& d = sig_.predicate(l.lhs.id);
      for (std::size_t i = 0; i < l.lhs.args.size(); ++i) infer(l.lhs.args[i], d.args[i], &changed);
      return changed;
    }
    std::optional<SortId> ls = infer(l.lhs, std::nullopt, &changed);
    std::optional<SortId> rs = infer(l.rhs, ls, &changed);
    if (!ls && rs) infer(l.lhs, rs, &changed);
    return changed;
  }

  bool infer(RForm& f)
  {
    bool changed = false;
    if (f.lit) changed |= infer(*f.lit);
    for (RForm& k : f.kids) changed |= infer(k);
    return changed;
  }

  void check_slots() const
  {
    for (const Slot& s : slots_) {
      if (!s.sort) {
        throw ParseError(ParseErrorKind::Sort, s.line, s.column, "cannot determine the sort of variable '" + s.name + "'");
      }
    }
  }

  // Construction.

  Term build(const RTerm& t) const
  {
    switch (t.kind) {
    case TermKind::Parameter: return Term::parameter();
    case TermKind::Variable: return Term::variable(t.id, *slots_[t.id].sort);
    case TermKind::Function: {
      std::vector<Term> args;
      for (const RTerm& a : t.args) args.push_back(build(a));
      return make_application(sig_, t.id, std::move(args));
    }
    case TermKind::Predicate: {
      std::vector<Term> args;
      for (const RTerm& a : t.args) args.push_back(build(a));
      return make_predicate(sig_, t.id, std::move(args));
    }
    case TermKind::Top: break;
    }
    return Term::top();
  }

  Literal build(const RLit& l) const
  {
    if (!l.equation) return Literal::atom(l.positive, build(l.lhs));
    return Literal::equation(l.positive, build(l.lhs), build(l.rhs));
  }

  csc::Formula build(const RForm& f) const
  {
    std::vector<csc::Formula> kids;
    for (const RForm& k : f.kids) kids.push_back(build(k));
    switch (f.kind) {
    case FormulaKind::True: return csc::Formula::truth();
    case FormulaKind::False: return csc::Formula::falsity();
    case FormulaKind::Atom: return csc::Formula::atom(build(*f.lit));
    case FormulaKind::Not: return csc::Formula::negation(kids[0]);
    case FormulaKind::And: return csc::Formula::conjunction(std::move(kids));
    case FormulaKind::Or: return csc::Formula::disjunction(std::move(kids));
    case FormulaKind::Implies: return csc::Formula::implication(kids[0], kids[1]);
    case FormulaKind::Iff: return csc::Formula::equivalence(kids[0], kids[1]);
    case FormulaKind::Forall: return csc::Formula::forall(Term::variable(f.slot, *slots_[f.slot].sort), kids[0]);
    case FormulaKind::Exists: return csc::Formula::exists(Term::variable(f.slot, *slots_[f.slot].sort), kids[0]);
    }
    return csc::Formula::truth();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
  std::vector<Slot> slots_;
  std::vector<std::pair<std::string, std::uint32_t>> scope_;
  std::unordered_map<std::string, std::uint32_t> free_;
};

} // namespace

ProblemFile parse_problem(std::string_view text, const Signature* base)
{
  Parser p(text, base ? *base : Signature());
  return p.problem();
}

Term parse_term(std::string_view text, const Signature& sig, SortId expected)
{
  Parser p(text, sig);
  return p.single_term(expected);
}

csc::Formula parse_formula(std::string_view text, const Signature& sig)
{
  Parser p(text, sig);
  return p.single_formula();
}

} // namespace csc::io
