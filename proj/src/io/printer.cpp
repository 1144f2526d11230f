#include <sstream>

#include "csc/io/problem.hpp"

namespace csc::io {

namespace {

void print_term(std::ostream& out, const Term& t, const Signature& sig)
{
  switch (t.kind()) {
  case TermKind::Variable: out << 'X' << t.id(); return;
  case TermKind::Parameter: out << "eta"; return;
  case TermKind::Top: out << "$true"; return;
  case TermKind::Function:
  case TermKind::Predicate: {
    out << (t.kind() == TermKind::Function ? sig.function(t.id()).name : sig.predicate(t.id()).name);
    if (t.arity() == 0) return;
    out << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out << ", ";
      print_term(out, t.arg(i), sig);
    }
    out << ')';
    return;
  }
  }
}

void print_literal(std::ostream& out, const Literal& l, const Signature& sig)
{
  if (l.is_equation()) {
    print_term(out, l.lhs(), sig);
    out << (l.positive() ? " = " : " != ");
    print_term(out, l.rhs(), sig);
    return;
  }
  if (!l.positive()) out << '~';
  print_term(out, l.lhs(), sig);
}

void print_bindings(std::ostream& out, const std::vector<Term>& vars, const Signature& sig)
{
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out << ", ";
    out << 'X' << vars[i].id() << ':' << sig.sort_name(vars[i].sort());
  }
}

// Binding strength; quantifiers extend to the right and are parenthesised as operands.
int level(const csc::Formula& f)
{
  switch (f.kind()) {
  case FormulaKind::Iff: return 1;
  case FormulaKind::Implies: return 2;
  case FormulaKind::Or: return 3;
  case FormulaKind::And: return 4;
  case FormulaKind::Forall:
  case FormulaKind::Exists: return 0;
  default: return 5;
  }
}

void print_formula(std::ostream& out, const csc::Formula& f, const Signature& sig);

void print_operand(std::ostream& out, const csc::Formula& f, const Signature& sig, bool parens)
{
  if (parens) out << '(';
  print_formula(out, f, sig);
  if (parens) out << ')';
}

void print_formula(std::ostream& out, const csc::Formula& f, const Signature& sig)
{
  switch (f.kind()) {
  case FormulaKind::True: out << "$true"; return;
  case FormulaKind::False: out << "$false"; return;
  case FormulaKind::Atom: print_literal(out, f.atom(), sig); return;
  case FormulaKind::Not: {
    const csc::Formula& c = f.child(0);
    if (c.kind() == FormulaKind::Atom) {
      print_literal(out, c.atom().negated(), sig);
      return;
    }
    out << '~';
    print_operand(out, c, sig, level(c) < 5 || c.kind() == FormulaKind::Not);
    return;
  }
  case FormulaKind::And:
  case FormulaKind::Or: {
    const char* op = f.kind() == FormulaKind::And ? " & " : " | ";
    for (std::size_t i = 0; i < f.children().size(); ++i) {
      if (i) out << op;
      const csc::Formula& c = f.child(i);
      print_operand(out, c, sig, level(c) <= level(f));
    }
    return;
  }
  case FormulaKind::Implies:
    print_operand(out, f.child(0), sig, level(f.child(0)) <= 2);
    out << " -> ";
    print_operand(out, f.child(1), sig, level(f.child(1)) < 2);
    return;
  case FormulaKind::Iff:
    print_operand(out, f.child(0), sig, level(f.child(0)) <= 1);
    out << " <-> ";
    print_operand(out, f.child(1), sig, level(f.child(1)) <= 1);
    return;
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    std::vector<Term> vars;
    const csc::Formula* body = &f;
    while (body->kind() == f.kind()) {
      vars.push_back(body->bound());
      body = &body->child(0);
    }
    out << (f.kind() == FormulaKind::Forall ? "forall " : "exists ");
    print_bindings(out, vars, sig);
    out << ". ";
    print_formula(out, *body, sig);
    return;
  }
  }
}

} // namespace

std::string to_string(const Term& t, const Signature& sig)
{
  std::ostringstream out;
  print_term(out, t, sig);
  return out.str();
}

std::string to_string(const Literal& l, const Signature& sig)
{
  std::ostringstream out;
  print_literal(out, l, sig);
  return out.str();
}

std::string to_string(const Clause& c, const Signature& sig)
{
  std::ostringstream out;
  std::vector<Term> vars = c.variables();
  std::sort(vars.begin(), vars.end(), [](const Term& a, const Term& b) { return a.id() < b.id(); });
  if (!vars.empty()) {
    out << "forall ";
    print_bindings(out, vars, sig);
    out << ' ';
  }
  if (c.empty()) {
    out << "$false";
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << " | ";
    print_literal(out, c[i], sig);
  }
  return out.str();
}

std::string to_string(const csc::Formula& f, const Signature& sig)
{
  std::ostringstream out;
  print_formula(out, f, sig);
  return out.str();
}

std::string to_string(const ClauseSet& s, const Signature& sig)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? "; " : " ") << to_string(s[i], sig);
  }
  out << (s.empty() ? "}" : " }");
  return out.str();
}

std::string print_signature(const Signature& sig)
{
  std::ostringstream out;
  for (SortId s = 1; s < sig.sort_count(); ++s) out << "sort " << sig.sort_name(s) << ".\n";
  for (FuncId f = kSucc + 1; f < sig.function_count(); ++f) {
    const FunctionDecl& d = sig.function(f);
    out << "func " << d.name << " : ";
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      out << (i ? ", " : "") << sig.sort_name(d.args[i]);
    }
    out << (d.args.empty() ? "-> " : " -> ") << sig.sort_name(d.result) << ".\n";
  }
  for (PredId p = 0; p < sig.predicate_count(); ++p) {
    const PredicateDecl& d = sig.predicate(p);
    out << "pred " << d.name;
    if (!d.args.empty()) {
      out << " : ";
      for (std::size_t i = 0; i < d.args.size(); ++i) out << (i ? ", " : "") << sig.sort_name(d.args[i]);
    }
    out << ".\n";
  }
  return out.str();
}

std::string print_clause_item(const Clause& c, const Signature& sig, ItemKind kind)
{
  return std::string(kind == ItemKind::NClause ? "nclause " : "clause ") + to_string(c, sig) + ".";
}

std::string print_problem(const ProblemFile& file)
{
  std::ostringstream out;
  if (file.name) out << "name \"" << *file.name << "\".\n";
  if (file.expect) out << "expect " << *file.expect << ".\n";
  out << print_signature(file.signature);
  for (const ProblemItem& item : file.items) {
    if (item.kind == ItemKind::Formula) {
      out << "formula " << to_string(*item.formula, file.signature) << ".\n";
    } else {
      out << print_clause_item(item.clause, file.signature, item.kind) << '\n';
    }
  }
  return out.str();
}

std::string print_clause_set(const ClauseSet& clauses, const Signature& sig, const std::optional<std::string>& name)
{
  ProblemFile file;
  file.signature = sig;
  file.name = name;
  for (const Clause& c : clauses) file.items.push_back(ProblemItem{ItemKind::Clause, c, std::nullopt});
  return print_problem(file);
}

} // namespace csc::io
