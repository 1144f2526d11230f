#include "csc/core/formula.hpp"

#include <algorithm>

#include "csc/core/substitution.hpp"

namespace csc {

Formula Formula::make(FormulaKind kind, std::optional<Literal> atom, std::vector<Formula> children,
                      std::optional<Term> bound)
{
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->atom = std::move(atom);
  node->children = std::move(children);
  node->bound = std::move(bound);
  return Formula(std::move(node));
}

Formula Formula::truth()
{
  static const Formula t = make(FormulaKind::True, std::nullopt, {}, std::nullopt);
  return t;
}

Formula Formula::falsity()
{
  static const Formula f = make(FormulaKind::False, std::nullopt, {}, std::nullopt);
  return f;
}

Formula Formula::atom(const Literal& lit)
{
  Literal positive = lit.positive() ? lit : lit.negated();
  return make(FormulaKind::Atom, positive, {}, std::nullopt);
}

Formula Formula::literal(const Literal& lit)
{
  Formula a = atom(lit);
  return lit.positive() ? a : negation(a);
}

Formula Formula::negation(Formula f)
{
  return make(FormulaKind::Not, std::nullopt, {std::move(f)}, std::nullopt);
}

Formula Formula::conjunction(std::vector<Formula> children)
{
  if (children.empty()) return truth();
  if (children.size() == 1) return children.front();
  return make(FormulaKind::And, std::nullopt, std::move(children), std::nullopt);
}

Formula Formula::disjunction(std::vector<Formula> children)
{
  if (children.empty()) return falsity();
  if (children.size() == 1) return children.front();
  return make(FormulaKind::Or, std::nullopt, std::move(children), std::nullopt);
}

Formula Formula::implication(Formula premise, Formula conclusion)
{
  return make(FormulaKind::Implies, std::nullopt, {std::move(premise), std::move(conclusion)}, std::nullopt);
}

Formula Formula::equivalence(Formula lhs, Formula rhs)
{
  return make(FormulaKind::Iff, std::nullopt, {std::move(lhs), std::move(rhs)}, std::nullopt);
}

Formula Formula::forall(Term var, Formula body)
{
  if (!var.is_variable()) throw SortError("quantifier must bind a variable");
  return make(FormulaKind::Forall, std::nullopt, {std::move(body)}, std::move(var));
}

Formula Formula::exists(Term var, Formula body)
{
  if (!var.is_variable()) throw SortError("quantifier must bind a variable");
  return make(FormulaKind::Exists, std::nullopt, {std::move(body)}, std::move(var));
}

Formula Formula::forall(const std::vector<Term>& vars, Formula body)
{
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

Formula Formula::exists(const std::vector<Term>& vars, Formula body)
{
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

bool Formula::operator==(const Formula& other) const
{
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (node_->atom != other.node_->atom) return false;
  if (node_->bound.has_value() != other.node_->bound.has_value()) return false;
  if (node_->bound && *node_->bound != *other.node_->bound) return false;
  return children() == other.children();
}

namespace {

void free_vars(const Formula& f, std::vector<Term>& bound, std::vector<Term>& out)
{
  switch (f.kind()) {
  case FormulaKind::True:
  case FormulaKind::False: return;
  case FormulaKind::Atom: {
    std::vector<Term> vs;
    collect_variables(f.atom().lhs(), vs);
    collect_variables(f.atom().rhs(), vs);
    for (const Term& v : vs) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
          std::find(out.begin(), out.end(), v) == out.end()) {
        out.push_back(v);
      }
    }
    return;
  }
  case FormulaKind::Forall:
  case FormulaKind::Exists:
    bound.push_back(f.bound());
    free_vars(f.child(0), bound, out);
    bound.pop_back();
    return;
  default:
    for (const Formula& c : f.children()) free_vars(c, bound, out);
  }
}

VarId max_var(const Formula& f)
{
  VarId m = 0;
  if (f.kind() == FormulaKind::Atom) {
    std::vector<Term> vs;
    collect_variables(f.atom().lhs(), vs);
    collect_variables(f.atom().rhs(), vs);
    for (const Term& v : vs) m = std::max(m, v.id() + 1);
  }
  if (f.is_quantifier()) m = std::max(m, f.bound().id() + 1);
  for (const Formula& c : f.children()) m = std::max(m, max_var(c));
  return m;
}

} // namespace

std::vector<Term> free_variables(const Formula& f)
{
  std::vector<Term> bound;
  std::vector<Term> out;
  free_vars(f, bound, out);
  return out;
}

VarId variable_bound(const Formula& f)
{
  return max_var(f);
}

bool has_parameter(const Formula& f)
{
  if (f.kind() == FormulaKind::Atom) return f.atom().has_parameter();
  return std::any_of(f.children().begin(), f.children().end(), [](const Formula& c) { return has_parameter(c); });
}

bool is_quantifier_free(const Formula& f)
{
  if (f.is_quantifier()) return false;
  return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return is_quantifier_free(c); });
}

Formula clause_formula(const Clause& c)
{
  std::vector<Formula> lits;
  for (const Literal& l : c.literals()) lits.push_back(Formula::literal(l));
  return Formula::forall(c.variables(), Formula::disjunction(std::move(lits)));
}

std::vector<Formula> disjuncts(const Formula& f)
{
  if (f.kind() == FormulaKind::Or) return f.children();
  return {f};
}

bool is_sigma1(const Formula& f)
{
  switch (f.kind()) {
  case FormulaKind::True:
  case FormulaKind::False:
  case FormulaKind::Atom: return true;
  case FormulaKind::Not: return f.child(0).kind() == FormulaKind::Atom;
  case FormulaKind::And:
  case FormulaKind::Or:
  case FormulaKind::Exists:
    return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return is_sigma1(c); });
  default: return false;
  }
}

namespace {

Formula strip_existentials(const Formula& f, VarId& next, std::vector<Term>& prefix)
{
  switch (f.kind()) {
  case FormulaKind::Exists: {
    Term fresh = Term::variable(next++, f.bound().sort());
    prefix.push_back(fresh);
    Substitution rename;
    rename.bind(f.bound().id(), fresh);
    return strip_existentials(rename.apply(f.child(0)), next, prefix);
  }
  case FormulaKind::And:
  case FormulaKind::Or: {
    std::vector<Formula> kids;
    for (const Formula& c : f.children()) kids.push_back(strip_existentials(c, next, prefix));
    return f.kind() == FormulaKind::And ? Formula::conjunction(std::move(kids))
                                        : Formula::disjunction(std::move(kids));
  }
  default: return f;
  }
}

} // namespace

Formula prenex_existential(const Formula& f)
{
  if (!is_sigma1(f)) throw std::invalid_argument("prenex_existential expects an existential-positive formula");
  VarId next = variable_bound(f);
  std::vector<Term> prefix;
  Formula matrix = strip_existentials(f, next, prefix);
  return Formula::exists(prefix, matrix);
}

} // namespace csc
