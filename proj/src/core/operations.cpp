#include "csc/core/operations.hpp"

namespace csc {

namespace {

Substitution parameter_substitution(const Term& t)
{
  if (t.sort() != kNatSort) throw SortError("the parameter can only be replaced by a term of sort nat");
  Substitution sub;
  sub.bind_parameter(t);
  return sub;
}

} // namespace

ClauseSet substitute_parameter(const ClauseSet& s, const Term& t)
{
  return parameter_substitution(t).apply(s);
}

Clause substitute_parameter(const Clause& c, const Term& t)
{
  return parameter_substitution(t).apply(c);
}

Formula substitute_parameter(const Formula& f, const Term& t)
{
  return parameter_substitution(t).apply(f);
}

ClauseSet rename_apart(const ClauseSet& s)
{
  ClauseSet out;
  VarId offset = 0;
  for (const Clause& c : s) {
    Clause n = normalize_variables(c);
    VarId width = n.variable_bound();
    out.push_back(shift_variables(n, offset));
    offset += width;
  }
  return out;
}

Formula clause_set_formula(const ClauseSet& s)
{
  std::vector<Formula> parts;
  for (const Clause& c : rename_apart(s)) parts.push_back(clause_formula(c));
  return Formula::conjunction(std::move(parts));
}

Formula negate_clause_set(const ClauseSet& s)
{
  std::vector<Formula> alternatives;
  for (const Clause& c : rename_apart(s)) {
    std::vector<Formula> conj;
    for (const Literal& l : c.literals()) conj.push_back(Formula::literal(l.negated()));
    alternatives.push_back(Formula::exists(c.variables(), Formula::conjunction(std::move(conj))));
  }
  return Formula::disjunction(std::move(alternatives));
}

Formula abstract_parameter(const Formula& f, const Term& var)
{
  if (!var.is_variable() || var.sort() != kNatSort) throw SortError("parameter abstraction needs a nat variable");
  return parameter_substitution(var).apply(f);
}

} // namespace csc
