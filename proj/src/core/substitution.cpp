#include "csc/core/substitution.hpp"

namespace csc {

void Substitution::bind(VarId var, Term t)
{
  vars_.insert_or_assign(var, std::move(t));
}

void Substitution::bind_parameter(Term t)
{
  if (t.sort() != kNatSort) throw SortError("the parameter can only be replaced by a term of sort nat");
  param_ = std::move(t);
}

std::optional<Term> Substitution::lookup(VarId var) const
{
  auto it = vars_.find(var);
  if (it == vars_.end()) return std::nullopt;
  return it->second;
}

Term Substitution::apply(const Term& t) const
{
  if (empty()) return t;
  return map_term(t, [this](const Term& u) -> std::optional<Term> {
    if (u.is_variable()) {
      auto it = vars_.find(u.id());
      if (it != vars_.end()) return it->second;
      return u;
    }
    if (u.is_parameter()) return param_ ? *param_ : u;
    if (u.is_ground() && !u.has_parameter()) return u;
    if (!param_ && u.is_ground()) return u;
    return std::nullopt;
  });
}

Literal Substitution::apply(const Literal& l) const
{
  return l.with_sides(apply(l.lhs()), apply(l.rhs()));
}

Clause Substitution::apply(const Clause& c) const
{
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c.literals()) out.push_back(apply(l));
  return Clause(std::move(out));
}

ClauseSet Substitution::apply(const ClauseSet& s) const
{
  ClauseSet out;
  out.reserve(s.size());
  for (const Clause& c : s) out.push_back(apply(c));
  return out;
}

Formula Substitution::apply(const Formula& f) const
{
  switch (f.kind()) {
  case FormulaKind::True:
  case FormulaKind::False: return f;
  case FormulaKind::Atom: return Formula::atom(apply(f.atom()));
  case FormulaKind::Not: return Formula::negation(apply(f.child(0)));
  case FormulaKind::And:
  case FormulaKind::Or: {
    std::vector<Formula> kids;
    for (const Formula& c : f.children()) kids.push_back(apply(c));
    return f.kind() == FormulaKind::And ? Formula::conjunction(std::move(kids))
                                        : Formula::disjunction(std::move(kids));
  }
  case FormulaKind::Implies: return Formula::implication(apply(f.child(0)), apply(f.child(1)));
  case FormulaKind::Iff: return Formula::equivalence(apply(f.child(0)), apply(f.child(1)));
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    const Substitution* inner = this;
    Substitution masked;
    if (vars_.count(f.bound().id())) {
      masked = *this;
      masked.vars_.erase(f.bound().id());
      inner = &masked;
    }
    Formula body = inner->apply(f.child(0));
    return f.kind() == FormulaKind::Forall ? Formula::forall(f.bound(), std::move(body))
                                           : Formula::exists(f.bound(), std::move(body));
  }
  }
  return f;
}

Substitution Substitution::normalized() const
{
  // Only variable chains are resolved; a parameter binding such as
  // eta -> s(eta) is a one-step replacement and stays as it is.
  Substitution out = *this;
  for (std::size_t round = 0; round <= vars_.size(); ++round) {
    Substitution step;
    step.vars_ = out.vars_;
    bool changed = false;
    for (auto& [var, term] : out.vars_) {
      Term next = step.apply(term);
      if (occurs(var, next) && !(next.is_variable() && next.id() == var)) {
        throw std::logic_error("substitution is cyclic");
      }
      if (next != term) {
        term = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return out;
}

} // namespace csc
