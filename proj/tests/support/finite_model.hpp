#ifndef CSC_TESTS_FINITE_MODEL_HPP
#define CSC_TESTS_FINITE_MODEL_HPP

// Brute-force evaluation of clauses and formulas in finite interpretations.
// Used as an oracle independent of the saturation engine.

#include <functional>
#include <map>
#include <vector>

#include "csc/core/formula.hpp"

namespace csc::testing {

struct FiniteModel
{
  /** Domain size per sort id (index kNatSort first). */
  std::vector<unsigned> domain;
  std::function<unsigned(FuncId, const std::vector<unsigned>&)> function;
  std::function<bool(PredId, const std::vector<unsigned>&)> predicate;
  unsigned eta = 0;

  unsigned size(SortId s) const { return domain.at(s); }

  unsigned eval(const Term& t, const std::map<VarId, unsigned>& env) const
  {
    switch (t.kind()) {
    case TermKind::Variable: return env.at(t.id());
    case TermKind::Parameter: return eta;
    case TermKind::Function: {
      std::vector<unsigned> args;
      for (const Term& a : t.args()) args.push_back(eval(a, env));
      return function(t.id(), args);
    }
    default: throw std::logic_error("not a term");
    }
  }

  bool holds(const Literal& l, const std::map<VarId, unsigned>& env) const
  {
    bool v;
    if (l.is_equation()) {
      v = eval(l.lhs(), env) == eval(l.rhs(), env);
    } else {
      std::vector<unsigned> args;
      for (const Term& a : l.args()) args.push_back(eval(a, env));
      v = predicate(l.predicate(), args);
    }
    return v == l.positive();
  }

  bool for_all(const std::vector<Term>& vars, std::size_t i, std::map<VarId, unsigned>& env,
               const std::function<bool()>& body) const
  {
    if (i == vars.size()) return body();
    for (unsigned d = 0; d < size(vars[i].sort()); ++d) {
      env[vars[i].id()] = d;
      if (!for_all(vars, i + 1, env, body)) return false;
    }
    return true;
  }

  bool satisfies(const Clause& c) const
  {
    std::map<VarId, unsigned> env;
    return for_all(c.variables(), 0, env, [&] {
      for (const Literal& l : c.literals()) {
        if (holds(l, env)) return true;
      }
      return false;
    });
  }

  bool satisfies(const ClauseSet& s) const
  {
    for (const Clause& c : s) {
      if (!satisfies(c)) return false;
    }
    return true;
  }

  bool satisfies(const Formula& f, std::map<VarId, unsigned>& env) const
  {
    switch (f.kind()) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Atom: return holds(f.atom(), env);
    case FormulaKind::Not: return !satisfies(f.child(0), env);
    case FormulaKind::And:
      for (const Formula& c : f.children()) {
        if (!satisfies(c, env)) return false;
      }
      return true;
    case FormulaKind::Or:
      for (const Formula& c : f.children()) {
        if (satisfies(c, env)) return true;
      }
      return false;
    case FormulaKind::Implies: return !satisfies(f.child(0), env) || satisfies(f.child(1), env);
    case FormulaKind::Iff: return satisfies(f.child(0), env) == satisfies(f.child(1), env);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool universal = f.kind() == FormulaKind::Forall;
      VarId v = f.bound().id();
      std::optional<unsigned> saved;
      if (env.count(v)) saved = env[v];
      bool result = universal;
      for (unsigned d = 0; d < size(f.bound().sort()); ++d) {
        env[v] = d;
        if (satisfies(f.child(0), env) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) {
        env[v] = *saved;
      } else {
        env.erase(v);
      }
      return result;
    }
    }
    return false;
  }

  bool satisfies(const Formula& f) const
  {
    std::map<VarId, unsigned> env;
    for (const Term& v : free_variables(f)) env[v.id()] = 0;
    return satisfies(f, env);
  }
};

} // namespace csc::testing

#endif
