#include "csc/saturation/clausify.hpp"

#include <algorithm>

#include "csc/core/substitution.hpp"

namespace csc::sat {

namespace {

Formula nnf(const Formula& f, bool positive)
{
  switch (f.kind()) {
  case FormulaKind::True: return positive ? Formula::truth() : Formula::falsity();
  case FormulaKind::False: return positive ? Formula::falsity() : Formula::truth();
  case FormulaKind::Atom: return positive ? f : Formula::negation(f);
  case FormulaKind::Not: return nnf(f.child(0), !positive);
  case FormulaKind::And:
  case FormulaKind::Or: {
    std::vector<Formula> kids;
    for (const Formula& c : f.children()) kids.push_back(nnf(c, positive));
    bool conj = (f.kind() == FormulaKind::And) == positive;
    return conj ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
  }
  case FormulaKind::Implies: {
    Formula a = nnf(f.child(0), !positive);
    Formula b = nnf(f.child(1), positive);
    return positive ? Formula::disjunction({a, b}) : Formula::conjunction({a, b});
  }
  case FormulaKind::Iff: {
    const Formula& a = f.child(0);
    const Formula& b = f.child(1);
    if (positive) {
      return Formula::conjunction({Formula::disjunction({nnf(a, false), nnf(b, true)}),
                                   Formula::disjunction({nnf(a, true), nnf(b, false)})});
    }
    return Formula::disjunction({Formula::conjunction({nnf(a, true), nnf(b, false)}),
                                 Formula::conjunction({nnf(a, false), nnf(b, true)})});
  }
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    bool universal = (f.kind() == FormulaKind::Forall) == positive;
    Formula body = nnf(f.child(0), positive);
    return universal ? Formula::forall(f.bound(), body) : Formula::exists(f.bound(), body);
  }
  }
  return f;
}

class Skolemizer
{
public:
  Skolemizer(Signature& sig, VarId next) : sig_(sig), next_(next) {}

  // Returns a quantifier-free formula; bound variables get fresh ids.
  Formula run(const Formula& f, std::vector<Term>& universals)
  {
    switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) kids.push_back(run(c, universals));
      return f.kind() == FormulaKind::And ? Formula::conjunction(std::move(kids))
                                          : Formula::disjunction(std::move(kids));
    }
    case FormulaKind::Forall: {
      Term fresh = Term::variable(next_++, f.bound().sort());
      Substitution rename;
      rename.bind(f.bound().id(), fresh);
      universals.push_back(fresh);
      Formula out = run(rename.apply(f.child(0)), universals);
      universals.pop_back();
      return out;
    }
    case FormulaKind::Exists: {
      std::vector<Term> free = free_variables(f);
      std::vector<Term> args;
      std::vector<SortId> sorts;
      for (const Term& u : universals) {
        if (std::find(free.begin(), free.end(), u) != free.end()) {
          args.push_back(u);
          sorts.push_back(u.sort());
        }
      }
      SortId sort = f.bound().sort();
      FuncId sk = sig_.fresh_function("sk", sorts, sort);
      Substitution replace;
      replace.bind(f.bound().id(), Term::function(sk, std::move(args), sort));
      return run(replace.apply(f.child(0)), universals);
    }
    default: return f;
    }
  }

private:
  Signature& sig_;
  VarId next_;
};

using Cnf = std::vector<std::vector<Literal>>;

Cnf cnf(const Formula& f)
{
  switch (f.kind()) {
  case FormulaKind::True: return {};
  case FormulaKind::False: return {{}};
  case FormulaKind::Atom: return {{f.atom()}};
  case FormulaKind::Not: return {{f.child(0).atom().negated()}};
  case FormulaKind::And: {
    Cnf out;
    for (const Formula& c : f.children()) {
      Cnf part = cnf(c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  case FormulaKind::Or: {
    Cnf out = {{}};
    for (const Formula& c : f.children()) {
      Cnf part = cnf(c);
      Cnf next;
      for (const auto& a : out) {
        for (const auto& b : part) {
          std::vector<Literal> joined = a;
          joined.insert(joined.end(), b.begin(), b.end());
          next.push_back(std::move(joined));
        }
      }
      out = std::move(next);
    }
    return out;
  }
  default: throw std::logic_error("cnf expects a quantifier-free negation normal form");
  }
}

} // namespace

Formula negation_normal_form(const Formula& f)
{
  return nnf(f, true);
}

ClauseSet clausify(const Formula& f, Signature& sig)
{
  Formula closed = Formula::forall(free_variables(f), f);
  Formula n = nnf(closed, true);
  Skolemizer sk(sig, variable_bound(n));
  std::vector<Term> universals;
  Formula matrix = sk.run(n, universals);
  ClauseSet out;
  for (auto& lits : cnf(matrix)) {
    Clause c = remove_duplicate_literals(Clause(std::move(lits)));
    if (is_tautology(c)) continue;
    out.push_back(normalize_variables(c));
  }
  return out;
}

ClauseSet clausify_negation(const Formula& goal, Signature& sig)
{
  return clausify(Formula::negation(Formula::forall(free_variables(goal), goal)), sig);
}

} // namespace csc::sat
