#ifndef CSC_CORE_SUBSTITUTION_HPP
#define CSC_CORE_SUBSTITUTION_HPP

#include <map>
#include <optional>

#include "csc/core/formula.hpp"

namespace csc {

/**
 * Finite sort-preserving map from variables (and optionally eta) to terms.
 * apply() replaces simultaneously in a single pass; normalized() resolves
 * chains so that the result is idempotent.
 */
class Substitution
{
public:
  void bind(VarId var, Term t);
  void bind_parameter(Term t);

  std::optional<Term> lookup(VarId var) const;
  const std::optional<Term>& parameter() const { return param_; }
  const std::map<VarId, Term>& bindings() const { return vars_; }
  bool empty() const { return vars_.empty() && !param_; }

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;
  ClauseSet apply(const ClauseSet& s) const;
  /** Bound occurrences are never replaced; callers keep bound ids fresh. */
  Formula apply(const Formula& f) const;

  /** Resolve chains x -> ...y..., y -> t until no bound variable remains in a range. */
  Substitution normalized() const;

  bool operator==(const Substitution&) const = default;

private:
  std::map<VarId, Term> vars_;
  std::optional<Term> param_;
};

} // namespace csc

#endif
