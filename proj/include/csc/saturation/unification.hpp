#ifndef CSC_SATURATION_UNIFICATION_HPP
#define CSC_SATURATION_UNIFICATION_HPP

#include "csc/core/substitution.hpp"

namespace csc::sat {

/**
 * Triangular variable bindings used during unification and matching.
 * eta is a constant here: it is never bound.
 */
class Bindings
{
public:
  std::optional<Term> lookup(VarId v) const;
  void bind(VarId v, Term t);
  /** Apply the bindings exhaustively. */
  Term resolve(const Term& t) const;
  Literal resolve(const Literal& l) const;
  /** Fully resolved, idempotent substitution. */
  Substitution to_substitution() const;
  /** Bindings as made, without resolution; the right form for matchers. */
  Substitution raw_substitution() const;
  std::size_t size() const { return trail_.size(); }
  /** Undo bindings made after the point where size() was @b mark. */
  void undo(std::size_t mark);

private:
  std::vector<std::optional<Term>> slots_;
  std::vector<VarId> trail_;
};

/** Extend @b b to a most general unifier of @b s and @b t. On failure @b b is unchanged. */
bool unify(const Term& s, const Term& t, Bindings& b);

/** Extend @b b so that pattern becomes syntactically equal to target (target variables are rigid). */
bool match(const Term& pattern, const Term& target, Bindings& b);

std::optional<Substitution> unifier(const Term& s, const Term& t);

} // namespace csc::sat

#endif
