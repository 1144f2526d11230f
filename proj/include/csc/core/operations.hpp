#ifndef CSC_CORE_OPERATIONS_HPP
#define CSC_CORE_OPERATIONS_HPP

#include "csc/core/substitution.hpp"

namespace csc {

/** Replace every occurrence of eta in @b s by @b t (sort nat). */
ClauseSet substitute_parameter(const ClauseSet& s, const Term& t);
Clause substitute_parameter(const Clause& c, const Term& t);
Formula substitute_parameter(const Formula& f, const Term& t);

/** Rename the clauses of @b s apart: clause i gets variables disjoint from all others. */
ClauseSet rename_apart(const ClauseSet& s);

/** Conjunction of the universal closures of the clauses. */
Formula clause_set_formula(const ClauseSet& s);

/**
 * Negation of a clause set in existential-positive negation normal form:
 * a disjunction over the clauses of  exists y. (~l1 & ... & ~lk).
 * eta stays free.
 */
Formula negate_clause_set(const ClauseSet& s);

/** Replace eta by the variable @b var throughout. */
Formula abstract_parameter(const Formula& f, const Term& var);

} // namespace csc

#endif
