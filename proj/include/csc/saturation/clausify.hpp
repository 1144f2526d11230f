#ifndef CSC_SATURATION_CLAUSIFY_HPP
#define CSC_SATURATION_CLAUSIFY_HPP

#include "csc/core/formula.hpp"

namespace csc::sat {

/**
 * Clause normal form of @b f: negation normal form, Skolemization and
 * distribution. Free variables other than eta are read universally; eta
 * stays free. Skolem symbols are added to @b sig. The result is
 * equisatisfiable with @b f.
 */
ClauseSet clausify(const Formula& f, Signature& sig);

/** Clauses of the negation of the universal closure of @b goal. */
ClauseSet clausify_negation(const Formula& goal, Signature& sig);

/** Negation normal form; implications and equivalences are expanded. */
Formula negation_normal_form(const Formula& f);

} // namespace csc::sat

#endif
