#ifndef CSC_SATURATION_SUBSUMPTION_HPP
#define CSC_SATURATION_SUBSUMPTION_HPP

#include "csc/saturation/unification.hpp"

namespace csc::sat {

/**
 * True iff some substitution (eta fixed) maps the literals of @b c
 * injectively onto literals of @b d. Equations match in either orientation.
 */
bool subsumes(const Clause& c, const Clause& d);

/** The matching substitution, if @b c subsumes @b d. */
std::optional<Substitution> subsumption_matcher(const Clause& c, const Clause& d);

} // namespace csc::sat

#endif
