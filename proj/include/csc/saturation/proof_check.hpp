#ifndef CSC_SATURATION_PROOF_CHECK_HPP
#define CSC_SATURATION_PROOF_CHECK_HPP

#include <string>

#include "csc/saturation/engine.hpp"

namespace csc::sat {

struct ReplayResult
{
  bool ok = false;
  /** First failing step and the reason, empty when ok. */
  std::string message;
};

/**
 * Re-derive every step of @b d from its parents using only term
 * operations: unifiers must identify the stated terms and conclusions
 * must be reproduced up to variable renaming. Leaves must be clauses
 * of @b inputs. When @b goal is given the derivation may end in a
 * subsumption step proving it; otherwise it must end in the empty clause.
 */
ReplayResult replay(const Derivation& d, const ClauseSet& inputs, const std::optional<Clause>& goal = std::nullopt);

/** Replay the derivation attached to a Proved verdict. */
ReplayResult replay(const EntailmentVerdict& v);

} // namespace csc::sat

#endif
