#ifndef CSC_CYCLES_CYCLES_HPP
#define CSC_CYCLES_CYCLES_HPP

#include <optional>
#include <string>
#include <variant>

#include "csc/saturation/engine.hpp"

namespace csc::cycles {

/** One required entailment and the engine runs that decided it. */
struct ConditionCheck
{
  std::string name;
  /** The entailment in readable form, e.g. "S(s(eta)) |= S(eta)". */
  std::string goal;
  sat::Status status = sat::Status::Unknown;
  /** Engine runs: one per goal clause for set entailments, one for refutations. */
  std::vector<sat::EntailmentVerdict> runs;

  std::size_t generated() const;
};

enum class FailureKind
{
  /** The engine saturated without a contradiction. */
  RefutedCondition,
  /** A check ran out of budget. */
  Budget,
};

std::string failure_name(FailureKind k);

struct CheckFailure
{
  FailureKind kind = FailureKind::RefutedCondition;
  /** Name of the first condition that is not Proved. */
  std::string condition;
  /** Every check that was run, including the failing one. */
  std::vector<ConditionCheck> conditions;
};

struct CycleCertificate
{
  ClauseSet subject;
  /** Offset i and step j; a plain cycle has (0, 1). */
  unsigned offset = 0;
  unsigned step = 1;
  bool plain = true;
  std::vector<ConditionCheck> conditions;
  sat::Budget budget;
};

struct RefutationCertificate
{
  ClauseSet refuted;
  CycleCertificate cycle;
  unsigned n = 0;
  /** R(s^n eta) |= S(eta) followed by R(k) |= false for k < n. */
  std::vector<ConditionCheck> conditions;
};

/** A certificate or the reason why none could be issued. */
template <class T>
using Checked = std::variant<T, CheckFailure>;

template <class T>
bool certified(const Checked<T>& c)
{
  return std::holds_alternative<T>(c);
}

/** S(s eta) |= S(eta) and S(0) |= false. */
Checked<CycleCertificate> check_clause_set_cycle(const ClauseSet& s, const sat::Budget& b, const Signature& sig);

/** S(k + i) |= false for k < j and S(s^(i+j) eta) |= S(s^i eta). */
Checked<CycleCertificate> check_offset_step_cycle(const ClauseSet& s, unsigned offset, unsigned step,
                                                  const sat::Budget& b, const Signature& sig);

/** S is a cycle, R(s^n eta) |= S(eta), and R(k) |= false for k < n. */
Checked<RefutationCertificate> check_refutation(const ClauseSet& r, const ClauseSet& s, unsigned n,
                                                const sat::Budget& b, const Signature& sig);

/**
 * Refutation through an offset/step cycle: S has offset i and step j,
 * R(s^n eta) |= S(s^i eta) and R(k) |= false for k < n.
 */
Checked<RefutationCertificate> check_offset_refutation(const ClauseSet& r, const ClauseSet& s, unsigned offset,
                                                       unsigned step, unsigned n, const sat::Budget& b,
                                                       const Signature& sig);

/** Try n = 0, ..., max_n and return the first certified refutation, or the failure for max_n. */
Checked<RefutationCertificate> search_refutation(const ClauseSet& r, const ClauseSet& s, unsigned max_n,
                                                 const sat::Budget& b, const Signature& sig);

/**
 * The plain cycle U(eta) = T(eta) | T(s eta) | ... | T(s^(j-1) eta) with
 * T(eta) = S(s^i eta), as the clause set obtained by distributing the
 * disjunction: one clause per choice of a clause from each disjunct,
 * renamed apart. Repeated literals are merged; clauses are not
 * deduplicated, so there are |S|^j of them.
 */
ClauseSet normalize_offset_step(const ClauseSet& s, unsigned offset, unsigned step);

/** Disjunction of clause sets distributed into one clause set (same conventions as above). */
ClauseSet distribute(const std::vector<ClauseSet>& disjuncts);

/** The explicit induction argument behind a certified refutation. */
struct InductionObligation
{
  /** The induction variable; never eta. */
  Term variable = Term::variable(0, kNatSort);
  /** ~S(x): an existential-positive formula. */
  Formula negated_cycle = Formula::truth();
  /** Ind(x, ~S): psi(0) -> forall x (psi(x) -> psi(s x)) -> forall x psi(x). */
  Formula induction_axiom = Formula::truth();
  /** C_n(x) = x = 0 | ... | x = (n-1) | exists y x = s^n(y). */
  Formula case_distinction = Formula::truth();
  struct Obligation
  {
    std::string name;
    Formula formula = Formula::truth();
    ConditionCheck check;
  };
  /** ~R(k) for k < n, then forall x (~S(x) -> ~R(s^n x)). */
  std::vector<Obligation> obligations;
};

/** Case distinction C_n over the variable @b x. */
Formula case_distinction(unsigned n, const Term& x);

/** Ind(x, psi) for a formula psi in which x may occur free. */
Formula induction_axiom(const Formula& psi, const Term& x);

/** Build the obligations for a certified refutation and check each with the engine. */
InductionObligation emit_induction(const RefutationCertificate& cert, const sat::Budget& b, const Signature& sig);

/** Runs check_refutation first; throws std::invalid_argument if it does not certify. */
InductionObligation emit_induction(const ClauseSet& r, const ClauseSet& s, unsigned n, const sat::Budget& b,
                                   const Signature& sig);

/** C_n(0) and forall x (C_n(x) -> C_n(s x)), both checked by the engine. */
std::vector<ConditionCheck> case_distinction_inductive(unsigned n, const sat::Budget& b);

} // namespace csc::cycles

#endif
