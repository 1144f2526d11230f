#ifndef CSC_NCLAUSE_NCLAUSE_HPP
#define CSC_NCLAUSE_NCLAUSE_HPP

#include <optional>
#include <stdexcept>

#include "csc/cycles/cycles.hpp"

namespace csc::nclause {

enum class Restriction
{
  /** A function other than 0 and s has range nat. */
  NatFunction,
  /** The signature has no sort besides nat. */
  NoOtherSort,
  /** eta occurs somewhere other than as the left side of a constraint eta != t. */
  EtaOutsideConstraint,
  /** A body literal is an equation between nat terms. */
  NatEquation,
};

std::string restriction_name(Restriction r);

class NClauseError : public std::invalid_argument
{
public:
  NClauseError(Restriction r, const std::string& message);
  Restriction restriction() const { return restriction_; }

private:
  Restriction restriction_;
};

/** forall x. (eta != t1 | ... | eta != tk | C) with C free of eta and of nat equations. */
struct NClause
{
  /** The terms t of the constraint literals eta != t, in clause order. */
  std::vector<Term> constraints;
  std::vector<Literal> body;

  Clause clause() const;
  bool operator==(const NClause&) const = default;
};

/** Throws NClauseError naming the violated restriction. */
void validate_signature(const Signature& sig);
NClause as_nclause(const Clause& c);
/** Same check as as_nclause without throwing. */
std::optional<NClause> try_nclause(const Clause& c);
/** Checks the signature and splits every clause into constraint part and body. */
std::vector<NClause> validate_nclause_set(const ClauseSet& r, const Signature& sig);

/** Wrap every constraint term in s^i; the body is unchanged. */
NClause descend(const NClause& c, unsigned i);
std::vector<NClause> descend(const std::vector<NClause>& s, unsigned i);
ClauseSet to_clauses(const std::vector<NClause>& s);

/** How the descended image of one clause of a candidate cycle was established. */
struct DescentEvidence
{
  Clause clause;
  Clause image;
  /** A clause of the derivable closure that subsumes the image. */
  std::optional<Clause> subsumer;
  /** Engine check of S |- image, run when no subsumer exists. */
  std::optional<cycles::ConditionCheck> check;
};

/** A cycle (i, j, S): S |- eta != k for i <= k < i + j and S |- S descended by j. */
struct NCycle
{
  unsigned offset = 0;
  unsigned step = 1;
  ClauseSet clauses;
  std::vector<cycles::ConditionCheck> base;
  std::vector<DescentEvidence> descent;
};

/** Clauses dropped in one round of the greatest fixpoint computation. */
struct FixpointRound
{
  ClauseSet removed;
};

struct Attempt
{
  unsigned offset = 0;
  unsigned step = 1;
  /** Empty on success, otherwise why (i, j) did not give a cycle. */
  std::string reason;
  /** Some base case ran out of budget. */
  bool undecided = false;
};

struct Detection
{
  std::optional<NCycle> cycle;
  sat::Status saturation = sat::Status::Unknown;
  /** n-clauses among the saturated set, inputs included. */
  ClauseSet derived;
  /** Greatest fixpoint for the step of the returned cycle (or the last step tried). */
  ClauseSet fixpoint;
  std::vector<FixpointRound> trace;
  std::vector<Attempt> attempts;
};

/**
 * Saturate R under @b b, then for j = 1..max_j and i = 0..max_i compute
 * the greatest subset S of the derived n-clauses whose descended images
 * are subsumed by the derivable closure of S (engine entailment as a
 * fallback), and check the j base cases with the engine. The returned S
 * is the set of input clauses behind the fixpoint when that already forms
 * a cycle, otherwise the fixpoint itself.
 */
Detection detect_cycle(const std::vector<NClause>& r, unsigned max_i, unsigned max_j, const sat::Budget& b,
                       const Signature& sig);

struct Translation
{
  /** T(eta) = S(s^i eta) | ... | S(s^(i+j-1) eta) distributed into clauses. */
  ClauseSet cycle;
  /** Suggested n for check_refutation(R, T, n). */
  unsigned n = 0;
};

Translation translate_cycle(const NCycle& nc);

} // namespace csc::nclause

#endif
