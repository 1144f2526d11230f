#ifndef CSC_SATURATION_ENGINE_HPP
#define CSC_SATURATION_ENGINE_HPP

#include <chrono>
#include <optional>
#include <set>
#include <string>

#include "csc/core/substitution.hpp"

namespace csc::sat {

struct Budget
{
  /** Inference conclusions produced before the run stops with Unknown. */
  std::size_t max_generated_clauses = 5000;
  /** Conclusions with a deeper term are discarded (the run can then no longer saturate). */
  std::uint32_t max_clause_depth = 12;
  std::optional<std::chrono::milliseconds> timeout;

  bool operator==(const Budget&) const = default;
};

/** Throws std::invalid_argument unless all limits are positive. */
void validate(const Budget& b);

enum class Status
{
  Proved,
  CounterSatisfiable,
  Unknown,
};

std::string status_name(Status s);

enum class Rule
{
  Input,
  Resolution,
  Factoring,
  Superposition,
  EqualityResolution,
  EqualityFactoring,
  /** The goal is an instance of a sub-multiset of an input clause. */
  Subsumption,
};

std::string rule_name(Rule r);

/**
 * One clause of a derivation. For binary rules the second parent is
 * renamed by adding @b shift to its variables before @b unifier applies;
 * @b unifier is idempotent and ranges over both renamed premises.
 *
 * literals: Resolution {positive in parent 0, negative in parent 1};
 * Factoring {kept, removed}; EqualityResolution {eq}; EqualityFactoring
 * {s = t, s' = t'}; Superposition {from-equation in parent 0, target in
 * parent 1}. sides: EqualityFactoring {side of s, side of s'};
 * Superposition {side of the rewritten-from term, target side}.
 * position: the rewritten subterm inside the target side.
 */
struct DerivationStep
{
  Clause clause;
  Rule rule = Rule::Input;
  std::vector<std::size_t> parents;
  VarId shift = 0;
  Substitution unifier;
  std::vector<std::size_t> literals;
  std::vector<std::uint8_t> sides;
  Position position;
};

/** Steps in dependency order; parents index earlier steps. The last step is the conclusion. */
struct Derivation
{
  std::vector<DerivationStep> steps;
};

struct Statistics
{
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t activated = 0;
  std::size_t discarded_deep = 0;
  bool budget_exhausted = false;
  bool timed_out = false;
};

struct EntailmentVerdict
{
  Status status = Status::Unknown;
  Statistics stats;
  Budget budget;
  /** Present for Proved. */
  std::optional<Derivation> derivation;
  /** The goal clause of an entails() check. */
  std::optional<Clause> goal;
  /** Clauses the run started from (after clausification of the goal). */
  ClauseSet input;
  /** Signature extended by Skolem symbols introduced for the goal. */
  Signature signature;
};

/** A kept clause and how it was obtained; indices refer to Saturation::clauses(). */
struct StoredClause
{
  DerivationStep step;
  bool active = false;
};

/**
 * Given-clause saturation: ordered resolution, factoring, superposition,
 * equality resolution and equality factoring under a Knuth-Bendix
 * ordering; forward subsumption and tautology deletion. Given clauses
 * alternate between the lightest and the oldest passive clause. eta is a
 * constant throughout.
 */
class Saturation
{
public:
  explicit Saturation(Budget budget);

  /** Add an input clause; returns false if it was dropped as redundant. */
  bool add_input(const Clause& c);
  Status run();

  const std::vector<StoredClause>& clauses() const { return store_; }
  const Statistics& stats() const { return stats_; }
  /** Derivation of the empty clause after a Proved run. */
  Derivation refutation() const;
  /** Derivation of stored clause @b index from the inputs. */
  Derivation derivation_of(std::size_t index) const;

private:
  void activate(std::size_t index);
  void infer_single(std::size_t g);
  void infer_pair(std::size_t first, std::size_t second);
  void resolution(std::size_t first, std::size_t second, const Clause& a, const Clause& b, VarId shift);
  void superposition(std::size_t first, std::size_t second, const Clause& a, const Clause& b, VarId shift);
  void conclude(DerivationStep step, const std::vector<Literal>& raw);
  bool redundant(const Clause& c) const;
  bool halted();
  std::size_t pick_given();

  Budget budget_;
  Statistics stats_;
  std::vector<StoredClause> store_;
  std::vector<std::size_t> active_;
  std::set<std::pair<std::uint32_t, std::size_t>> passive_by_weight_;
  std::set<std::size_t> passive_by_age_;
  std::size_t picks_ = 0;
  std::optional<std::size_t> empty_;
  bool incomplete_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

/** Saturate @b s. */
EntailmentVerdict saturate(const ClauseSet& s, const Budget& b, const Signature& sig = Signature());

/**
 * Check s |= goal by refuting s together with the Skolemized negation of
 * the (universally closed) goal. Returns Proved immediately, with a
 * Subsumption derivation, if some clause of @b s subsumes @b goal.
 */
EntailmentVerdict entails(const ClauseSet& s, const Clause& goal, const Budget& b, const Signature& sig);

/** Check s |= goal for a closed or universally read formula goal. */
EntailmentVerdict entails_formula(const ClauseSet& s, const Formula& goal, const Budget& b, const Signature& sig);

struct SetVerdict
{
  Status status = Status::Unknown;
  /** One verdict per goal clause, in order. */
  std::vector<EntailmentVerdict> parts;
  std::size_t generated() const;
};

/** Proved iff every clause of @b t is entailed; Unknown if some check is Unknown; else CounterSatisfiable. */
SetVerdict entails_set(const ClauseSet& s, const ClauseSet& t, const Budget& b, const Signature& sig);

/** Derivation lines for reports. */
std::vector<std::string> describe(const Derivation& d, const Signature& sig);

} // namespace csc::sat

#endif
