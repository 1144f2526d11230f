#ifndef CSC_TRIANGULAR_TRIANGULAR_HPP
#define CSC_TRIANGULAR_TRIANGULAR_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "csc/core/formula.hpp"

namespace csc::tri {

/** Symbols of the triangular-number language. @b p is absent in the clause-set variant. */
struct TriangularSignature
{
  Signature sig;
  std::optional<FuncId> p;
  FuncId plus = 0;
  PredId tri = 0;
};

/** 0, s, p, plus and tri : nat, nat. */
TriangularSignature full_signature();
/** 0, s, plus and tri, without the predecessor. */
TriangularSignature prime_signature();
/** Looks up p, plus and tri by name; throws std::invalid_argument if plus or tri is missing. */
TriangularSignature symbols_of(const Signature& sig);

enum class Theory
{
  /** A1 to A9. */
  Full,
  /** A4 to A7. */
  Prime,
  /** A1 to A9 and B1 to B4. */
  Inductive,
};

/** Universally closed axioms, in order. Full and Inductive need p. */
std::vector<Formula> axioms(Theory which, const TriangularSignature& ts);

/** A4 to A7 as clauses plus  forall y ~tri(eta, y). */
ClauseSet build_s_triangle(const TriangularSignature& ts);

std::uint64_t triangle(std::uint64_t n);

enum class Truth
{
  False,
  True,
  Unknown,
};

std::string truth_name(Truth t);

struct StandardModelConfig
{
  /** Quantifiers range over 0..bound. */
  unsigned bound = 10;
  /** Interpretation of tri; the graph of the triangle function when empty. */
  std::function<bool(std::uint64_t, std::uint64_t)> triangle_relation;
};

using Assignment = std::map<VarId, std::uint64_t>;

/**
 * Evaluate in the natural numbers with p(0) = 0 and tri as configured.
 * Quantifier-free parts are exact; a universal is False if a
 * counterexample up to the bound exists and Unknown otherwise, dually
 * for existentials. Throws std::invalid_argument on unassigned variables
 * or eta.
 */
Truth eval_standard(const Formula& f, const Assignment& a, const StandardModelConfig& cfg,
                    const TriangularSignature& ts);
std::uint64_t eval_term(const Term& t, const Assignment& a, const TriangularSignature& ts);

/** Lexicographic measure of one normalization phase. */
struct NormalizationMeasure
{
  unsigned phase = 1;
  /** Largest p-count among the atoms the phase looks at. */
  std::size_t max_count = 0;
  /** Number of those atoms with exactly max_count occurrences of p. */
  std::size_t atoms = 0;

  bool operator==(const NormalizationMeasure&) const = default;
  auto operator<=>(const NormalizationMeasure&) const = default;
};

NormalizationMeasure measure(const Formula& f, unsigned phase, const TriangularSignature& ts);

struct NormalizationStep
{
  unsigned phase = 1;
  NormalizationMeasure before;
  NormalizationMeasure after;
  Formula result = Formula::truth();
};

struct Normalization
{
  Formula result = Formula::truth();
  std::vector<NormalizationStep> steps;
};

/**
 * An equivalent formula without p: first p is removed from the left
 * arguments of tri atoms, then from the right arguments, then from
 * equations. Each step rewrites the leftmost atom of maximal p-count.
 */
Normalization normalize_traced(const Formula& f, const TriangularSignature& ts);
Formula normalize_simple(const Formula& f, const TriangularSignature& ts);

bool is_simple(const Term& t, const TriangularSignature& ts);
bool is_simple(const Formula& f, const TriangularSignature& ts);

/** m1 x1 + ... + mn xn + k. */
struct LinearForm
{
  std::map<VarId, std::uint64_t> coefficients;
  std::uint64_t constant = 0;

  std::uint64_t eval(const Assignment& a) const;
  bool operator==(const LinearForm&) const = default;
};

/** Throws std::invalid_argument for terms with p or of another sort. */
LinearForm linear_form(const Term& t, const TriangularSignature& ts);

struct HerbrandGap
{
  /** Smallest m with tri(m, t(m)) false for every term. */
  std::uint64_t m = 0;
  /** Every m at or above this bound works. */
  std::uint64_t stop_bound = 0;
};

/**
 * Terms must be simple, of sort nat and share at most one variable;
 * throws std::invalid_argument otherwise.
 */
HerbrandGap herbrand_gap(const std::vector<Term>& terms, const TriangularSignature& ts);

} // namespace csc::tri

#endif
