#ifndef CSC_CORE_FORMULA_HPP
#define CSC_CORE_FORMULA_HPP

#include <memory>
#include <vector>

#include "csc/core/clause.hpp"

namespace csc {

enum class FormulaKind : std::uint8_t
{
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

/**
 * Immutable first-order formula. Atoms carry a positive Literal; each
 * quantifier binds exactly one variable term.
 */
class Formula
{
public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(const Literal& lit);
  /** Atom for a positive literal, negated atom otherwise. */
  static Formula literal(const Literal& lit);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula implication(Formula premise, Formula conclusion);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(Term var, Formula body);
  static Formula exists(Term var, Formula body);
  static Formula forall(const std::vector<Term>& vars, Formula body);
  static Formula exists(const std::vector<Term>& vars, Formula body);

  FormulaKind kind() const { return node_->kind; }
  const Literal& atom() const { return *node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const Term& bound() const { return *node_->bound; }
  bool is_quantifier() const { return kind() == FormulaKind::Forall || kind() == FormulaKind::Exists; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  struct Node
  {
    FormulaKind kind;
    std::optional<Literal> atom;
    std::vector<Formula> children;
    std::optional<Term> bound;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(FormulaKind kind, std::optional<Literal> atom, std::vector<Formula> children,
                      std::optional<Term> bound);

  std::shared_ptr<const Node> node_;
};

/** Free variables in order of first occurrence (eta is not a variable). */
std::vector<Term> free_variables(const Formula& f);
/** One more than the largest variable id occurring free or bound. */
VarId variable_bound(const Formula& f);
bool has_parameter(const Formula& f);
bool is_quantifier_free(const Formula& f);
/** The universally closed disjunction of a clause. */
Formula clause_formula(const Clause& c);
/** Top-level disjuncts (a non-disjunction counts as a single disjunct). */
std::vector<Formula> disjuncts(const Formula& f);

/**
 * Existential-positive shape: negation normal form, no universal
 * quantifier and no implication or equivalence. Such formulas are
 * equivalent to a prenex existential formula.
 */
bool is_sigma1(const Formula& f);
/** Pull existential quantifiers to the front (input must satisfy is_sigma1). */
Formula prenex_existential(const Formula& f);

} // namespace csc

#endif
