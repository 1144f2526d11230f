#ifndef CSC_CORE_CLAUSE_HPP
#define CSC_CORE_CLAUSE_HPP

#include <span>
#include <vector>

#include "csc/core/term.hpp"

namespace csc {

/**
 * A literal is an equation lhs = rhs between terms of one sort, or a
 * predicate atom stored as the pseudo-equation P(...) = top. Polarity
 * applies to the whole (pseudo-)equation.
 */
class Literal
{
public:
  static Literal atom(bool positive, Term predicate_application);
  static Literal equation(bool positive, Term lhs, Term rhs);

  bool positive() const { return positive_; }
  bool is_equation() const { return rhs_.kind() != TermKind::Top; }
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }

  PredId predicate() const { return lhs_.id(); }
  std::span<const Term> args() const { return lhs_.args(); }

  Literal negated() const { return Literal(!positive_, lhs_, rhs_); }
  /** Same literal with both sides rebuilt; for equations the pair may be swapped. */
  Literal with_sides(Term lhs, Term rhs) const { return Literal(positive_, std::move(lhs), std::move(rhs)); }
  Literal flipped() const { return Literal(positive_, rhs_, lhs_); }

  std::uint32_t weight() const { return lhs_.weight() + (is_equation() ? rhs_.weight() : 0); }
  std::uint32_t depth() const;
  bool is_ground() const { return lhs_.is_ground() && rhs_.is_ground(); }
  bool has_parameter() const { return lhs_.has_parameter() || rhs_.has_parameter(); }
  std::size_t hash() const;

  bool operator==(const Literal& other) const
  {
    return positive_ == other.positive_ && lhs_ == other.lhs_ && rhs_ == other.rhs_;
  }
  bool operator!=(const Literal& other) const { return !(*this == other); }
  /** Equal up to orientation of an equation. */
  bool same_up_to_symmetry(const Literal& other) const;

private:
  Literal(bool positive, Term lhs, Term rhs) : positive_(positive), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  bool positive_;
  Term lhs_;
  Term rhs_;
};

/** Universally closed disjunction of literals; the empty clause is false. */
class Clause
{
public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {}

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }

  std::uint32_t weight() const;
  /** Maximal term depth over all literal arguments. */
  std::uint32_t depth() const;
  bool has_parameter() const;
  bool is_ground() const;
  /** Variables in order of first occurrence. */
  std::vector<Term> variables() const;
  /** One more than the largest variable id, i.e. the id range in use. */
  VarId variable_bound() const;

  bool operator==(const Clause& other) const { return literals_ == other.literals_; }
  bool operator!=(const Clause& other) const { return !(*this == other); }

private:
  std::vector<Literal> literals_;
};

using ClauseSet = std::vector<Clause>;

/** Rename variables to 0, 1, ... in order of first occurrence. */
Clause normalize_variables(const Clause& c);
/** Add @b offset to every variable id. */
Clause shift_variables(const Clause& c, VarId offset);
/** Drop repeated literals, keeping the first occurrence. */
Clause remove_duplicate_literals(const Clause& c);
/** Contains complementary literals or a positive t = t. */
bool is_tautology(const Clause& c);

bool same_clause_set(const ClauseSet& a, const ClauseSet& b);

} // namespace csc

#endif
