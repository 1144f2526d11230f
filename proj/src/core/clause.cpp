#include "csc/core/clause.hpp"

#include <algorithm>
#include <unordered_map>

#include "csc/core/substitution.hpp"

namespace csc {

Literal Literal::atom(bool positive, Term predicate_application)
{
  if (predicate_application.kind() != TermKind::Predicate) {
    throw SortError("atom literal requires a predicate application");
  }
  return Literal(positive, std::move(predicate_application), Term::top());
}

Literal Literal::equation(bool positive, Term lhs, Term rhs)
{
  if (lhs.sort() != rhs.sort() || lhs.sort() == kBoolSort) {
    throw SortError("equation between terms of different sorts");
  }
  return Literal(positive, std::move(lhs), std::move(rhs));
}

std::uint32_t Literal::depth() const
{
  if (is_equation()) return std::max(lhs_.depth(), rhs_.depth());
  std::uint32_t d = 0;
  for (const Term& a : lhs_.args()) d = std::max(d, a.depth());
  return d;
}

std::size_t Literal::hash() const
{
  std::size_t h = lhs_.hash() * 1000003u ^ rhs_.hash();
  return positive_ ? h : ~h;
}

bool Literal::same_up_to_symmetry(const Literal& other) const
{
  if (*this == other) return true;
  return is_equation() && positive_ == other.positive_ && lhs_ == other.rhs_ && rhs_ == other.lhs_;
}

std::uint32_t Clause::weight() const
{
  std::uint32_t w = 0;
  for (const Literal& l : literals_) w += l.weight();
  return w;
}

std::uint32_t Clause::depth() const
{
  std::uint32_t d = 0;
  for (const Literal& l : literals_) d = std::max(d, l.depth());
  return d;
}

bool Clause::has_parameter() const
{
  return std::any_of(literals_.begin(), literals_.end(), [](const Literal& l) { return l.has_parameter(); });
}

bool Clause::is_ground() const
{
  return std::all_of(literals_.begin(), literals_.end(), [](const Literal& l) { return l.is_ground(); });
}

std::vector<Term> Clause::variables() const
{
  std::vector<Term> out;
  for (const Literal& l : literals_) {
    collect_variables(l.lhs(), out);
    collect_variables(l.rhs(), out);
  }
  return out;
}

VarId Clause::variable_bound() const
{
  VarId bound = 0;
  for (const Term& v : variables()) bound = std::max(bound, v.id() + 1);
  return bound;
}

Clause normalize_variables(const Clause& c)
{
  Substitution rename;
  VarId next = 0;
  bool identity = true;
  for (const Term& v : c.variables()) {
    if (v.id() != next) identity = false;
    rename.bind(v.id(), Term::variable(next++, v.sort()));
  }
  if (identity) return c;
  return rename.apply(c);
}

Clause shift_variables(const Clause& c, VarId offset)
{
  if (offset == 0) return c;
  Substitution rename;
  for (const Term& v : c.variables()) rename.bind(v.id(), Term::variable(v.id() + offset, v.sort()));
  return rename.apply(c);
}

Clause remove_duplicate_literals(const Clause& c)
{
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c.literals()) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  if (out.size() == c.size()) return c;
  return Clause(std::move(out));
}

bool is_tautology(const Clause& c)
{
  const auto& lits = c.literals();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Literal& l = lits[i];
    if (l.positive() && l.is_equation() && l.lhs() == l.rhs()) return true;
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[j].positive() != l.positive() && lits[j].negated().same_up_to_symmetry(l)) return true;
    }
  }
  return false;
}

bool same_clause_set(const ClauseSet& a, const ClauseSet& b)
{
  auto contains_all = [](const ClauseSet& x, const ClauseSet& y) {
    for (const Clause& c : x) {
      Clause nc = normalize_variables(c);
      bool found = std::any_of(y.begin(), y.end(), [&](const Clause& d) { return normalize_variables(d) == nc; });
      if (!found) return false;
    }
    return true;
  };
  return contains_all(a, b) && contains_all(b, a);
}

} // namespace csc
