#include "csc/saturation/ordering.hpp"

#include <map>

namespace csc::sat {

Order reverse(Order o)
{
  switch (o) {
  case Order::Less: return Order::Greater;
  case Order::Greater: return Order::Less;
  default: return o;
  }
}

namespace {

std::uint64_t precedence(const Term& t)
{
  switch (t.kind()) {
  case TermKind::Parameter: return 0;
  case TermKind::Function: return 1 + static_cast<std::uint64_t>(t.id());
  case TermKind::Predicate: return (std::uint64_t{1} << 33) + t.id();
  default: return 0;
  }
}

void count_vars(const Term& t, std::map<VarId, int>& counts, int sign)
{
  if (t.is_variable()) {
    counts[t.id()] += sign;
    return;
  }
  if (t.is_ground()) return;
  for (const Term& a : t.args()) count_vars(a, counts, sign);
}

// Variable balance: +1 if s has at least as many occurrences of every
// variable as t, -1 for the converse, 0 if neither.
int variable_balance(const Term& s, const Term& t)
{
  if (s.is_ground() && t.is_ground()) return 2;
  std::map<VarId, int> counts;
  count_vars(s, counts, 1);
  count_vars(t, counts, -1);
  bool s_covers = true;
  bool t_covers = true;
  for (const auto& [_, n] : counts) {
    if (n < 0) s_covers = false;
    if (n > 0) t_covers = false;
  }
  if (s_covers && t_covers) return 2;
  if (s_covers) return 1;
  if (t_covers) return -1;
  return 0;
}

Order kbo(const Term& s, const Term& t);

Order lexicographic(const Term& s, const Term& t)
{
  for (std::size_t i = 0; i < s.arity(); ++i) {
    Order o = kbo(s.arg(i), t.arg(i));
    if (o != Order::Equal) return o;
  }
  return Order::Equal;
}

Order kbo(const Term& s, const Term& t)
{
  if (s == t) return Order::Equal;
  if (s.kind() == TermKind::Top) return Order::Less;
  if (t.kind() == TermKind::Top) return Order::Greater;
  if (t.is_variable()) return occurs(t.id(), s) ? Order::Greater : Order::Incomparable;
  if (s.is_variable()) return occurs(s.id(), t) ? Order::Less : Order::Incomparable;

  int balance = variable_balance(s, t);
  bool may_greater = balance == 2 || balance == 1;
  bool may_less = balance == 2 || balance == -1;
  if (!may_greater && !may_less) return Order::Incomparable;

  Order candidate;
  if (s.weight() != t.weight()) {
    candidate = s.weight() > t.weight() ? Order::Greater : Order::Less;
  } else if (precedence(s) != precedence(t)) {
    candidate = precedence(s) > precedence(t) ? Order::Greater : Order::Less;
  } else {
    candidate = lexicographic(s, t);
    if (candidate == Order::Equal || candidate == Order::Incomparable) return Order::Incomparable;
  }
  if (candidate == Order::Greater) return may_greater ? Order::Greater : Order::Incomparable;
  return may_less ? Order::Less : Order::Incomparable;
}

std::vector<Term> literal_multiset(const Literal& l)
{
  if (l.positive()) return {l.lhs(), l.rhs()};
  return {l.lhs(), l.lhs(), l.rhs(), l.rhs()};
}

// True if every element of n is dominated by a strictly greater element of m.
bool dominates(const std::vector<Term>& m, const std::vector<Term>& n)
{
  for (const Term& b : n) {
    bool found = false;
    for (const Term& a : m) {
      if (kbo(a, b) == Order::Greater) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

} // namespace

Order compare(const Term& s, const Term& t)
{
  return kbo(s, t);
}

Order compare(const Literal& a, const Literal& b)
{
  std::vector<Term> m = literal_multiset(a);
  std::vector<Term> n = literal_multiset(b);
  // Cancel common elements.
  for (auto it = m.begin(); it != m.end();) {
    auto match = std::find(n.begin(), n.end(), *it);
    if (match != n.end()) {
      n.erase(match);
      it = m.erase(it);
    } else {
      ++it;
    }
  }
  if (m.empty() && n.empty()) return Order::Equal;
  if (dominates(m, n)) return Order::Greater;
  if (dominates(n, m)) return Order::Less;
  return Order::Incomparable;
}

bool is_maximal(const std::vector<Literal>& c, std::size_t index)
{
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != index && compare(c[k], c[index]) == Order::Greater) return false;
  }
  return true;
}

bool is_strictly_maximal(const std::vector<Literal>& c, std::size_t index)
{
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == index) continue;
    Order o = compare(c[k], c[index]);
    if (o == Order::Greater || o == Order::Equal) return false;
  }
  return true;
}

} // namespace csc::sat
