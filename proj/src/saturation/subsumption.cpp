#include "csc/saturation/subsumption.hpp"

namespace csc::sat {

namespace {

bool compatible(const Literal& a, const Literal& b)
{
  if (a.positive() != b.positive() || a.is_equation() != b.is_equation()) return false;
  if (!a.is_equation()) return a.predicate() == b.predicate();
  return a.lhs().sort() == b.lhs().sort();
}

bool search(const Clause& c, const Clause& d, std::size_t i, std::vector<bool>& used, Bindings& b)
{
  if (i == c.size()) return true;
  const Literal& l = c[i];
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (used[k] || !compatible(l, d[k])) continue;
    std::size_t mark = b.size();
    used[k] = true;
    if (match(l.lhs(), d[k].lhs(), b) && match(l.rhs(), d[k].rhs(), b) && search(c, d, i + 1, used, b)) return true;
    b.undo(mark);
    if (l.is_equation() && match(l.lhs(), d[k].rhs(), b) && match(l.rhs(), d[k].lhs(), b) &&
        search(c, d, i + 1, used, b)) {
      return true;
    }
    b.undo(mark);
    used[k] = false;
  }
  return false;
}

// Every literal of c needs a compatible partner in d.
bool quick_reject(const Clause& c, const Clause& d)
{
  if (c.size() > d.size()) return true;
  for (const Literal& l : c.literals()) {
    bool found = false;
    for (const Literal& m : d.literals()) {
      if (compatible(l, m)) {
        found = true;
        break;
      }
    }
    if (!found) return true;
  }
  return false;
}

} // namespace

std::optional<Substitution> subsumption_matcher(const Clause& c, const Clause& d)
{
  if (quick_reject(c, d)) return std::nullopt;
  std::vector<bool> used(d.size(), false);
  Bindings b;
  if (!search(c, d, 0, used, b)) return std::nullopt;
  return b.raw_substitution();
}

bool subsumes(const Clause& c, const Clause& d)
{
  return subsumption_matcher(c, d).has_value();
}

} // namespace csc::sat
