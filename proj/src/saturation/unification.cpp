#include "csc/saturation/unification.hpp"

namespace csc::sat {

std::optional<Term> Bindings::lookup(VarId v) const
{
  if (v < slots_.size()) return slots_[v];
  return std::nullopt;
}

void Bindings::bind(VarId v, Term t)
{
  if (v >= slots_.size()) slots_.resize(v + 1);
  slots_[v] = std::move(t);
  trail_.push_back(v);
}

void Bindings::undo(std::size_t mark)
{
  while (trail_.size() > mark) {
    slots_[trail_.back()].reset();
    trail_.pop_back();
  }
}

Term Bindings::resolve(const Term& t) const
{
  if (t.is_ground() || trail_.empty()) return t;
  if (t.is_variable()) {
    std::optional<Term> bound = lookup(t.id());
    return bound ? resolve(*bound) : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(resolve(a));
    changed |= !args.back().same_node(a);
  }
  if (!changed) return t;
  if (t.kind() == TermKind::Predicate) return Term::predicate(t.id(), std::move(args));
  return Term::function(t.id(), std::move(args), t.sort());
}

Literal Bindings::resolve(const Literal& l) const
{
  return l.with_sides(resolve(l.lhs()), resolve(l.rhs()));
}

Substitution Bindings::to_substitution() const
{
  Substitution s;
  for (VarId v : trail_) s.bind(v, resolve(*slots_[v]));
  return s;
}

Substitution Bindings::raw_substitution() const
{
  Substitution s;
  for (VarId v : trail_) s.bind(v, *slots_[v]);
  return s;
}

namespace {

Term walk(const Term& t, const Bindings& b)
{
  Term cur = t;
  while (cur.is_variable()) {
    std::optional<Term> next = b.lookup(cur.id());
    if (!next) break;
    cur = *next;
  }
  return cur;
}

bool occurs_resolved(VarId v, const Term& t, const Bindings& b)
{
  if (t.is_ground()) return false;
  Term u = walk(t, b);
  if (u.is_variable()) return u.id() == v;
  for (const Term& a : u.args()) {
    if (occurs_resolved(v, a, b)) return true;
  }
  return false;
}

bool unify_rec(const Term& s0, const Term& t0, Bindings& b)
{
  Term s = walk(s0, b);
  Term t = walk(t0, b);
  if (s.same_node(t)) return true;
  if (s.sort() != t.sort()) return false;
  if (s.is_variable()) {
    if (t.is_variable() && t.id() == s.id()) return true;
    if (occurs_resolved(s.id(), t, b)) return false;
    b.bind(s.id(), t);
    return true;
  }
  if (t.is_variable()) {
    if (occurs_resolved(t.id(), s, b)) return false;
    b.bind(t.id(), s);
    return true;
  }
  if (s.kind() != t.kind() || s.id() != t.id() || s.arity() != t.arity()) return false;
  if (s.is_ground() && t.is_ground()) return s == t;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (!unify_rec(s.arg(i), t.arg(i), b)) return false;
  }
  return true;
}

bool match_rec(const Term& p, const Term& t, Bindings& b)
{
  if (p.is_variable()) {
    if (p.sort() != t.sort()) return false;
    std::optional<Term> bound = b.lookup(p.id());
    if (bound) return *bound == t;
    b.bind(p.id(), t);
    return true;
  }
  if (p.kind() != t.kind() || p.id() != t.id() || p.arity() != t.arity()) return false;
  if (p.is_ground()) return p == t;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (!match_rec(p.arg(i), t.arg(i), b)) return false;
  }
  return true;
}

} // namespace

bool unify(const Term& s, const Term& t, Bindings& b)
{
  std::size_t mark = b.size();
  if (unify_rec(s, t, b)) return true;
  b.undo(mark);
  return false;
}

bool match(const Term& pattern, const Term& target, Bindings& b)
{
  std::size_t mark = b.size();
  if (match_rec(pattern, target, b)) return true;
  b.undo(mark);
  return false;
}

std::optional<Substitution> unifier(const Term& s, const Term& t)
{
  Bindings b;
  if (!unify(s, t, b)) return std::nullopt;
  return b.to_substitution();
}

} // namespace csc::sat
