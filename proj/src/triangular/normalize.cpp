#include <stdexcept>

#include "csc/triangular/triangular.hpp"

namespace csc::tri {

namespace {

std::size_t p_count(const Term& t, const TriangularSignature& ts)
{
  return ts.p ? count_symbol(t, *ts.p) : 0;
}

bool is_tri_atom(const Formula& f, const TriangularSignature& ts)
{
  return f.kind() == FormulaKind::Atom && !f.atom().is_equation() && f.atom().predicate() == ts.tri;
}

/** p-count of an atom as seen by @b phase, or nullopt if the phase ignores it. */
std::optional<std::size_t> atom_count(const Formula& f, unsigned phase, const TriangularSignature& ts)
{
  if (f.kind() != FormulaKind::Atom) return std::nullopt;
  const Literal& l = f.atom();
  if (phase == 3) {
    if (!l.is_equation()) return std::nullopt;
    return p_count(l.lhs(), ts) + p_count(l.rhs(), ts);
  }
  if (!is_tri_atom(f, ts)) return std::nullopt;
  return p_count(l.args()[phase == 1 ? 0 : 1], ts);
}

void collect_atoms(const Formula& f, std::vector<Formula>& out)
{
  if (f.kind() == FormulaKind::Atom) {
    out.push_back(f);
    return;
  }
  for (const Formula& c : f.children()) collect_atoms(c, out);
}

Formula rebuild(const Formula& f, std::vector<Formula> children)
{
  switch (f.kind()) {
  case FormulaKind::Not: return Formula::negation(std::move(children[0]));
  case FormulaKind::And: return Formula::conjunction(std::move(children));
  case FormulaKind::Or: return Formula::disjunction(std::move(children));
  case FormulaKind::Implies: return Formula::implication(std::move(children[0]), std::move(children[1]));
  case FormulaKind::Iff: return Formula::equivalence(std::move(children[0]), std::move(children[1]));
  case FormulaKind::Forall: return Formula::forall(f.bound(), std::move(children[0]));
  case FormulaKind::Exists: return Formula::exists(f.bound(), std::move(children[0]));
  default: return f;
  }
}

/** Replace the atom with traversal index @b target. */
Formula replace_atom(const Formula& f, std::size_t& index, std::size_t target, const Formula& replacement)
{
  if (f.kind() == FormulaKind::Atom) return index++ == target ? replacement : f;
  if (f.children().empty()) return f;
  std::vector<Formula> children;
  for (const Formula& c : f.children()) children.push_back(replace_atom(c, index, target, replacement));
  return rebuild(f, std::move(children));
}

struct Pushed
{
  Term term;
  /** The subterm s(p(w)) the successor ended up on. */
  Term redex;
};

/** A term equal to s(t) in which the s sits directly above an occurrence of p; t must contain p. */
Pushed push_successor(const Term& t, const TriangularSignature& ts)
{
  if (t.kind() == TermKind::Function && t.id() == *ts.p) {
    Term r = succ(t);
    return {r, r};
  }
  if (t.kind() == TermKind::Function && t.id() == kSucc) {
    Pushed inner = push_successor(t.arg(0), ts);
    return {succ(inner.term), inner.redex};
  }
  if (t.kind() == TermKind::Function && t.id() == ts.plus) {
    const Term& u = t.arg(0);
    const Term& v = t.arg(1);
    if (p_count(v, ts) > 0) {
      Pushed inner = push_successor(v, ts);
      return {make_application(ts.sig, ts.plus, {u, inner.term}), inner.redex};
    }
    Pushed inner = push_successor(u, ts);
    return {make_application(ts.sig, ts.plus, {inner.term, v}), inner.redex};
  }
  throw std::logic_error("no p to push the successor onto");
}

Term replace_redex(const Term& t, const Term& redex, const Term& by)
{
  return map_term(t, [&](const Term& u) -> std::optional<Term> {
    if (u == redex) return by;
    return std::nullopt;
  });
}

Literal replace_redex(const Literal& l, const Term& redex, const Term& by)
{
  if (l.is_equation()) {
    return Literal::equation(l.positive(), replace_redex(l.lhs(), redex, by), replace_redex(l.rhs(), redex, by));
  }
  return Literal::atom(l.positive(), replace_redex(l.lhs(), redex, by));
}

/** phi(s p w) becomes (w = 0 & phi(s 0)) | (w != 0 & phi(w)). */
Formula split_predecessor(const Literal& atom, const Term& redex)
{
  const Term& w = redex.arg(0).arg(0);
  Literal is_zero = Literal::equation(true, w, zero());
  Formula zero_case = Formula::conjunction(
    {Formula::atom(is_zero), Formula::atom(replace_redex(atom, redex, succ(zero())))});
  Formula other_case =
    Formula::conjunction({Formula::literal(is_zero.negated()), Formula::atom(replace_redex(atom, redex, w))});
  return Formula::disjunction({zero_case, other_case});
}

Formula rewrite_atom(const Literal& l, unsigned phase, const TriangularSignature& ts)
{
  if (phase == 1) {
    Pushed left = push_successor(l.args()[0], ts);
    Term right = make_application(ts.sig, ts.plus, {left.term, l.args()[1]});
    return split_predecessor(Literal::atom(true, make_predicate(ts.sig, ts.tri, {left.term, right})), left.redex);
  }
  if (phase == 2) {
    const Term& t1 = l.args()[0];
    Pushed right = push_successor(make_application(ts.sig, ts.plus, {t1, l.args()[1]}), ts);
    return split_predecessor(Literal::atom(true, make_predicate(ts.sig, ts.tri, {succ(t1), right.term})),
                             right.redex);
  }
  bool left_has_p = p_count(l.lhs(), ts) > 0;
  Pushed side = push_successor(left_has_p ? l.lhs() : l.rhs(), ts);
  Term other = succ(left_has_p ? l.rhs() : l.lhs());
  Literal lifted = left_has_p ? Literal::equation(true, side.term, other) : Literal::equation(true, other, side.term);
  return split_predecessor(lifted, side.redex);
}

} // namespace

NormalizationMeasure measure(const Formula& f, unsigned phase, const TriangularSignature& ts)
{
  NormalizationMeasure m;
  m.phase = phase;
  std::vector<Formula> atoms;
  collect_atoms(f, atoms);
  for (const Formula& a : atoms) {
    auto c = atom_count(a, phase, ts);
    if (!c) continue;
    if (*c > m.max_count) {
      m.max_count = *c;
      m.atoms = 1;
    } else if (*c == m.max_count && *c > 0) {
      ++m.atoms;
    }
  }
  return m;
}

Normalization normalize_traced(const Formula& f, const TriangularSignature& ts)
{
  Normalization out;
  out.result = f;
  if (!ts.p) return out;
  for (unsigned phase = 1; phase <= 3; ++phase) {
    for (;;) {
      NormalizationMeasure before = measure(out.result, phase, ts);
      if (before.max_count == 0) break;
      std::vector<Formula> atoms;
      collect_atoms(out.result, atoms);
      std::size_t target = 0;
      while (atom_count(atoms[target], phase, ts) != before.max_count) ++target;
      Formula replacement = rewrite_atom(atoms[target].atom(), phase, ts);
      std::size_t index = 0;
      out.result = replace_atom(out.result, index, target, replacement);
      NormalizationStep step;
      step.phase = phase;
      step.before = before;
      step.after = measure(out.result, phase, ts);
      step.result = out.result;
      out.steps.push_back(std::move(step));
    }
  }
  return out;
}

Formula normalize_simple(const Formula& f, const TriangularSignature& ts)
{
  return normalize_traced(f, ts).result;
}

} // namespace csc::tri
