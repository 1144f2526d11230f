#include "csc/saturation/proof_check.hpp"

#include <algorithm>

namespace csc::sat {

namespace {

struct Failure
{
  std::string reason;
};

[[noreturn]] void fail(const std::string& reason)
{
  throw Failure{reason};
}

const Term& side(const Literal& l, std::uint8_t s)
{
  return s == 0 ? l.lhs() : l.rhs();
}

const Literal& literal_at(const Clause& c, std::size_t i)
{
  if (i >= c.size()) fail("literal index out of range");
  return c[i];
}

void expect_equal(const Term& a, const Term& b, const char* what)
{
  if (a != b) fail(std::string("unifier does not identify ") + what);
}

std::vector<Literal> instance_without(const Clause& c, const Substitution& s, std::size_t skip)
{
  std::vector<Literal> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != skip) out.push_back(s.apply(c[k]));
  }
  return out;
}

Clause rebuild(const DerivationStep& step, const std::vector<DerivationStep>& steps)
{
  const Substitution& u = step.unifier;
  if (u.parameter()) fail("a unifier must not bind eta");
  auto parent = [&](std::size_t k) -> const Clause& {
    if (k >= step.parents.size()) fail("missing parent");
    return steps[step.parents[k]].clause;
  };
  auto need = [&](std::size_t parents, std::size_t literals) {
    if (step.parents.size() != parents || step.literals.size() != literals) fail("malformed step");
  };
  std::vector<Literal> out;
  switch (step.rule) {
  case Rule::Resolution: {
    need(2, 2);
    const Clause& a = parent(0);
    Clause b = shift_variables(parent(1), step.shift);
    const Literal& l1 = literal_at(a, step.literals[0]);
    const Literal& l2 = literal_at(b, step.literals[1]);
    if (!l1.positive() || l2.positive() || l1.is_equation() || l2.is_equation()) fail("resolution needs complementary atoms");
    expect_equal(u.apply(l1.lhs()), u.apply(l2.lhs()), "the resolved atoms");
    out = instance_without(a, u, step.literals[0]);
    std::vector<Literal> rest = instance_without(b, u, step.literals[1]);
    out.insert(out.end(), rest.begin(), rest.end());
    break;
  }
  case Rule::Factoring: {
    need(1, 2);
    const Clause& a = parent(0);
    const Literal& l1 = literal_at(a, step.literals[0]);
    const Literal& l2 = literal_at(a, step.literals[1]);
    if (step.literals[0] == step.literals[1] || l1.positive() != l2.positive()) fail("factoring needs two literals of one polarity");
    if (u.apply(l1) != u.apply(l2)) fail("unifier does not identify the factored literals");
    out = instance_without(a, u, step.literals[1]);
    break;
  }
  case Rule::EqualityResolution: {
    need(1, 1);
    const Clause& a = parent(0);
    const Literal& l = literal_at(a, step.literals[0]);
    if (l.positive() || !l.is_equation()) fail("equality resolution needs a negative equation");
    expect_equal(u.apply(l.lhs()), u.apply(l.rhs()), "the sides of the equation");
    out = instance_without(a, u, step.literals[0]);
    break;
  }
  case Rule::EqualityFactoring: {
    need(1, 2);
    if (step.sides.size() != 2) fail("malformed step");
    const Clause& a = parent(0);
    const Literal& l1 = literal_at(a, step.literals[0]);
    const Literal& l2 = literal_at(a, step.literals[1]);
    if (step.literals[0] == step.literals[1] || !l1.positive() || !l2.positive() || !l1.is_equation() ||
        !l2.is_equation()) {
      fail("equality factoring needs two positive equations");
    }
    expect_equal(u.apply(side(l1, step.sides[0])), u.apply(side(l2, step.sides[1])), "the factored sides");
    out = instance_without(a, u, step.literals[0]);
    out.push_back(Literal::equation(false, u.apply(side(l1, 1 - step.sides[0])), u.apply(side(l2, 1 - step.sides[1]))));
    break;
  }
  case Rule::Superposition: {
    need(2, 2);
    if (step.sides.size() != 2) fail("malformed step");
    const Clause& a = parent(0);
    Clause b = shift_variables(parent(1), step.shift);
    const Literal& eq = literal_at(a, step.literals[0]);
    const Literal& target = literal_at(b, step.literals[1]);
    if (!eq.positive() || !eq.is_equation()) fail("superposition needs a positive equation");
    if (step.sides[1] == 1 && !target.is_equation()) fail("atoms have a single side");
    const Term& into = side(target, step.sides[1]);
    const Term* cur = &into;
    for (std::uint32_t k : step.position) {
      if (k >= cur->arity()) fail("position out of range");
      cur = &cur->arg(k);
    }
    if (cur->is_variable()) fail("superposition into a variable");
    expect_equal(u.apply(side(eq, step.sides[0])), u.apply(*cur), "the rewritten subterm");
    Term rewritten = replace_at(u.apply(into), step.position, u.apply(side(eq, 1 - step.sides[0])));
    Term other = u.apply(side(target, 1 - step.sides[1]));
    Literal changed = step.sides[1] == 0 ? u.apply(target).with_sides(rewritten, other)
                                         : u.apply(target).with_sides(other, rewritten);
    out = instance_without(a, u, step.literals[0]);
    std::vector<Literal> rest = instance_without(b, u, step.literals[1]);
    out.insert(out.end(), rest.begin(), rest.end());
    out.push_back(changed);
    break;
  }
  default: fail("unexpected rule");
  }
  return normalize_variables(remove_duplicate_literals(Clause(std::move(out))));
}

bool multiset_instance(const Clause& general, const Substitution& s, const Clause& specific)
{
  std::vector<bool> used(specific.size(), false);
  for (const Literal& l : general.literals()) {
    Literal inst = s.apply(l);
    bool found = false;
    for (std::size_t k = 0; k < specific.size(); ++k) {
      if (!used[k] && inst.same_up_to_symmetry(specific[k])) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_input(const Clause& c, const ClauseSet& inputs)
{
  Clause n = normalize_variables(remove_duplicate_literals(c));
  return std::any_of(inputs.begin(), inputs.end(),
                     [&](const Clause& i) { return normalize_variables(remove_duplicate_literals(i)) == n; });
}

} // namespace

ReplayResult replay(const Derivation& d, const ClauseSet& inputs, const std::optional<Clause>& goal)
{
  if (d.steps.empty()) return {false, "empty derivation"};
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const DerivationStep& step = d.steps[k];
    try {
      for (std::size_t p : step.parents) {
        if (p >= k) fail("parent does not precede the step");
      }
      if (step.rule == Rule::Input) {
        if (!step.parents.empty()) fail("input step with parents");
        if (!is_input(step.clause, inputs)) fail("leaf is not an input clause");
        continue;
      }
      if (step.rule == Rule::Subsumption) {
        if (!goal) fail("subsumption step without a goal");
        if (k + 1 != d.steps.size()) fail("subsumption must be the final step");
        if (step.parents.size() != 1) fail("malformed step");
        if (step.unifier.parameter()) fail("a matcher must not bind eta");
        if (!(step.clause == *goal)) fail("subsumption step does not prove the goal");
        if (!multiset_instance(d.steps[step.parents[0]].clause, step.unifier, step.clause)) {
          fail("matcher does not map the parent into the goal");
        }
        continue;
      }
      Clause rebuilt = rebuild(step, d.steps);
      if (!(rebuilt == normalize_variables(step.clause))) fail("conclusion does not match the rebuilt clause");
    } catch (const Failure& f) {
      return {false, "step " + std::to_string(k + 1) + ": " + f.reason};
    } catch (const SortError& e) {
      return {false, "step " + std::to_string(k + 1) + ": " + e.what()};
    }
  }
  const DerivationStep& last = d.steps.back();
  if (last.rule != Rule::Subsumption && !last.clause.empty()) return {false, "derivation does not end in the empty clause"};
  return {true, ""};
}

ReplayResult replay(const EntailmentVerdict& v)
{
  if (v.status != Status::Proved || !v.derivation) return {false, "verdict carries no derivation"};
  return replay(*v.derivation, v.input, v.goal);
}

} // namespace csc::sat
