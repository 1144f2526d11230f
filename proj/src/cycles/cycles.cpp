#include "csc/cycles/cycles.hpp"

#include <stdexcept>

#include "csc/core/operations.hpp"

namespace csc::cycles {

std::size_t ConditionCheck::generated() const
{
  std::size_t n = 0;
  for (const sat::EntailmentVerdict& v : runs) n += v.stats.generated;
  return n;
}

std::string failure_name(FailureKind k)
{
  return k == FailureKind::Budget ? "budget" : "refuted-condition";
}

namespace {

std::string shifted(const std::string& base, unsigned k)
{
  if (k == 0) return base;
  std::string out = base;
  for (unsigned i = 0; i < k; ++i) out = "s(" + out + ")";
  return out;
}

ConditionCheck set_entailment(std::string name, std::string goal, const ClauseSet& premises,
                              const ClauseSet& conclusions, const sat::Budget& b, const Signature& sig)
{
  ConditionCheck c;
  c.name = std::move(name);
  c.goal = std::move(goal);
  sat::SetVerdict v = sat::entails_set(premises, conclusions, b, sig);
  c.status = v.status;
  c.runs = std::move(v.parts);
  return c;
}

ConditionCheck contradiction(std::string name, std::string goal, const ClauseSet& premises, const sat::Budget& b,
                             const Signature& sig)
{
  ConditionCheck c;
  c.name = std::move(name);
  c.goal = std::move(goal);
  c.runs.push_back(sat::saturate(premises, b, sig));
  c.status = c.runs.back().status;
  return c;
}

std::optional<CheckFailure> first_failure(const std::vector<ConditionCheck>& checks)
{
  for (const ConditionCheck& c : checks) {
    if (c.status == sat::Status::Proved) continue;
    CheckFailure f;
    f.kind = c.status == sat::Status::Unknown ? FailureKind::Budget : FailureKind::RefutedCondition;
    f.condition = c.name;
    f.conditions = checks;
    return f;
  }
  return std::nullopt;
}

Term eta_plus(unsigned k)
{
  return succ_n(Term::parameter(), k);
}

std::vector<ConditionCheck> refutation_conditions(const ClauseSet& r, const ClauseSet& target,
                                                  const std::string& target_name, unsigned n, const sat::Budget& b,
                                                  const Signature& sig)
{
  std::vector<ConditionCheck> checks;
  checks.push_back(set_entailment("descent", "R(" + shifted("eta", n) + ") |= " + target_name,
                                  substitute_parameter(r, eta_plus(n)), target, b, sig));
  for (unsigned k = 0; k < n; ++k) {
    checks.push_back(contradiction("base " + std::to_string(k), "R(" + std::to_string(k) + ") |= $false",
                                   substitute_parameter(r, numeral(k)), b, sig));
  }
  return checks;
}

} // namespace

Checked<CycleCertificate> check_clause_set_cycle(const ClauseSet& s, const sat::Budget& b, const Signature& sig)
{
  sat::validate(b);
  std::vector<ConditionCheck> checks;
  checks.push_back(set_entailment("step", "S(s(eta)) |= S(eta)", substitute_parameter(s, eta_plus(1)), s, b, sig));
  checks.push_back(contradiction("base", "S(0) |= $false", substitute_parameter(s, zero()), b, sig));
  if (auto f = first_failure(checks)) return *f;
  CycleCertificate cert;
  cert.subject = s;
  cert.conditions = std::move(checks);
  cert.budget = b;
  return cert;
}

Checked<CycleCertificate> check_offset_step_cycle(const ClauseSet& s, unsigned offset, unsigned step,
                                                  const sat::Budget& b, const Signature& sig)
{
  sat::validate(b);
  if (step == 0) throw std::invalid_argument("the step of a cycle must be at least 1");
  std::vector<ConditionCheck> checks;
  for (unsigned k = 0; k < step; ++k) {
    unsigned at = k + offset;
    checks.push_back(contradiction("base " + std::to_string(at), "S(" + std::to_string(at) + ") |= $false",
                                   substitute_parameter(s, numeral(at)), b, sig));
  }
  checks.push_back(set_entailment("step",
                                  "S(" + shifted("eta", offset + step) + ") |= S(" + shifted("eta", offset) + ")",
                                  substitute_parameter(s, eta_plus(offset + step)),
                                  substitute_parameter(s, eta_plus(offset)), b, sig));
  if (auto f = first_failure(checks)) return *f;
  CycleCertificate cert;
  cert.subject = s;
  cert.offset = offset;
  cert.step = step;
  cert.plain = false;
  cert.conditions = std::move(checks);
  cert.budget = b;
  return cert;
}

Checked<RefutationCertificate> check_refutation(const ClauseSet& r, const ClauseSet& s, unsigned n,
                                                const sat::Budget& b, const Signature& sig)
{
  Checked<CycleCertificate> cycle = check_clause_set_cycle(s, b, sig);
  std::vector<ConditionCheck> checks = refutation_conditions(r, s, "S(eta)", n, b, sig);
  if (!certified(cycle)) {
    CheckFailure f = std::get<CheckFailure>(cycle);
    f.conditions.insert(f.conditions.end(), checks.begin(), checks.end());
    return f;
  }
  if (auto f = first_failure(checks)) {
    const CycleCertificate& c = std::get<CycleCertificate>(cycle);
    f->conditions.insert(f->conditions.begin(), c.conditions.begin(), c.conditions.end());
    return *f;
  }
  RefutationCertificate cert;
  cert.refuted = r;
  cert.cycle = std::get<CycleCertificate>(cycle);
  cert.n = n;
  cert.conditions = std::move(checks);
  return cert;
}

Checked<RefutationCertificate> check_offset_refutation(const ClauseSet& r, const ClauseSet& s, unsigned offset,
                                                       unsigned step, unsigned n, const sat::Budget& b,
                                                       const Signature& sig)
{
  Checked<CycleCertificate> cycle = check_offset_step_cycle(s, offset, step, b, sig);
  std::vector<ConditionCheck> checks = refutation_conditions(
    r, substitute_parameter(s, eta_plus(offset)), "S(" + shifted("eta", offset) + ")", n, b, sig);
  if (!certified(cycle)) {
    CheckFailure f = std::get<CheckFailure>(cycle);
    f.conditions.insert(f.conditions.end(), checks.begin(), checks.end());
    return f;
  }
  if (auto f = first_failure(checks)) {
    const CycleCertificate& c = std::get<CycleCertificate>(cycle);
    f->conditions.insert(f->conditions.begin(), c.conditions.begin(), c.conditions.end());
    return *f;
  }
  RefutationCertificate cert;
  cert.refuted = r;
  cert.cycle = std::get<CycleCertificate>(cycle);
  cert.n = n;
  cert.conditions = std::move(checks);
  return cert;
}

Checked<RefutationCertificate> search_refutation(const ClauseSet& r, const ClauseSet& s, unsigned max_n,
                                                 const sat::Budget& b, const Signature& sig)
{
  Checked<CycleCertificate> cycle = check_clause_set_cycle(s, b, sig);
  if (!certified(cycle)) return std::get<CheckFailure>(cycle);
  const CycleCertificate& c = std::get<CycleCertificate>(cycle);
  CheckFailure last;
  for (unsigned n = 0; n <= max_n; ++n) {
    std::vector<ConditionCheck> checks = refutation_conditions(r, s, "S(eta)", n, b, sig);
    if (auto f = first_failure(checks)) {
      last = *f;
      last.condition += " (n = " + std::to_string(n) + ")";
      last.conditions.insert(last.conditions.begin(), c.conditions.begin(), c.conditions.end());
      continue;
    }
    RefutationCertificate cert;
    cert.refuted = r;
    cert.cycle = c;
    cert.n = n;
    cert.conditions = std::move(checks);
    return cert;
  }
  return last;
}

ClauseSet distribute(const std::vector<ClauseSet>& disjuncts)
{
  std::vector<std::vector<Literal>> acc = {{}};
  VarId offset = 0;
  for (const ClauseSet& part : disjuncts) {
    VarId width = 0;
    for (const Clause& c : part) width = std::max(width, normalize_variables(c).variable_bound());
    std::vector<std::vector<Literal>> next;
    for (const auto& prefix : acc) {
      for (const Clause& c : part) {
        Clause renamed = shift_variables(normalize_variables(c), offset);
        std::vector<Literal> joined = prefix;
        joined.insert(joined.end(), renamed.literals().begin(), renamed.literals().end());
        next.push_back(std::move(joined));
      }
    }
    acc = std::move(next);
    offset += width;
  }
  ClauseSet out;
  for (auto& lits : acc) out.push_back(normalize_variables(remove_duplicate_literals(Clause(std::move(lits)))));
  return out;
}

ClauseSet normalize_offset_step(const ClauseSet& s, unsigned offset, unsigned step)
{
  if (step == 0) throw std::invalid_argument("the step of a cycle must be at least 1");
  ClauseSet t = substitute_parameter(s, eta_plus(offset));
  std::vector<ClauseSet> parts;
  for (unsigned l = 0; l < step; ++l) parts.push_back(substitute_parameter(t, eta_plus(l)));
  return distribute(parts);
}

Formula case_distinction(unsigned n, const Term& x)
{
  if (!x.is_variable() || x.sort() != kNatSort) throw std::invalid_argument("C_n needs a nat variable");
  std::vector<Formula> parts;
  for (unsigned i = 0; i < n; ++i) parts.push_back(Formula::atom(Literal::equation(true, x, numeral(i))));
  Term y = Term::variable(x.id() + 1, kNatSort);
  parts.push_back(Formula::exists(y, Formula::atom(Literal::equation(true, x, succ_n(y, n)))));
  return Formula::disjunction(std::move(parts));
}

Formula induction_axiom(const Formula& psi, const Term& x)
{
  auto at = [&](const Term& t) {
    Substitution sub;
    sub.bind(x.id(), t);
    return sub.apply(psi);
  };
  Formula step = Formula::forall(x, Formula::implication(psi, at(succ(x))));
  return Formula::implication(at(zero()), Formula::implication(step, Formula::forall(x, psi)));
}

namespace {

ConditionCheck formula_check(std::string name, const Formula& goal, const sat::Budget& b, const Signature& sig)
{
  ConditionCheck c;
  c.name = std::move(name);
  c.goal = "|= obligation";
  c.runs.push_back(sat::entails_formula({}, goal, b, sig));
  c.status = c.runs.back().status;
  return c;
}

} // namespace

InductionObligation emit_induction(const RefutationCertificate& cert, const sat::Budget& b, const Signature& sig)
{
  const ClauseSet& r = cert.refuted;
  const ClauseSet& s = cert.cycle.subject;
  unsigned n = cert.n;
  Formula neg_s = negate_clause_set(s);
  Formula r_formula = clause_set_formula(r);
  VarId fresh = std::max(variable_bound(neg_s), variable_bound(r_formula));
  InductionObligation out;
  out.variable = Term::variable(fresh, kNatSort);
  out.negated_cycle = abstract_parameter(neg_s, out.variable);
  out.induction_axiom = induction_axiom(out.negated_cycle, out.variable);
  out.case_distinction = case_distinction(n, out.variable);
  for (unsigned k = 0; k < n; ++k) {
    Formula f = Formula::negation(clause_set_formula(substitute_parameter(r, numeral(k))));
    std::string name = "base ~R(" + std::to_string(k) + ")";
    out.obligations.push_back({name, f, formula_check(name, f, b, sig)});
  }
  Formula r_shifted = substitute_parameter(r_formula, succ_n(out.variable, n));
  Formula descent =
    Formula::forall(out.variable, Formula::implication(out.negated_cycle, Formula::negation(r_shifted)));
  std::string name = "step ~S(x) -> ~R(" + shifted("x", n) + ")";
  out.obligations.push_back({name, descent, formula_check(name, descent, b, sig)});
  return out;
}

InductionObligation emit_induction(const ClauseSet& r, const ClauseSet& s, unsigned n, const sat::Budget& b,
                                   const Signature& sig)
{
  Checked<RefutationCertificate> cert = check_refutation(r, s, n, b, sig);
  if (!certified(cert)) {
    throw std::invalid_argument("refusing to emit induction obligations: the refutation is not certified (" +
                                std::get<CheckFailure>(cert).condition + ")");
  }
  return emit_induction(std::get<RefutationCertificate>(cert), b, sig);
}

std::vector<ConditionCheck> case_distinction_inductive(unsigned n, const sat::Budget& b)
{
  Signature sig;
  Term x = Term::variable(0, kNatSort);
  Formula c = case_distinction(n, x);
  Substitution at_zero;
  at_zero.bind(0, zero());
  Substitution at_succ;
  at_succ.bind(0, succ(x));
  std::vector<ConditionCheck> out;
  out.push_back(formula_check("C_" + std::to_string(n) + "(0)", at_zero.apply(c), b, sig));
  Formula step = Formula::forall(x, Formula::implication(c, at_succ.apply(c)));
  out.push_back(formula_check("C_" + std::to_string(n) + "(x) -> C_" + std::to_string(n) + "(s(x))", step, b, sig));
  return out;
}

} // namespace csc::cycles
