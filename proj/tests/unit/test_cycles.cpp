#include <doctest.h>

#include <random>

#include "csc/core/operations.hpp"
#include "csc/cycles/cycles.hpp"
#include "csc/cycles/report.hpp"
#include "csc/saturation/proof_check.hpp"
#include "support/finite_model.hpp"
#include "support/problems.hpp"

using namespace csc;
using namespace csc::cycles;
using csc::testing::clause;
using csc::testing::clauses;
using csc::testing::FiniteModel;
using csc::testing::load_problem;

namespace {

struct Example25
{
  io::ProblemFile r = load_problem("example25_refuted.csc");
  io::ProblemFile s = load_problem("example25.csc", &r.signature);
};

void check_runs(const std::vector<ConditionCheck>& checks)
{
  for (const ConditionCheck& c : checks) {
    for (const sat::EntailmentVerdict& v : c.runs) {
      if (v.status != sat::Status::Proved) continue;
      sat::ReplayResult r = sat::replay(v);
      CHECK_MESSAGE(r.ok, c.name << ": " << r.message);
    }
  }
}

// Enumerates every interpretation of 0, s, eta and the unary nat predicates
// over domains of size 1..max_size and returns one satisfying @b s.
std::optional<FiniteModel> find_unary_model(const ClauseSet& s, const Signature& sig, unsigned max_size)
{
  std::size_t preds = sig.predicate_count();
  for (unsigned n = 1; n <= max_size; ++n) {
    std::size_t succ_count = 1;
    for (unsigned i = 0; i < n; ++i) succ_count *= n;
    std::size_t pred_count = std::size_t(1) << (n * preds);
    for (std::size_t sc = 0; sc < succ_count; ++sc) {
      std::vector<unsigned> succ_table(n);
      std::size_t code = sc;
      for (unsigned i = 0; i < n; ++i) {
        succ_table[i] = code % n;
        code /= n;
      }
      for (std::size_t pc = 0; pc < pred_count; ++pc) {
        for (unsigned eta = 0; eta < n; ++eta) {
          FiniteModel m;
          m.domain = {n};
          m.eta = eta;
          m.function = [succ_table](FuncId f, const std::vector<unsigned>& a) {
            return f == kZero ? 0u : succ_table[a[0]];
          };
          m.predicate = [pc, n](PredId p, const std::vector<unsigned>& a) {
            return ((pc >> (p * n + a[0])) & 1) != 0;
          };
          if (m.satisfies(s)) return m;
        }
      }
    }
  }
  return std::nullopt;
}

ClauseSet with_negated(ClauseSet s, const Clause& ground_goal)
{
  for (const Literal& l : ground_goal.literals()) s.push_back(Clause({l.negated()}));
  return s;
}

} // namespace

TEST_CASE("unary cycle: the cycle and the refutation with n = 1")
{
  Example25 ex;
  const Signature& sig = ex.s.signature;
  sat::Budget b;
  b.max_generated_clauses = 500;

  auto cycle = check_clause_set_cycle(ex.s.clauses(), b, sig);
  REQUIRE(certified(cycle));
  const CycleCertificate& c = std::get<CycleCertificate>(cycle);
  CHECK(c.plain);
  REQUIRE(c.conditions.size() == 2);
  check_runs(c.conditions);

  auto ref = check_refutation(ex.r.clauses(), ex.s.clauses(), 1, b, sig);
  REQUIRE(certified(ref));
  const RefutationCertificate& cert = std::get<RefutationCertificate>(ref);
  CHECK(cert.n == 1);
  REQUIRE(cert.conditions.size() == 2);
  check_runs(cert.conditions);
  for (const ConditionCheck& k : cert.conditions) CHECK(k.generated() <= 500);

  auto found = search_refutation(ex.r.clauses(), ex.s.clauses(), 3, b, sig);
  REQUIRE(certified(found));
  CHECK(std::get<RefutationCertificate>(found).n == 1);
}

TEST_CASE("unary cycle: n = 0 fails and a finite model witnesses it")
{
  Example25 ex;
  const Signature& sig = ex.s.signature;
  auto ref = check_refutation(ex.r.clauses(), ex.s.clauses(), 0, sat::Budget(), sig);
  REQUIRE_FALSE(certified(ref));
  const CheckFailure& f = std::get<CheckFailure>(ref);
  CHECK(f.kind == FailureKind::RefutedCondition);
  CHECK(f.condition == "descent");

  // R(eta) & ~P(eta) has a model, so R(eta) does not entail S(eta).
  auto m = find_unary_model(with_negated(ex.r.clauses(), clause("P(eta)", sig)), sig, 3);
  REQUIRE(m.has_value());
  CHECK(m->satisfies(ex.r.clauses()));
}

TEST_CASE("refutations are sound: R(k) is contradictory for small k")
{
  Example25 ex;
  const Signature& sig = ex.s.signature;
  REQUIRE(certified(check_refutation(ex.r.clauses(), ex.s.clauses(), 1, sat::Budget(), sig)));
  for (unsigned k = 0; k <= 4; ++k) {
    ClauseSet rk = substitute_parameter(ex.r.clauses(), numeral(k));
    CHECK(sat::saturate(rk, sat::Budget(), sig).status == sat::Status::Proved);
    CHECK_FALSE(find_unary_model(rk, sig, 3).has_value());
  }
}

TEST_CASE("the non-total triangle set is a cycle and refutes itself")
{
  io::ProblemFile p = load_problem("s_triangle.csc");
  ClauseSet s = p.clauses();
  auto cycle = check_clause_set_cycle(s, sat::Budget(), p.signature);
  REQUIRE(certified(cycle));
  check_runs(std::get<CycleCertificate>(cycle).conditions);
  auto ref = check_refutation(s, s, 0, sat::Budget(), p.signature);
  REQUIRE(certified(ref));
  CHECK(std::get<RefutationCertificate>(ref).conditions.size() == 1);

  sat::Budget tiny;
  tiny.max_generated_clauses = 1;
  auto starved = check_clause_set_cycle(s, tiny, p.signature);
  REQUIRE_FALSE(certified(starved));
  CHECK(std::get<CheckFailure>(starved).kind == FailureKind::Budget);
}

TEST_CASE("the empty set is not a cycle")
{
  Signature sig;
  auto cycle = check_clause_set_cycle({}, sat::Budget(), sig);
  REQUIRE_FALSE(certified(cycle));
  const CheckFailure& f = std::get<CheckFailure>(cycle);
  CHECK(f.condition == "base");
  CHECK(f.kind == FailureKind::RefutedCondition);
  CHECK(f.conditions.size() == 2);
}

TEST_CASE("parity: an offset/step cycle with step 2 but not a plain cycle")
{
  io::ProblemFile p = load_problem("parity.csc");
  const Signature& sig = p.signature;
  ClauseSet s = p.clauses();
  auto two = check_offset_step_cycle(s, 0, 2, sat::Budget(), sig);
  REQUIRE(certified(two));
  const CycleCertificate& c = std::get<CycleCertificate>(two);
  CHECK_FALSE(c.plain);
  CHECK(c.step == 2);
  CHECK(c.conditions.size() == 3);
  check_runs(c.conditions);

  auto plain = check_clause_set_cycle(s, sat::Budget(), sig);
  REQUIRE_FALSE(certified(plain));
  CHECK(std::get<CheckFailure>(plain).condition == "step");
  CHECK_FALSE(certified(check_offset_step_cycle(s, 0, 1, sat::Budget(), sig)));

  // S(s eta) & ~E(eta) has a model: S(s eta) does not entail S(eta).
  auto m = find_unary_model(with_negated(substitute_parameter(s, succ(Term::parameter())), clause("E(eta)", sig)),
                            sig, 4);
  CHECK(m.has_value());
  CHECK_THROWS_AS(check_offset_step_cycle(s, 0, 0, sat::Budget(), sig), std::invalid_argument);
}

TEST_CASE("normalization of offset/step cycles")
{
  io::ProblemFile p = load_problem("parity.csc");
  const Signature& sig = p.signature;
  ClauseSet s = p.clauses();
  ClauseSet u = normalize_offset_step(s, 0, 2);
  CHECK(u.size() == 16);
  auto plain = check_clause_set_cycle(u, sat::Budget(), sig);
  REQUIRE(certified(plain));
  check_runs(std::get<CycleCertificate>(plain).conditions);

  for (unsigned i = 0; i < 3; ++i) {
    ClauseSet shifted = substitute_parameter(s, succ_n(Term::parameter(), i));
    ClauseSet expected;
    for (const Clause& c : shifted) expected.push_back(normalize_variables(c));
    CHECK(normalize_offset_step(s, i, 1) == expected);
  }

  Example25 ex;
  ClauseSet cyc = ex.s.clauses();
  CHECK(certified(check_offset_step_cycle(cyc, 1, 1, sat::Budget(), ex.s.signature)));
  CHECK(certified(check_clause_set_cycle(normalize_offset_step(cyc, 1, 1), sat::Budget(), ex.s.signature)));
}

TEST_CASE("distribution agrees with the disjunction in finite models")
{
  Signature sig;
  sig.add_predicate("P", {kNatSort});
  sig.add_predicate("Q", {kNatSort});
  std::mt19937 rng(7);
  auto random_literal = [&](bool ground) {
    Term arg = Term::parameter();
    switch (rng() % 3) {
    case 0: arg = numeral(rng() % 2); break;
    case 1: arg = ground ? succ(Term::parameter()) : Term::variable(rng() % 2, kNatSort); break;
    default: break;
    }
    if (!ground && rng() % 2) arg = succ(arg);
    return Literal::atom(rng() % 2 == 0, make_predicate(sig, PredId(rng() % 2), {arg}));
  };
  auto random_set = [&] {
    ClauseSet s;
    std::size_t n = 1 + rng() % 2;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Literal> lits;
      std::size_t k = 1 + rng() % 2;
      for (std::size_t j = 0; j < k; ++j) lits.push_back(random_literal(rng() % 2 == 0));
      s.push_back(normalize_variables(remove_duplicate_literals(Clause(lits))));
    }
    return s;
  };
  for (int round = 0; round < 60; ++round) {
    std::vector<ClauseSet> parts = {random_set(), random_set()};
    ClauseSet d = distribute(parts);
    CHECK(d.size() == parts[0].size() * parts[1].size());
    for (unsigned code = 0; code < 64; ++code) {
      FiniteModel m;
      m.domain = {2};
      m.eta = code & 1;
      unsigned succ_code = (code >> 1) & 3;
      m.function = [succ_code](FuncId f, const std::vector<unsigned>& a) {
        return f == kZero ? 0u : (succ_code >> a[0]) & 1;
      };
      unsigned pc = code >> 3;
      m.predicate = [pc](PredId p, const std::vector<unsigned>& a) { return ((pc >> (p * 2 + a[0])) & 1) != 0; };
      bool either = m.satisfies(parts[0]) || m.satisfies(parts[1]);
      CHECK(m.satisfies(d) == either);
    }
  }
}

TEST_CASE("offset refutations transfer to the normalized cycle")
{
  io::ProblemFile p = load_problem("parity.csc");
  const Signature& sig = p.signature;
  ClauseSet s = p.clauses();
  ClauseSet r = substitute_parameter(s, succ_n(Term::parameter(), 2));
  auto offset = check_offset_refutation(r, s, 0, 2, 0, sat::Budget(), sig);
  REQUIRE(certified(offset));
  CHECK_FALSE(std::get<RefutationCertificate>(offset).cycle.plain);
  auto plain = check_refutation(r, normalize_offset_step(s, 0, 2), 0, sat::Budget(), sig);
  CHECK(certified(plain));

  auto with_base = check_offset_refutation(s, s, 0, 2, 2, sat::Budget(), sig);
  REQUIRE(certified(with_base));
  CHECK(std::get<RefutationCertificate>(with_base).conditions.size() == 3);
}

TEST_CASE("induction obligations for a certified refutation")
{
  Example25 ex;
  const Signature& sig = ex.s.signature;
  InductionObligation ind = emit_induction(ex.r.clauses(), ex.s.clauses(), 1, sat::Budget(), sig);
  CHECK(is_sigma1(ind.negated_cycle));
  CHECK_FALSE(has_parameter(ind.negated_cycle));
  CHECK(ind.variable.sort() == kNatSort);
  CHECK(disjuncts(ind.case_distinction).size() == 2);
  REQUIRE(ind.obligations.size() == 2);
  for (const auto& o : ind.obligations) {
    CHECK_MESSAGE(o.check.status == sat::Status::Proved, o.name);
    CHECK(free_variables(o.formula).empty());
  }
  for (const Term& v : free_variables(clause_set_formula(ex.r.clauses()))) CHECK(v.id() != ind.variable.id());
  CHECK(free_variables(ind.induction_axiom).empty());

  io::ProblemFile t = load_problem("s_triangle.csc");
  InductionObligation self = emit_induction(t.clauses(), t.clauses(), 0, sat::Budget(), t.signature);
  CHECK(disjuncts(self.case_distinction).size() == 1);
  REQUIRE(self.obligations.size() == 1);
  CHECK(self.obligations[0].check.status == sat::Status::Proved);

  CHECK_THROWS_AS(emit_induction(ex.r.clauses(), ex.s.clauses(), 0, sat::Budget(), sig), std::invalid_argument);
}

TEST_CASE("the case distinction is inductive")
{
  for (unsigned n = 0; n <= 3; ++n) {
    for (const ConditionCheck& c : case_distinction_inductive(n, sat::Budget())) {
      CHECK_MESSAGE(c.status == sat::Status::Proved, c.name);
    }
  }
}

TEST_CASE("checks are deterministic and reports round-trip")
{
  Example25 ex;
  const Signature& sig = ex.s.signature;
  auto a = check_refutation(ex.r.clauses(), ex.s.clauses(), 1, sat::Budget(), sig);
  auto b = check_refutation(ex.r.clauses(), ex.s.clauses(), 1, sat::Budget(), sig);
  io::Report ra = refutation_report(a, ex.r.clauses(), ex.s.clauses(), sig);
  io::Report rb = refutation_report(b, ex.r.clauses(), ex.s.clauses(), sig);
  CHECK(ra == rb);
  CHECK(ra.verdict == io::Verdict::Certified);
  CHECK(ra.conditions.size() == 4);
  CHECK(ra.conditions[0].derivation.has_value());
  std::string structured = io::render_report(ra, io::ReportFormat::Structured);
  CHECK(io::parse_report(structured) == ra);

  auto failed = check_refutation(ex.r.clauses(), ex.s.clauses(), 0, sat::Budget(), sig);
  io::Report rf = refutation_report(failed, ex.r.clauses(), ex.s.clauses(), sig);
  CHECK(rf.verdict == io::Verdict::Refuted);
  CHECK(rf.result["failed_condition"] == "descent");
}
