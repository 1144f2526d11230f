#include <doctest.h>

#include <random>

#include "csc/core/operations.hpp"
#include "csc/saturation/clausify.hpp"
#include "csc/saturation/engine.hpp"
#include "csc/saturation/ordering.hpp"
#include "csc/saturation/proof_check.hpp"
#include "csc/saturation/subsumption.hpp"
#include "support/finite_model.hpp"
#include "support/problems.hpp"

using namespace csc;
using namespace csc::sat;
using csc::testing::clause;
using csc::testing::clauses;

namespace {

Signature pq()
{
  Signature sig;
  sig.add_predicate("P", {kNatSort});
  sig.add_predicate("Q", {kNatSort});
  return sig;
}

Signature triangle_signature()
{
  Signature sig;
  sig.add_function("plus", {kNatSort, kNatSort}, kNatSort);
  sig.add_predicate("tri", {kNatSort, kNatSort});
  return sig;
}

const char* const kSTriangle = "clause plus(x, 0) = x.\n"
                               "clause plus(x, s(y)) = s(plus(x, y)).\n"
                               "clause tri(0, 0).\n"
                               "clause tri(x, y) => tri(s(x), plus(s(x), y)).\n"
                               "clause ~tri(eta, y).\n";

void check_replay(const EntailmentVerdict& v)
{
  if (v.status != Status::Proved) return;
  ReplayResult r = replay(v);
  CHECK_MESSAGE(r.ok, r.message);
}

} // namespace

TEST_CASE("saturate: trivial sets")
{
  Signature sig = pq();
  Budget b;
  EntailmentVerdict contradiction = saturate(clauses("clause P(0).\nclause ~P(0).", sig), b, sig);
  CHECK(contradiction.status == Status::Proved);
  check_replay(contradiction);
  CHECK(saturate(clauses("clause P(0).", sig), b, sig).status == Status::CounterSatisfiable);
  CHECK(saturate({}, b, sig).status == Status::CounterSatisfiable);
  CHECK(saturate({Clause()}, b, sig).status == Status::Proved);
}

TEST_CASE("saturate: the non-total triangle set at zero")
{
  Signature sig = triangle_signature();
  ClauseSet s = substitute_parameter(clauses(kSTriangle, sig), zero());
  EntailmentVerdict v = saturate(s, Budget(), sig);
  CHECK(v.status == Status::Proved);
  check_replay(v);
}

TEST_CASE("entails: modus ponens through the parameter")
{
  Signature sig = pq();
  ClauseSet s = clauses("clause P(s(eta)).\nclause P(s(x)) => P(x).", sig);
  EntailmentVerdict v = entails(s, clause("P(eta)", sig), Budget(), sig);
  CHECK(v.status == Status::Proved);
  check_replay(v);
  CHECK(entails({}, clause("P(eta)", sig), Budget(), sig).status == Status::CounterSatisfiable);
}

TEST_CASE("entails: paramodulation")
{
  Signature sig;
  SortId i = sig.add_sort("i");
  sig.add_function("a", {}, i);
  sig.add_function("b", {}, i);
  sig.add_predicate("P", {i});
  ClauseSet s = clauses("clause a = b.\nclause P(a).", sig);
  EntailmentVerdict v = entails(s, clause("P(b)", sig), Budget(), sig);
  CHECK(v.status == Status::Proved);
  REQUIRE(v.derivation);
  check_replay(v);
  bool used = false;
  for (const DerivationStep& step : v.derivation->steps) used |= step.rule == Rule::Superposition;
  CHECK(used);
}

TEST_CASE("entails: equality reasoning with variables and factoring")
{
  Signature sig;
  SortId i = sig.add_sort("i");
  sig.add_function("a", {}, i);
  sig.add_function("b", {}, i);
  sig.add_function("c", {}, i);
  sig.add_function("f", {i}, i);
  sig.add_predicate("P", {i});
  Budget b;
  // Every element equals a.
  CHECK(entails(clauses("clause x = a.", sig), clause("b = c", sig), b, sig).status == Status::Proved);
  // Congruence.
  EntailmentVerdict cong = entails(clauses("clause a = b.", sig), clause("f(a) = f(b)", sig), b, sig);
  CHECK(cong.status == Status::Proved);
  check_replay(cong);
  // Factoring is needed: P(x) | P(a) with ~P(a).
  EntailmentVerdict fact = saturate(clauses("clause P(x) | P(y).\nclause ~P(a).", sig), b, sig);
  CHECK(fact.status == Status::Proved);
  check_replay(fact);
  // Equality factoring: a = b | a = c, b != a, c != a.
  EntailmentVerdict eqf = saturate(clauses("clause a = b | a = c.\nclause b != a.\nclause c != a.", sig), b, sig);
  CHECK(eqf.status == Status::Proved);
  check_replay(eqf);
  CHECK(saturate(clauses("clause a = b | a = c.\nclause b != a.", sig), b, sig).status == Status::CounterSatisfiable);
  CHECK(saturate(clauses("clause f(x) != x | P(x).\nclause f(a) = a.\nclause ~P(a).", sig), b, sig).status ==
        Status::Proved);
}

TEST_CASE("entails_set")
{
  Signature sig = pq();
  ClauseSet s = clauses("clause P(eta).\nclause ~P(0).\nclause P(s(x)) => P(x).", sig);
  SetVerdict step = entails_set(substitute_parameter(s, succ(Term::parameter())), s, Budget(), sig);
  CHECK(step.status == Status::Proved);
  for (const EntailmentVerdict& v : step.parts) check_replay(v);
  SetVerdict self = entails_set(s, s, Budget(), sig);
  CHECK(self.status == Status::Proved);
  CHECK(self.generated() == 0);
  for (const EntailmentVerdict& v : self.parts) {
    REQUIRE(v.derivation);
    CHECK(v.derivation->steps.back().rule == Rule::Subsumption);
    check_replay(v);
  }
  CHECK(entails_set({}, clauses("clause P(eta).", sig), Budget(), sig).status == Status::CounterSatisfiable);
}

TEST_CASE("subsumption")
{
  Signature sig = triangle_signature();
  sig.add_predicate("P", {kNatSort});
  sig.add_predicate("Q", {kNatSort});
  CHECK(subsumes(clause("P(x)", sig), clause("P(0) | Q(y)", sig)));
  CHECK_FALSE(subsumes(clause("P(0)", sig), clause("P(x)", sig)));
  Clause c3 = clause("eta != s(x) | ~tri(x, y)", sig);
  CHECK(subsumes(c3, c3));
  CHECK(subsumes(clause("x = 0", sig), clause("0 = s(0)", sig)));
  CHECK_FALSE(subsumes(clause("P(x) | P(x)", sig), clause("P(0)", sig)));
  CHECK_FALSE(subsumes(clause("P(eta)", sig), clause("P(0)", sig)));
  CHECK(subsumes(clause("P(x) | Q(y)", sig), clause("Q(y) | P(x)", sig)));
  CHECK(subsumes(clause("tri(x, y) | tri(y, x)", sig), clause("tri(y, x) | tri(x, y)", sig)));
}

TEST_CASE("clausify")
{
  Signature sig = triangle_signature();
  sig.add_predicate("P", {kNatSort});
  Formula all = io::parse_formula("forall x:nat. P(x)", sig);
  ClauseSet c = clausify(all, sig);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == clause("P(x)", sig));

  Signature ext = sig;
  ClauseSet sk = clausify(io::parse_formula("~(forall y:nat. ~tri(eta, y))", sig), ext);
  REQUIRE(sk.size() == 1);
  REQUIRE(sk[0].size() == 1);
  const Literal& l = sk[0][0];
  CHECK(l.positive());
  CHECK(l.args()[0].is_parameter());
  CHECK(l.args()[1].is_function());
  CHECK(ext.function(l.args()[1].id()).skolem);
  CHECK(l.args()[1].arity() == 0);

  Signature ext2 = sig;
  Formula c1 = io::parse_formula("x = 0 | exists y:nat. x = s(y)", sig);
  ClauseSet neg = clausify_negation(c1, ext2);
  REQUIRE(neg.size() == 2);
  CHECK_FALSE(neg[0][0].positive());
  CHECK_FALSE(neg[1][0].positive());
  CHECK(neg[0][0].lhs() == neg[1][0].lhs());
  CHECK(neg[1].variables().size() == 1);
}

TEST_CASE("clausify is equisatisfiable on three-element models")
{
  // For every successor function on a 3-element domain the clauses of
  // ~forall x C_1(x) have a model (choosing the Skolem constant) exactly
  // when the formula itself is true.
  Signature sig;
  Formula c1 = io::parse_formula("forall x:nat. x = 0 | exists y:nat. x = s(y)", sig);
  Signature ext = sig;
  ClauseSet neg = clausify(Formula::negation(c1), ext);
  REQUIRE(neg.size() == 2);
  FuncId sk = neg[0][0].lhs().is_function() && neg[0][0].lhs().id() > kSucc ? neg[0][0].lhs().id()
                                                                                : neg[0][0].rhs().id();
  for (unsigned code = 0; code < 27; ++code) {
    unsigned succ_table[3] = {code % 3, (code / 3) % 3, code / 9};
    bool formula_true = false;
    bool clauses_satisfiable = false;
    for (unsigned choice = 0; choice < 3; ++choice) {
      csc::testing::FiniteModel m;
      m.domain = {3};
      m.function = [&](FuncId f, const std::vector<unsigned>& a) -> unsigned {
        if (f == kZero) return 0;
        if (f == kSucc) return succ_table[a[0]];
        if (f == sk) return choice;
        throw std::logic_error("unexpected symbol");
      };
      m.predicate = [](PredId, const std::vector<unsigned>&) { return false; };
      if (choice == 0) formula_true = m.satisfies(Formula::negation(c1));
      clauses_satisfiable |= m.satisfies(neg);
    }
    CHECK(formula_true == clauses_satisfiable);
  }
}

TEST_CASE("ordering properties on random terms")
{
  Signature sig;
  FuncId f = sig.add_function("f", {kNatSort, kNatSort}, kNatSort);
  FuncId a = sig.add_function("a", {}, kNatSort);
  std::mt19937 rng(11);
  std::function<Term(int, bool)> gen = [&](int depth, bool ground) -> Term {
    unsigned pick = rng() % (depth > 0 ? 6 : 4);
    switch (pick) {
    case 0: return zero();
    case 1: return Term::parameter();
    case 2: return ground ? make_application(sig, a, {}) : Term::variable(rng() % 3, kNatSort);
    case 3: return make_application(sig, a, {});
    case 4: return succ(gen(depth - 1, ground));
    default: return make_application(sig, f, {gen(depth - 1, ground), gen(depth - 1, ground)});
    }
  };
  for (int round = 0; round < 300; ++round) {
    Term s = gen(3, true);
    Term t = gen(3, true);
    Term u = gen(3, true);
    Order st = compare(s, t);
    CHECK(st != Order::Incomparable);
    CHECK((st == Order::Equal) == (s == t));
    CHECK(compare(t, s) == reverse(st));
    if (st == Order::Greater && compare(t, u) == Order::Greater) CHECK(compare(s, u) == Order::Greater);
    if (s.arity() > 0) CHECK(compare(s, s.arg(0)) == Order::Greater);

    Term p = gen(3, false);
    Term q = gen(3, false);
    if (compare(p, q) == Order::Greater) {
      Substitution sub;
      for (VarId v = 0; v < 3; ++v) sub.bind(v, gen(2, false));
      CHECK(compare(sub.apply(p), sub.apply(q)) == Order::Greater);
    }
  }
  CHECK(compare(succ(Term::variable(0, kNatSort)), Term::variable(0, kNatSort)) == Order::Greater);
  CHECK(compare(Term::variable(0, kNatSort), Term::variable(1, kNatSort)) == Order::Incomparable);
  CHECK(compare(zero(), Term::parameter()) == Order::Greater);
}

TEST_CASE("unifiers identify random terms")
{
  Signature sig;
  FuncId f = sig.add_function("f", {kNatSort, kNatSort}, kNatSort);
  std::mt19937 rng(5);
  std::function<Term(int)> gen = [&](int depth) -> Term {
    unsigned pick = rng() % (depth > 0 ? 5 : 3);
    switch (pick) {
    case 0: return zero();
    case 1: return Term::parameter();
    case 2: return Term::variable(rng() % 4, kNatSort);
    case 3: return succ(gen(depth - 1));
    default: return make_application(sig, f, {gen(depth - 1), gen(depth - 1)});
    }
  };
  int unified = 0;
  for (int round = 0; round < 500; ++round) {
    Term s = gen(3);
    Term t = gen(3);
    auto u = unifier(s, t);
    if (!u) continue;
    ++unified;
    CHECK(u->apply(s) == u->apply(t));
    CHECK_FALSE(u->parameter().has_value());
    for (const auto& [v, img] : u->bindings()) CHECK(u->apply(img) == img);
  }
  CHECK(unified > 20);
  CHECK_FALSE(unifier(Term::parameter(), zero()).has_value());
  CHECK_FALSE(unifier(Term::variable(0, kNatSort), succ(Term::variable(0, kNatSort))).has_value());
}

TEST_CASE("ground completeness against truth tables")
{
  // Atoms A, B, C; a clause picks for each atom: absent, positive or negative.
  Signature sig;
  PredId atoms[3] = {sig.add_predicate("A", {}), sig.add_predicate("B", {}), sig.add_predicate("C", {})};
  std::vector<Clause> all;
  std::vector<std::array<int, 3>> shapes;
  for (int code = 1; code < 27; ++code) {
    std::array<int, 3> shape = {code % 3, (code / 3) % 3, code / 9};
    std::vector<Literal> lits;
    for (int k = 0; k < 3; ++k) {
      if (shape[k] != 0) lits.push_back(Literal::atom(shape[k] == 1, Term::predicate(atoms[k], {})));
    }
    all.push_back(Clause(lits));
    shapes.push_back(shape);
  }
  auto satisfiable = [&](const std::vector<std::size_t>& pick) {
    for (int assignment = 0; assignment < 8; ++assignment) {
      bool ok = true;
      for (std::size_t c : pick) {
        bool sat = false;
        for (int k = 0; k < 3; ++k) {
          bool value = (assignment >> k) & 1;
          if ((shapes[c][k] == 1 && value) || (shapes[c][k] == 2 && !value)) sat = true;
        }
        ok &= sat;
      }
      if (ok) return true;
    }
    return false;
  };
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  auto run = [&](const std::vector<std::size_t>& pick) {
    ClauseSet s;
    for (std::size_t c : pick) s.push_back(all[c]);
    EntailmentVerdict v = saturate(s, Budget(), sig);
    Status expected = satisfiable(pick) ? Status::CounterSatisfiable : Status::Proved;
    ++checked;
    if (v.status != expected) ++disagreements;
    if (v.status == Status::Proved && !replay(v).ok) ++disagreements;
  };
  // Every set of at most three clauses.
  std::size_t n = all.size();
  run({});
  for (std::size_t a = 0; a < n; ++a) {
    run({a});
    for (std::size_t b = a + 1; b < n; ++b) {
      run({a, b});
      for (std::size_t c = b + 1; c < n; ++c) run({a, b, c});
    }
  }
  // Every set of full-width clauses.
  std::vector<std::size_t> full;
  for (std::size_t k = 0; k < n; ++k) {
    if (shapes[k][0] && shapes[k][1] && shapes[k][2]) full.push_back(k);
  }
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t k = 0; k < 8; ++k) {
      if (mask & (1u << k)) pick.push_back(full[k]);
    }
    run(pick);
  }
  CHECK(checked == 1 + 26 + 325 + 2600 + 256);
  CHECK(disagreements == 0);
}

TEST_CASE("verdicts do not depend on treating eta as a parameter")
{
  Signature sig = pq();
  FuncId c = sig.add_function("c", {}, kNatSort);
  Term constant = make_application(sig, c, {});
  std::vector<std::pair<std::string, std::string>> cases = {
    {"clause P(s(eta)).\nclause P(s(x)) => P(x).", "P(eta)"},
    {"clause Q(eta).\nclause Q(s(x)) => P(x).", "P(eta)"},
    {"clause P(eta) | Q(eta).\nclause ~Q(x).", "P(eta)"},
    {"clause P(s(eta)).", "P(eta)"},
  };
  for (const auto& [set, goal] : cases) {
    ClauseSet s = clauses(set, sig);
    Clause g = clause(goal, sig);
    Status with_eta = entails(s, g, Budget(), sig).status;
    Status with_constant =
      entails(substitute_parameter(s, constant), substitute_parameter(g, constant), Budget(), sig).status;
    CHECK(with_eta == with_constant);
  }
}

TEST_CASE("monotonicity on suite instances")
{
  Signature sig = pq();
  ClauseSet s = clauses("clause P(s(eta)).\nclause P(s(x)) => P(x).", sig);
  ClauseSet extra = clauses("clause Q(0).\nclause Q(x) => Q(s(x)).\nclause P(0) | Q(eta).", sig);
  Clause goal = clause("P(eta)", sig);
  Budget small;
  small.max_generated_clauses = 50;
  REQUIRE(entails(s, goal, small, sig).status == Status::Proved);
  ClauseSet bigger = s;
  bigger.insert(bigger.end(), extra.begin(), extra.end());
  Budget large;
  large.max_generated_clauses = 500;
  EntailmentVerdict v = entails(bigger, goal, large, sig);
  CHECK(v.status == Status::Proved);
  check_replay(v);
}

TEST_CASE("budget exhaustion is Unknown and depth truncation never claims saturation")
{
  Signature sig = pq();
  ClauseSet diverging = clauses("clause P(0).\nclause P(x) => P(s(x)).\nclause ~P(s(s(s(s(s(0)))))) | Q(0).", sig);
  Budget tiny;
  tiny.max_generated_clauses = 2;
  EntailmentVerdict v = saturate(diverging, tiny, sig);
  CHECK(v.status == Status::Unknown);
  CHECK(v.stats.budget_exhausted);
  CHECK(v.stats.generated == 2);
  // Ordered resolution saturates this chain without unfolding it.
  CHECK(saturate(clauses("clause P(0).\nclause P(x) => P(s(x)).", sig), Budget(), sig).status ==
        Status::CounterSatisfiable);
  Signature tri = triangle_signature();
  Budget shallow;
  shallow.max_clause_depth = 4;
  EntailmentVerdict d =
    saturate(clauses("clause tri(x, y) => tri(s(x), plus(s(x), y)).\nclause eta = x => ~tri(x, y).", tri), shallow, tri);
  CHECK(d.status == Status::Unknown);
  CHECK(d.stats.discarded_deep > 0);
  Budget zero_budget;
  zero_budget.max_generated_clauses = 0;
  CHECK_THROWS_AS(saturate({}, zero_budget, sig), std::invalid_argument);
}

TEST_CASE("replay rejects tampered derivations")
{
  Signature sig = pq();
  ClauseSet s = clauses("clause P(s(eta)).\nclause P(s(x)) => P(x).\nclause ~P(eta).", sig);
  EntailmentVerdict v = saturate(s, Budget(), sig);
  REQUIRE(v.status == Status::Proved);
  REQUIRE(replay(v).ok);
  Derivation bad = *v.derivation;
  for (DerivationStep& step : bad.steps) {
    if (step.rule == Rule::Resolution) {
      step.unifier = Substitution();
      break;
    }
  }
  CHECK_FALSE(replay(bad, v.input).ok);
  Derivation foreign = *v.derivation;
  foreign.steps.front().clause = clause("Q(0)", sig);
  CHECK_FALSE(replay(foreign, v.input).ok);
  Derivation truncated = *v.derivation;
  truncated.steps.pop_back();
  CHECK_FALSE(replay(truncated, v.input).ok);
}

TEST_CASE("ground equational sets agree with finite-model search")
{
  // Over constants a, b, c and a unary P every satisfiable ground set has
  // a model with at most three elements.
  Signature sig;
  SortId i = sig.add_sort("i");
  FuncId consts[3] = {sig.add_function("a", {}, i), sig.add_function("b", {}, i), sig.add_function("c", {}, i)};
  PredId p = sig.add_predicate("P", {i});
  std::vector<Literal> atoms;
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      atoms.push_back(Literal::equation(true, make_application(sig, consts[x], {}), make_application(sig, consts[y], {})));
    }
    atoms.push_back(Literal::atom(true, Term::predicate(p, {make_application(sig, consts[x], {})})));
  }
  std::mt19937 rng(3);
  int disagreements = 0;
  for (int round = 0; round < 400; ++round) {
    ClauseSet s;
    unsigned nclauses = 1 + rng() % 5;
    for (unsigned k = 0; k < nclauses; ++k) {
      std::vector<Literal> lits;
      unsigned width = 1 + rng() % 3;
      for (unsigned w = 0; w < width; ++w) {
        Literal l = atoms[rng() % atoms.size()];
        lits.push_back(rng() % 2 ? l : l.negated());
      }
      s.push_back(Clause(lits));
    }
    bool satisfiable = false;
    for (unsigned code = 0; code < 27 && !satisfiable; ++code) {
      unsigned value[3] = {code % 3, (code / 3) % 3, code / 9};
      for (unsigned pmask = 0; pmask < 8 && !satisfiable; ++pmask) {
        csc::testing::FiniteModel m;
        m.domain = {1, 3};
        m.function = [&](FuncId f, const std::vector<unsigned>&) -> unsigned {
          for (int k = 0; k < 3; ++k) {
            if (consts[k] == f) return value[k];
          }
          return 0;
        };
        m.predicate = [&](PredId, const std::vector<unsigned>& a) { return ((pmask >> a[0]) & 1) != 0; };
        satisfiable = m.satisfies(s);
      }
    }
    EntailmentVerdict v = saturate(s, Budget(), sig);
    Status expected = satisfiable ? Status::CounterSatisfiable : Status::Proved;
    if (v.status != expected) ++disagreements;
    if (v.status == Status::Proved && !replay(v).ok) ++disagreements;
  }
  CHECK(disagreements == 0);
}
