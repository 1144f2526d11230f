#include <doctest.h>

#include <random>

#include "csc/io/problem.hpp"
#include "csc/triangular/triangular.hpp"
#include "support/generators.hpp"

using namespace csc;
using namespace csc::tri;
using csc::testing::for_grid;

namespace {

Formula f_of(const char* text, const TriangularSignature& ts)
{
  return io::parse_formula(text, ts.sig);
}

Term t_of(const char* text, const TriangularSignature& ts)
{
  return io::parse_term(text, ts.sig);
}

/** Body of a universally closed formula and its bound variables. */
std::pair<Formula, std::vector<Term>> strip_universals(Formula f)
{
  std::vector<Term> vars;
  while (f.kind() == FormulaKind::Forall) {
    vars.push_back(f.bound());
    Formula body = f.child(0);
    f = body;
  }
  return {f, vars};
}

/** Whether every instance of the axiom with values up to @b bound holds. */
bool instances_hold(const Formula& axiom, unsigned bound, const StandardModelConfig& cfg, const TriangularSignature& ts)
{
  auto [body, vars] = strip_universals(axiom);
  bool ok = true;
  std::vector<std::uint64_t> v(vars.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i].id()] = v[i];
    ok = ok && eval_standard(body, a, cfg, ts) == Truth::True;
    std::size_t i = 0;
    while (i < vars.size() && ++v[i] > bound) v[i++] = 0;
    if (i == vars.size()) return ok;
  }
}

} // namespace

TEST_CASE("axiom lists")
{
  TriangularSignature ts = full_signature();
  std::vector<Formula> full = axioms(Theory::Full, ts);
  REQUIRE(full.size() == 9);
  CHECK(io::to_string(full[0], ts.sig) == "forall X0:nat. s(X0) != 0");
  CHECK(axioms(Theory::Prime, ts).size() == 4);
  CHECK(axioms(Theory::Inductive, ts).size() == 13);
  for (const Formula& f : axioms(Theory::Inductive, ts)) CHECK(free_variables(f).empty());
  CHECK_THROWS_AS(axioms(Theory::Full, prime_signature()), std::invalid_argument);

  StandardModelConfig cfg;
  for (const Formula& f : axioms(Theory::Inductive, ts)) CHECK(instances_hold(f, 8, cfg, ts));
}

TEST_CASE("the non-total triangle clause set")
{
  TriangularSignature ts = prime_signature();
  ClauseSet s = build_s_triangle(ts);
  REQUIRE(s.size() == 5);
  CHECK(s[2].is_ground());
  CHECK(s[2].size() == 1);
  CHECK(io::to_string(s[2], ts.sig) == "tri(0, 0)");
}

TEST_CASE("triangular numbers")
{
  CHECK(triangle(0) == 0);
  CHECK(triangle(4) == 10);
  CHECK(triangle(3) == 6);
  std::uint64_t sum = 0;
  for (std::uint64_t n = 0; n <= 100; ++n) {
    sum += n;
    CHECK(triangle(n) == sum);
  }
}

TEST_CASE("standard model evaluation")
{
  TriangularSignature ts = full_signature();
  StandardModelConfig cfg;
  CHECK(eval_standard(f_of("tri(3, 6)", ts), {}, cfg, ts) == Truth::True);
  CHECK(eval_standard(f_of("tri(3, 5)", ts), {}, cfg, ts) == Truth::False);
  Formula a9 = f_of("forall x:nat, y:nat, z:nat. tri(x, y) & tri(x, z) -> y = z", ts);
  CHECK(eval_standard(a9, {}, cfg, ts) == Truth::Unknown);
  auto [body, vars] = strip_universals(a9);
  Assignment a{{vars[0].id(), 2}, {vars[1].id(), 3}, {vars[2].id(), 3}};
  CHECK(eval_standard(body, a, cfg, ts) == Truth::True);
  CHECK(eval_standard(f_of("exists x:nat. tri(x, 10)", ts), {}, cfg, ts) == Truth::True);
  CHECK(eval_standard(f_of("exists x:nat. tri(x, 11)", ts), {}, cfg, ts) == Truth::Unknown);
  CHECK(eval_standard(f_of("forall x:nat. s(x) = x", ts), {}, cfg, ts) == Truth::False);
  CHECK(eval_standard(f_of("p(0) = 0", ts), {}, cfg, ts) == Truth::True);
  CHECK_THROWS_AS(eval_standard(f_of("tri(x, 0)", ts), {}, cfg, ts), std::invalid_argument);
}

TEST_CASE("the tri graph is the triangle function")
{
  TriangularSignature ts = full_signature();
  StandardModelConfig cfg;
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= 30; ++k) {
      Formula atom = Formula::atom(Literal::atom(true, make_predicate(ts.sig, ts.tri, {numeral(n), numeral(k)})));
      CHECK((eval_standard(atom, {}, cfg, ts) == Truth::True) == (k == triangle(n)));
    }
  }
}

TEST_CASE("functionality of tri is needed")
{
  TriangularSignature ts = full_signature();
  StandardModelConfig doubled;
  doubled.triangle_relation = [](std::uint64_t n, std::uint64_t v) { return v == triangle(n) || v == triangle(n) + 1; };
  std::vector<Formula> full = axioms(Theory::Full, ts);
  for (std::size_t i = 0; i < 8; ++i) CHECK_MESSAGE(instances_hold(full[i], 10, doubled, ts), "A" << i + 1);
  CHECK_FALSE(instances_hold(full[8], 10, doubled, ts));
}

TEST_CASE("normalization examples")
{
  TriangularSignature ts = full_signature();
  Formula p0 = normalize_simple(f_of("p(0) = 0", ts), ts);
  CHECK(p0 == f_of("(0 = 0 & s(0) = s(0)) | (0 != 0 & 0 = s(0))", ts));

  Formula simple = f_of("tri(s(x), y)", ts);
  CHECK(normalize_simple(simple, ts) == simple);
  CHECK(normalize_traced(simple, ts).steps.empty());

  Formula f = f_of("tri(p(x), y)", ts);
  Normalization n = normalize_traced(f, ts);
  REQUIRE_FALSE(n.steps.empty());
  Formula first = n.steps[0].result;
  CHECK(first == f_of("(x = 0 & tri(s(0), plus(s(0), y))) | (x != 0 & tri(x, plus(x, y)))", ts));
  CHECK(is_simple(n.result, ts));
  StandardModelConfig cfg;
  for_grid(2, 8, [&](const Assignment& a) {
    CHECK(eval_standard(f, a, cfg, ts) == eval_standard(first, a, cfg, ts));
    CHECK(eval_standard(f, a, cfg, ts) == eval_standard(n.result, a, cfg, ts));
  });
}

TEST_CASE("normalization preserves truth in the standard model and decreases its measure")
{
  TriangularSignature ts = full_signature();
  csc::testing::TriangularGenerator gen{ts, std::mt19937(3)};
  StandardModelConfig cfg;
  std::size_t with_p = 0;
  for (int round = 0; round < 60; ++round) {
    Formula f = gen.formula(3);
    Normalization n = normalize_traced(f, ts);
    CHECK(is_simple(n.result, ts));
    with_p += n.steps.empty() ? 0 : 1;
    unsigned phase = 1;
    for (const NormalizationStep& step : n.steps) {
      CHECK(step.phase >= phase);
      phase = step.phase;
      CHECK(step.after < step.before);
      // Earlier phases stay finished.
      for (unsigned done = 1; done < step.phase; ++done) CHECK(measure(step.result, done, ts).max_count == 0);
    }
    for_grid(3, 8, [&](const Assignment& a) {
      Truth before = eval_standard(f, a, cfg, ts);
      Truth after = eval_standard(n.result, a, cfg, ts);
      REQUIRE(before != Truth::Unknown);
      CHECK(before == after);
      CHECK(csc::testing::holds(n.result, a, ts) == (before == Truth::True));
    });
  }
  CHECK(with_p >= 30);
}

TEST_CASE("linear forms")
{
  TriangularSignature ts = full_signature();
  Term t = t_of("plus(s(s(plus(x, y))), x)", ts);
  LinearForm lf = linear_form(t, ts);
  REQUIRE(lf.coefficients.size() == 2);
  CHECK(lf.constant == 2);
  CHECK(lf.coefficients.begin()->second == 2);
  CHECK(std::next(lf.coefficients.begin())->second == 1);
  CHECK(linear_form(zero(), ts) == LinearForm{});
  CHECK(linear_form(Term::variable(0, kNatSort), ts) == LinearForm{{{0, 1}}, 0});
  CHECK_THROWS_AS(linear_form(t_of("p(x)", ts), ts), std::invalid_argument);

  csc::testing::TriangularGenerator gen{ts, std::mt19937(9)};
  int checked = 0;
  while (checked < 50) {
    Term u = gen.term(3);
    if (!is_simple(u, ts)) continue;
    ++checked;
    LinearForm form = linear_form(u, ts);
    for_grid(3, 8, [&](const Assignment& a) { CHECK(form.eval(a) == eval_term(u, a, ts)); });
  }
}

TEST_CASE("herbrand gaps")
{
  TriangularSignature ts = full_signature();
  CHECK(herbrand_gap({t_of("x", ts), t_of("plus(x, x)", ts)}, ts).m == 2);
  CHECK(herbrand_gap({t_of("x", ts)}, ts).m == 2);
  CHECK(herbrand_gap({}, ts).m == 0);
  CHECK_THROWS_AS(herbrand_gap({t_of("p(x)", ts)}, ts), std::invalid_argument);
  CHECK_THROWS_AS(herbrand_gap({t_of("plus(x, y)", ts)}, ts), std::invalid_argument);

  HerbrandGap g = herbrand_gap({t_of("x", ts), t_of("s(x)", ts)}, ts);
  CHECK(g.m == 3);
  CHECK(g.stop_bound == 5);
  // 3x meets the triangle numbers at m = 0 and m = 5, so a bound of a + k + 1 = 4 would be too small.
  Term three_x = t_of("plus(plus(x, x), x)", ts);
  CHECK(eval_term(three_x, {{0, 5}}, ts) == triangle(5));
  CHECK(herbrand_gap({three_x}, ts).stop_bound == 7);
  StandardModelConfig cfg;
  std::mt19937 rng(1);
  csc::testing::TriangularGenerator gen{ts, std::mt19937(4)};
  for (int round = 0; round < 40; ++round) {
    std::vector<Term> terms;
    std::size_t k = rng() % 4;
    while (terms.size() < k) {
      Term u = gen.term(3);
      if (!is_simple(u, ts)) continue;
      // Rename all variables to X0.
      terms.push_back(map_term(u, [](const Term& v) -> std::optional<Term> {
        if (v.is_variable()) return Term::variable(0, kNatSort);
        return std::nullopt;
      }));
    }
    HerbrandGap gap = herbrand_gap(terms, ts);
    for (const Term& u : terms) {
      Formula atom = Formula::atom(Literal::atom(true, make_predicate(ts.sig, ts.tri, {Term::variable(0, kNatSort), u})));
      CHECK(eval_standard(atom, {{0, gap.m}}, cfg, ts) == Truth::False);
    }
    // Brute force: every smaller m is covered by some term.
    for (std::uint64_t m = 0; m < gap.m; ++m) {
      bool covered = false;
      for (const Term& u : terms) covered = covered || eval_term(u, {{0, m}}, ts) == triangle(m);
      CHECK(covered);
    }
    for (std::uint64_t m = gap.stop_bound; m < gap.stop_bound + 20; ++m) {
      for (const Term& u : terms) CHECK(eval_term(u, {{0, m}}, ts) < triangle(m));
    }
  }
}
