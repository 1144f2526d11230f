#include <doctest.h>

#include <fstream>
#include <sstream>

#include "csc/io/problem.hpp"
#include "csc/io/report.hpp"

using namespace csc;
using namespace csc::io;

namespace {

std::string read_problem(const std::string& name)
{
  std::ifstream in(std::string(CSC_PROBLEM_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParseError parse_error(const std::string& text)
{
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("one-clause file")
{
  ProblemFile f = parse_problem("sort nat.\npred P : nat.\nclause P(eta).\n");
  REQUIRE(f.clauses().size() == 1);
  Clause c = f.clauses()[0];
  REQUIRE(c.size() == 1);
  CHECK(c[0].positive());
  CHECK(c[0].args()[0].is_parameter());
}

TEST_CASE("example file with five clauses")
{
  ProblemFile f = parse_problem(read_problem("example25_refuted.csc"));
  CHECK(f.clauses().size() == 5);
  CHECK(f.name == "example25-refuted");
  PredId q = *f.signature.find_predicate("Q");
  PredId p = *f.signature.find_predicate("P");
  Term x = Term::variable(0, kNatSort);
  Clause third({Literal::atom(false, Term::predicate(q, {succ(x)})), Literal::atom(true, Term::predicate(p, {x}))});
  CHECK(f.clauses()[2] == third);
}

TEST_CASE("all shipped problem files parse")
{
  for (const char* name : {"example25_refuted.csc", "example25.csc", "s_triangle.csc", "c1c2c3.csc", "empty.csc",
                           "parity.csc", "ncycle_parity.csc", "c1c2c3_shifted.csc"}) {
    CAPTURE(name);
    CHECK_NOTHROW(parse_problem(read_problem(name)));
  }
  CHECK(parse_problem(read_problem("c1c2c3.csc")).has_nclauses());
}

TEST_CASE("unbalanced parenthesis is reported at the open parenthesis")
{
  ParseError e = parse_error("pred P : nat.\nclause P(0");
  CHECK(e.kind() == ParseErrorKind::Syntax);
  CHECK(e.line() == 2);
  CHECK(e.column() == 9);
}

TEST_CASE("error kinds are distinguished")
{
  CHECK(parse_error("pred P : nat.\nclause P(0) @ P(0).").kind() == ParseErrorKind::Lexical);
  CHECK(parse_error("pred P : nat.\nclause P(0) P(0).").kind() == ParseErrorKind::Syntax);
  CHECK(parse_error("sort i.\nfunc c : i.\npred P : nat.\nclause P(c).").kind() == ParseErrorKind::Sort);
  CHECK(parse_error("clause P(0).").kind() == ParseErrorKind::Sort);
  CHECK(parse_error("pred P : nat.\nclause x = y.").kind() == ParseErrorKind::Sort);
  CHECK(parse_error("pred P : undeclared.").kind() == ParseErrorKind::Sort);
  CHECK(parse_error("pred P : nat.\nclause P(eta(0)).").kind() == ParseErrorKind::Sort);
}

TEST_CASE("implication sugar and numerals")
{
  ProblemFile f = parse_problem("pred P : nat.\npred Q : nat.\nclause P(x) & Q(2) => P(s(x)) | Q(x).");
  REQUIRE(f.clauses().size() == 1);
  Clause c = f.clauses()[0];
  REQUIRE(c.size() == 4);
  CHECK_FALSE(c[0].positive());
  CHECK_FALSE(c[1].positive());
  CHECK(c[1].args()[0] == numeral(2));
  CHECK(c[2].positive());
  CHECK(c[3].positive());
  CHECK(parse_problem("pred P : nat.\nclause P(0) => $false.").clauses()[0].size() == 1);
  CHECK(parse_problem("clause $false.").clauses()[0].empty());
}

TEST_CASE("sorts of variables are inferred through equations")
{
  ProblemFile f = parse_problem("sort i.\nfunc f : i -> i.\nclause x = y | f(y) != x.");
  Clause c = f.clauses()[0];
  CHECK(c[0].lhs().sort() == *f.signature.find_sort("i"));
  CHECK(c[0].rhs().sort() == *f.signature.find_sort("i"));
}

TEST_CASE("formulas parse with the usual precedences")
{
  Signature sig;
  sig.add_predicate("P", {kNatSort});
  sig.add_predicate("Q", {kNatSort});
  Formula f = parse_formula("forall x:nat. P(x) & Q(x) -> P(s(x)) | ~Q(0)", sig);
  REQUIRE(f.kind() == FormulaKind::Forall);
  const Formula& body = f.child(0);
  REQUIRE(body.kind() == FormulaKind::Implies);
  CHECK(body.child(0).kind() == FormulaKind::And);
  CHECK(body.child(1).kind() == FormulaKind::Or);
  Formula g = parse_formula("P(0) -> P(1) -> P(2)", sig);
  CHECK(g.child(1).kind() == FormulaKind::Implies);
  Formula free = parse_formula("P(y) & exists y:nat. Q(y)", sig);
  CHECK(free_variables(free).size() == 1);
}

TEST_CASE("print then parse is the identity")
{
  for (const char* name : {"example25_refuted.csc", "example25.csc", "s_triangle.csc", "c1c2c3.csc", "empty.csc",
                           "parity.csc", "ncycle_parity.csc", "c1c2c3_shifted.csc"}) {
    CAPTURE(name);
    ProblemFile f = parse_problem(read_problem(name));
    std::string printed = print_problem(f);
    ProblemFile g = parse_problem(printed);
    CHECK(g == f);
    CHECK(print_problem(g) == printed);
  }
  std::string text = "sort i.\nfunc c : -> i.\nfunc g : nat, i -> i.\npred P : nat.\npred R.\n"
                     "formula forall x:nat, y:i. (P(x) <-> ~R) -> exists z:nat. g(z, y) = c & (P(x) | P(0)).\n"
                     "formula ~(P(0) & P(1)) | ~~R | (R -> R) -> R.\n"
                     "formula ((P(0) | P(1)) | P(2)) & (exists x:nat. P(x)) & $true.\n";
  ProblemFile f = parse_problem(text);
  CHECK(parse_problem(print_problem(f)) == f);
}

TEST_CASE("signature can be shared with a base")
{
  ProblemFile r = parse_problem(read_problem("example25_refuted.csc"));
  ProblemFile s = parse_problem(read_problem("example25.csc"), &r.signature);
  CHECK(s.signature == r.signature);
  CHECK(s.clauses()[0][0].predicate() == *r.signature.find_predicate("P"));
}

namespace {

Report sample_report(Verdict v, const std::string& result)
{
  Report r;
  r.verdict = v;
  r.subject = "clause set cycle";
  r.conditions.push_back({"step", "S(s eta) |= S(eta)", "Proved", 12, 5000, std::vector<std::string>{"1. input"}});
  r.conditions.push_back({"base", "S(0) |= $false", result, 5000, 5000, std::nullopt});
  r.artifact = {{"file", "x.csc"}};
  r.result = {{"clauses", {"P(eta)"}}};
  return r;
}

} // namespace

TEST_CASE("text report rendering")
{
  std::string text = render_report(sample_report(Verdict::Certified, "Proved"), ReportFormat::Text);
  CHECK(text.find("CERTIFIED: clause set cycle") != std::string::npos);
  CHECK(text.find("condition step") != std::string::npos);
  CHECK(text.find("condition base") != std::string::npos);
  std::string unknown = render_report(sample_report(Verdict::Unknown, "Unknown"), ReportFormat::Text);
  CHECK(unknown.find("budget exhausted") != std::string::npos);
}

TEST_CASE("structured report round-trips")
{
  Report r = sample_report(Verdict::Refuted, "CounterSatisfiable");
  std::string s = render_report(r, ReportFormat::Structured);
  CHECK(parse_report(s) == r);
  CHECK(render_report(parse_report(s), ReportFormat::Structured) == s);
  CHECK_THROWS_AS(parse_report("{\"verdict\": 1}"), std::invalid_argument);
}
