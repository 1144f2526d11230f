#include "csc/triangular/triangular.hpp"

#include <set>
#include <stdexcept>

#include "csc/io/problem.hpp"

namespace csc::tri {

TriangularSignature full_signature()
{
  TriangularSignature ts;
  ts.p = ts.sig.add_function("p", {kNatSort}, kNatSort);
  ts.plus = ts.sig.add_function("plus", {kNatSort, kNatSort}, kNatSort);
  ts.tri = ts.sig.add_predicate("tri", {kNatSort, kNatSort});
  return ts;
}

TriangularSignature prime_signature()
{
  TriangularSignature ts;
  ts.plus = ts.sig.add_function("plus", {kNatSort, kNatSort}, kNatSort);
  ts.tri = ts.sig.add_predicate("tri", {kNatSort, kNatSort});
  return ts;
}

TriangularSignature symbols_of(const Signature& sig)
{
  TriangularSignature ts;
  ts.sig = sig;
  auto plus = sig.find_function("plus");
  auto tri = sig.find_predicate("tri");
  if (!plus || !tri) throw std::invalid_argument("the signature needs plus and tri");
  ts.plus = *plus;
  ts.tri = *tri;
  ts.p = sig.find_function("p");
  return ts;
}

namespace {

const char* const kAxiomsA[] = {
  "forall x:nat. s(x) != 0",
  "p(0) = 0",
  "forall x:nat. p(s(x)) = x",
  "forall x:nat. plus(x, 0) = x",
  "forall x:nat, y:nat. plus(x, s(y)) = s(plus(x, y))",
  "tri(0, 0)",
  "forall x:nat, y:nat. tri(x, y) -> tri(s(x), plus(s(x), y))",
  "forall x:nat, y:nat. tri(s(x), plus(s(x), y)) -> tri(x, y)",
  "forall x:nat, y:nat, z:nat. tri(x, y) & tri(x, z) -> y = z",
};

const char* const kAxiomsB[] = {
  "forall x:nat. x != 0 -> x = s(p(x))",
  "forall x:nat, y:nat. plus(x, y) = plus(y, x)",
  "forall x:nat, y:nat, z:nat. plus(plus(x, y), z) = plus(x, plus(y, z))",
  "forall x:nat, y:nat, z:nat. plus(x, y) = plus(x, z) -> y = z",
};

} // namespace

std::vector<Formula> axioms(Theory which, const TriangularSignature& ts)
{
  if (which != Theory::Prime && !ts.p) throw std::invalid_argument("these axioms need the predecessor p");
  std::vector<Formula> out;
  std::size_t first = which == Theory::Prime ? 3 : 0;
  std::size_t last = which == Theory::Prime ? 7 : 9;
  for (std::size_t i = first; i < last; ++i) out.push_back(io::parse_formula(kAxiomsA[i], ts.sig));
  if (which == Theory::Inductive) {
    for (const char* b : kAxiomsB) out.push_back(io::parse_formula(b, ts.sig));
  }
  return out;
}

ClauseSet build_s_triangle(const TriangularSignature& ts)
{
  return io::parse_problem("clause plus(x, 0) = x.\n"
                           "clause plus(x, s(y)) = s(plus(x, y)).\n"
                           "clause tri(0, 0).\n"
                           "clause tri(x, y) => tri(s(x), plus(s(x), y)).\n"
                           "clause ~tri(eta, y).\n",
                           &ts.sig)
    .clauses();
}

std::uint64_t triangle(std::uint64_t n)
{
  return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
}

std::string truth_name(Truth t)
{
  switch (t) {
  case Truth::False: return "false";
  case Truth::True: return "true";
  case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

std::uint64_t eval_term(const Term& t, const Assignment& a, const TriangularSignature& ts)
{
  switch (t.kind()) {
  case TermKind::Variable: {
    auto it = a.find(t.id());
    if (it == a.end()) throw std::invalid_argument("unassigned variable X" + std::to_string(t.id()));
    return it->second;
  }
  case TermKind::Function:
    if (t.id() == kZero) return 0;
    if (t.id() == kSucc) return eval_term(t.arg(0), a, ts) + 1;
    if (ts.p && t.id() == *ts.p) {
      std::uint64_t v = eval_term(t.arg(0), a, ts);
      return v == 0 ? 0 : v - 1;
    }
    if (t.id() == ts.plus) return eval_term(t.arg(0), a, ts) + eval_term(t.arg(1), a, ts);
    throw std::invalid_argument("no standard interpretation for a function symbol");
  case TermKind::Parameter: throw std::invalid_argument("eta has no standard interpretation");
  default: throw std::invalid_argument("not a nat term");
  }
}

namespace {

bool is_triangle(std::uint64_t n, std::uint64_t v)
{
  // triangle(n) > 2^64 for n >= 2^33.
  if (n >= (std::uint64_t(1) << 32)) return false;
  return triangle(n) == v;
}

Truth kleene_not(Truth t)
{
  if (t == Truth::Unknown) return t;
  return t == Truth::True ? Truth::False : Truth::True;
}

Truth eval(const Formula& f, Assignment& a, const StandardModelConfig& cfg, const TriangularSignature& ts)
{
  switch (f.kind()) {
  case FormulaKind::True: return Truth::True;
  case FormulaKind::False: return Truth::False;
  case FormulaKind::Atom: {
    const Literal& l = f.atom();
    bool v;
    if (l.is_equation()) {
      v = eval_term(l.lhs(), a, ts) == eval_term(l.rhs(), a, ts);
    } else {
      if (l.predicate() != ts.tri) throw std::invalid_argument("no standard interpretation for a predicate");
      std::uint64_t n = eval_term(l.args()[0], a, ts);
      std::uint64_t m = eval_term(l.args()[1], a, ts);
      v = cfg.triangle_relation ? cfg.triangle_relation(n, m) : is_triangle(n, m);
    }
    return v ? Truth::True : Truth::False;
  }
  case FormulaKind::Not: return kleene_not(eval(f.child(0), a, cfg, ts));
  case FormulaKind::And:
  case FormulaKind::Or: {
    Truth absorbing = f.kind() == FormulaKind::And ? Truth::False : Truth::True;
    Truth out = kleene_not(absorbing);
    for (const Formula& c : f.children()) {
      Truth t = eval(c, a, cfg, ts);
      if (t == absorbing) return t;
      if (t == Truth::Unknown) out = Truth::Unknown;
    }
    return out;
  }
  case FormulaKind::Implies: {
    Truth lhs = eval(f.child(0), a, cfg, ts);
    if (lhs == Truth::False) return Truth::True;
    Truth rhs = eval(f.child(1), a, cfg, ts);
    if (rhs == Truth::True) return Truth::True;
    if (lhs == Truth::True && rhs == Truth::False) return Truth::False;
    return Truth::Unknown;
  }
  case FormulaKind::Iff: {
    Truth lhs = eval(f.child(0), a, cfg, ts);
    Truth rhs = eval(f.child(1), a, cfg, ts);
    if (lhs == Truth::Unknown || rhs == Truth::Unknown) return Truth::Unknown;
    return lhs == rhs ? Truth::True : Truth::False;
  }
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    // The bounded search can only refute a universal or confirm an existential.
    Truth decisive = f.kind() == FormulaKind::Forall ? Truth::False : Truth::True;
    VarId v = f.bound().id();
    std::optional<std::uint64_t> saved;
    if (auto it = a.find(v); it != a.end()) saved = it->second;
    Truth out = Truth::Unknown;
    for (std::uint64_t d = 0; d <= cfg.bound; ++d) {
      a[v] = d;
      if (eval(f.child(0), a, cfg, ts) == decisive) {
        out = decisive;
        break;
      }
    }
    if (saved) {
      a[v] = *saved;
    } else {
      a.erase(v);
    }
    return out;
  }
  }
  return Truth::Unknown;
}

} // namespace

Truth eval_standard(const Formula& f, const Assignment& a, const StandardModelConfig& cfg,
                    const TriangularSignature& ts)
{
  Assignment env = a;
  return eval(f, env, cfg, ts);
}

bool is_simple(const Term& t, const TriangularSignature& ts)
{
  return !ts.p || count_symbol(t, *ts.p) == 0;
}

bool is_simple(const Formula& f, const TriangularSignature& ts)
{
  switch (f.kind()) {
  case FormulaKind::True:
  case FormulaKind::False: return true;
  case FormulaKind::Atom:
    return is_simple(f.atom().lhs(), ts) && (!f.atom().is_equation() || is_simple(f.atom().rhs(), ts));
  default:
    for (const Formula& c : f.children()) {
      if (!is_simple(c, ts)) return false;
    }
    return true;
  }
}

std::uint64_t LinearForm::eval(const Assignment& a) const
{
  std::uint64_t out = constant;
  for (const auto& [v, m] : coefficients) out += m * a.at(v);
  return out;
}

LinearForm linear_form(const Term& t, const TriangularSignature& ts)
{
  if (t.sort() != kNatSort) throw std::invalid_argument("linear forms need a nat term");
  LinearForm out;
  switch (t.kind()) {
  case TermKind::Variable: out.coefficients[t.id()] = 1; return out;
  case TermKind::Function:
    if (t.id() == kZero) return out;
    if (t.id() == kSucc) {
      out = linear_form(t.arg(0), ts);
      ++out.constant;
      return out;
    }
    if (t.id() == ts.plus) {
      out = linear_form(t.arg(0), ts);
      LinearForm rhs = linear_form(t.arg(1), ts);
      for (const auto& [v, m] : rhs.coefficients) out.coefficients[v] += m;
      out.constant += rhs.constant;
      return out;
    }
    if (ts.p && t.id() == *ts.p) throw std::invalid_argument("the term contains p");
    throw std::invalid_argument("linear forms need terms over 0, s and plus");
  default: throw std::invalid_argument("linear forms need terms over 0, s and plus");
  }
}

HerbrandGap herbrand_gap(const std::vector<Term>& terms, const TriangularSignature& ts)
{
  std::vector<LinearForm> forms;
  std::set<VarId> vars;
  for (const Term& t : terms) {
    forms.push_back(linear_form(t, ts));
    for (const auto& [v, m] : forms.back().coefficients) vars.insert(v);
  }
  if (vars.size() > 1) throw std::invalid_argument("the terms may use only one variable");
  // With m >= 2(a + k) + 1, triangle(m) >= m(a + k + 1) > a m + k.
  std::uint64_t widest = 0;
  for (const LinearForm& f : forms) {
    std::uint64_t a = f.coefficients.empty() ? 0 : f.coefficients.begin()->second;
    widest = std::max(widest, a + f.constant);
  }
  HerbrandGap out;
  out.stop_bound = 2 * widest + 1;
  for (std::uint64_t m = 0; m <= out.stop_bound; ++m) {
    bool hit = false;
    for (const LinearForm& f : forms) {
      std::uint64_t a = f.coefficients.empty() ? 0 : f.coefficients.begin()->second;
      hit = hit || triangle(m) == a * m + f.constant;
    }
    if (!hit) {
      out.m = m;
      return out;
    }
  }
  throw std::logic_error("no gap below the stop bound");
}

} // namespace csc::tri
