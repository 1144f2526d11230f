#include "csc/saturation/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "csc/io/problem.hpp"
#include "csc/saturation/clausify.hpp"
#include "csc/saturation/ordering.hpp"
#include "csc/saturation/subsumption.hpp"

namespace csc::sat {

void validate(const Budget& b)
{
  if (b.max_generated_clauses == 0) throw std::invalid_argument("the clause budget must be positive");
  if (b.max_clause_depth == 0) throw std::invalid_argument("the depth budget must be positive");
  if (b.timeout && b.timeout->count() <= 0) throw std::invalid_argument("the timeout must be positive");
}

std::string status_name(Status s)
{
  switch (s) {
  case Status::Proved: return "Proved";
  case Status::CounterSatisfiable: return "CounterSatisfiable";
  case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string rule_name(Rule r)
{
  switch (r) {
  case Rule::Input: return "input";
  case Rule::Resolution: return "resolution";
  case Rule::Factoring: return "factoring";
  case Rule::Superposition: return "superposition";
  case Rule::EqualityResolution: return "equality resolution";
  case Rule::EqualityFactoring: return "equality factoring";
  case Rule::Subsumption: return "subsumption";
  }
  return "input";
}

namespace {

std::vector<Literal> resolve_all(const Clause& c, const Bindings& b)
{
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c.literals()) out.push_back(b.resolve(l));
  return out;
}

void append_except(std::vector<Literal>& out, const std::vector<Literal>& lits, std::size_t skip)
{
  for (std::size_t k = 0; k < lits.size(); ++k) {
    if (k != skip) out.push_back(lits[k]);
  }
}

const Term& side_of(const Literal& l, std::uint8_t side)
{
  return side == 0 ? l.lhs() : l.rhs();
}

bool not_below(const Term& s, const Term& t)
{
  Order o = compare(s, t);
  return o == Order::Greater || o == Order::Incomparable;
}

void subterm_positions(const Term& t, Position& cur, std::vector<Position>& out)
{
  if (t.is_variable() || t.kind() == TermKind::Top) return;
  if (t.kind() != TermKind::Predicate) out.push_back(cur);
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    cur.push_back(i);
    subterm_positions(t.arg(i), cur, out);
    cur.pop_back();
  }
}

} // namespace

Saturation::Saturation(Budget budget) : budget_(budget)
{
  validate(budget_);
}

bool Saturation::add_input(const Clause& raw)
{
  Clause c = normalize_variables(remove_duplicate_literals(raw));
  if (is_tautology(c)) return false;
  if (redundant(c)) return false;
  DerivationStep step;
  step.clause = c;
  store_.push_back({std::move(step), false});
  std::size_t idx = store_.size() - 1;
  if (c.empty()) {
    empty_ = idx;
    return true;
  }
  passive_by_weight_.emplace(c.weight(), idx);
  passive_by_age_.insert(idx);
  ++stats_.kept;
  return true;
}

bool Saturation::redundant(const Clause& c) const
{
  for (const StoredClause& s : store_) {
    if (subsumes(s.step.clause, c)) return true;
  }
  return false;
}

bool Saturation::halted()
{
  if (empty_) return true;
  if (stats_.generated >= budget_.max_generated_clauses) {
    stats_.budget_exhausted = true;
    return true;
  }
  if (budget_.timeout && std::chrono::steady_clock::now() > deadline_) {
    stats_.timed_out = true;
    return true;
  }
  return false;
}

std::size_t Saturation::pick_given()
{
  std::size_t idx;
  if (picks_++ % 2 == 0) {
    idx = passive_by_weight_.begin()->second;
  } else {
    idx = *passive_by_age_.begin();
  }
  passive_by_weight_.erase({store_[idx].step.clause.weight(), idx});
  passive_by_age_.erase(idx);
  return idx;
}

Status Saturation::run()
{
  if (budget_.timeout) deadline_ = std::chrono::steady_clock::now() + *budget_.timeout;
  while (true) {
    if (empty_) return Status::Proved;
    if (halted()) return Status::Unknown;
    if (passive_by_age_.empty()) return incomplete_ ? Status::Unknown : Status::CounterSatisfiable;
    std::size_t g = pick_given();
    const Clause& c = store_[g].step.clause;
    bool subsumed = std::any_of(active_.begin(), active_.end(),
                                [&](std::size_t a) { return subsumes(store_[a].step.clause, c); });
    if (subsumed) continue;
    activate(g);
  }
}

void Saturation::activate(std::size_t g)
{
  store_[g].active = true;
  active_.push_back(g);
  ++stats_.activated;
  infer_single(g);
  for (std::size_t k = 0; k < active_.size() && !halted(); ++k) {
    std::size_t a = active_[k];
    infer_pair(g, a);
    if (a != g && !halted()) infer_pair(a, g);
  }
}

void Saturation::conclude(DerivationStep step, const std::vector<Literal>& raw)
{
  if (halted()) return;
  ++stats_.generated;
  Clause c = remove_duplicate_literals(Clause(raw));
  if (!c.empty()) {
    if (is_tautology(c)) return;
    if (c.depth() > budget_.max_clause_depth) {
      ++stats_.discarded_deep;
      incomplete_ = true;
      return;
    }
    c = normalize_variables(c);
    if (redundant(c)) return;
  }
  step.clause = c;
  store_.push_back({std::move(step), false});
  std::size_t idx = store_.size() - 1;
  if (c.empty()) {
    empty_ = idx;
    return;
  }
  passive_by_weight_.emplace(c.weight(), idx);
  passive_by_age_.insert(idx);
  ++stats_.kept;
}

void Saturation::infer_single(std::size_t g)
{
  const Clause c = store_[g].step.clause;
  const auto& lits = c.literals();
  for (std::size_t i = 0; i < lits.size() && !halted(); ++i) {
    const Literal& li = lits[i];
    // Equality resolution.
    if (li.is_equation() && !li.positive()) {
      Bindings b;
      if (unify(li.lhs(), li.rhs(), b)) {
        std::vector<Literal> cs = resolve_all(c, b);
        if (is_maximal(cs, i)) {
          DerivationStep step;
          step.rule = Rule::EqualityResolution;
          step.parents = {g};
          step.unifier = b.to_substitution();
          step.literals = {i};
          std::vector<Literal> out;
          append_except(out, cs, i);
          conclude(std::move(step), out);
        }
      }
    }
    if (!li.positive()) continue;
    for (std::size_t j = 0; j < lits.size() && !halted(); ++j) {
      if (j == i || !lits[j].positive() || lits[j].is_equation() != li.is_equation()) continue;
      const Literal& lj = lits[j];
      if (!li.is_equation()) {
        // Factoring of positive atoms.
        if (j < i || lj.predicate() != li.predicate()) continue;
        Bindings b;
        if (!unify(li.lhs(), lj.lhs(), b)) continue;
        std::vector<Literal> cs = resolve_all(c, b);
        if (!is_maximal(cs, i)) continue;
        DerivationStep step;
        step.rule = Rule::Factoring;
        step.parents = {g};
        step.unifier = b.to_substitution();
        step.literals = {i, j};
        std::vector<Literal> out;
        append_except(out, cs, j);
        conclude(std::move(step), out);
        continue;
      }
      if (lj.lhs().sort() != li.lhs().sort()) continue;
      // Equality factoring: s = t | s' = t' | C  gives  t != t' | s' = t' | C.
      for (std::uint8_t si = 0; si < 2; ++si) {
        for (std::uint8_t sj = 0; sj < 2; ++sj) {
          const Term& s = side_of(li, si);
          const Term& t = side_of(li, 1 - si);
          const Term& s2 = side_of(lj, sj);
          const Term& t2 = side_of(lj, 1 - sj);
          Bindings b;
          if (!unify(s, s2, b)) continue;
          std::vector<Literal> cs = resolve_all(c, b);
          if (!not_below(b.resolve(s), b.resolve(t)) || !is_maximal(cs, i)) continue;
          DerivationStep step;
          step.rule = Rule::EqualityFactoring;
          step.parents = {g};
          step.unifier = b.to_substitution();
          step.literals = {i, j};
          step.sides = {si, sj};
          std::vector<Literal> out;
          append_except(out, cs, i);
          out.push_back(Literal::equation(false, b.resolve(t), b.resolve(t2)));
          conclude(std::move(step), out);
        }
      }
    }
  }
}

void Saturation::infer_pair(std::size_t first, std::size_t second)
{
  const Clause a = store_[first].step.clause;
  VarId shift = a.variable_bound();
  const Clause b = shift_variables(store_[second].step.clause, shift);
  resolution(first, second, a, b, shift);
  superposition(first, second, a, b, shift);
}

void Saturation::resolution(std::size_t first, std::size_t second, const Clause& a, const Clause& b, VarId shift)
{
  for (std::size_t i = 0; i < a.size() && !halted(); ++i) {
    const Literal& li = a[i];
    if (!li.positive() || li.is_equation()) continue;
    for (std::size_t j = 0; j < b.size() && !halted(); ++j) {
      const Literal& lj = b[j];
      if (lj.positive() || lj.is_equation() || lj.predicate() != li.predicate()) continue;
      Bindings bind;
      if (!unify(li.lhs(), lj.lhs(), bind)) continue;
      std::vector<Literal> as = resolve_all(a, bind);
      if (!is_strictly_maximal(as, i)) continue;
      std::vector<Literal> bs = resolve_all(b, bind);
      if (!is_maximal(bs, j)) continue;
      DerivationStep step;
      step.rule = Rule::Resolution;
      step.parents = {first, second};
      step.shift = shift;
      step.unifier = bind.to_substitution();
      step.literals = {i, j};
      std::vector<Literal> out;
      append_except(out, as, i);
      append_except(out, bs, j);
      conclude(std::move(step), out);
    }
  }
}

void Saturation::superposition(std::size_t first, std::size_t second, const Clause& a, const Clause& b, VarId shift)
{
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Literal& li = a[i];
    if (!li.positive() || !li.is_equation()) continue;
    for (std::uint8_t si = 0; si < 2; ++si) {
      const Term& l = side_of(li, si);
      const Term& r = side_of(li, 1 - si);
      if (!not_below(l, r)) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Literal& lj = b[j];
        std::uint8_t sides = lj.is_equation() ? 2 : 1;
        for (std::uint8_t sj = 0; sj < sides; ++sj) {
          const Term& target = side_of(lj, sj);
          std::vector<Position> positions;
          Position cur;
          subterm_positions(target, cur, positions);
          for (const Position& pos : positions) {
            if (halted()) return;
            const Term& u = subterm_at(target, pos);
            if (u.sort() != l.sort()) continue;
            Bindings bind;
            if (!unify(l, u, bind)) continue;
            Term lr = bind.resolve(l);
            Term rr = bind.resolve(r);
            if (!not_below(lr, rr)) continue;
            std::vector<Literal> as = resolve_all(a, bind);
            if (!is_strictly_maximal(as, i)) continue;
            std::vector<Literal> bs = resolve_all(b, bind);
            bool eligible = lj.positive() ? is_strictly_maximal(bs, j) : is_maximal(bs, j);
            if (!eligible) continue;
            Term tr = side_of(bs[j], sj);
            Term other = side_of(bs[j], 1 - sj);
            if (!not_below(tr, other)) continue;
            Term rewritten = replace_at(tr, pos, rr);
            Literal changed = sj == 0 ? bs[j].with_sides(rewritten, other) : bs[j].with_sides(other, rewritten);
            DerivationStep step;
            step.rule = Rule::Superposition;
            step.parents = {first, second};
            step.shift = shift;
            step.unifier = bind.to_substitution();
            step.literals = {i, j};
            step.sides = {si, sj};
            step.position = pos;
            std::vector<Literal> out;
            append_except(out, as, i);
            append_except(out, bs, j);
            out.push_back(changed);
            conclude(std::move(step), out);
          }
        }
      }
    }
  }
}

Derivation Saturation::derivation_of(std::size_t index) const
{
  std::vector<bool> needed(store_.size(), false);
  std::vector<std::size_t> stack = {index};
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    if (needed[k]) continue;
    needed[k] = true;
    for (std::size_t p : store_[k].step.parents) stack.push_back(p);
  }
  std::vector<std::size_t> renumber(store_.size(), 0);
  Derivation d;
  for (std::size_t k = 0; k < store_.size(); ++k) {
    if (!needed[k]) continue;
    renumber[k] = d.steps.size();
    DerivationStep step = store_[k].step;
    for (std::size_t& p : step.parents) p = renumber[p];
    d.steps.push_back(std::move(step));
  }
  return d;
}

Derivation Saturation::refutation() const
{
  if (!empty_) throw std::logic_error("no refutation was found");
  return derivation_of(*empty_);
}

namespace {

EntailmentVerdict run_saturation(const ClauseSet& input, const Budget& b, const Signature& sig)
{
  Saturation sat(b);
  for (const Clause& c : input) sat.add_input(c);
  EntailmentVerdict v;
  v.status = sat.run();
  v.stats = sat.stats();
  v.budget = b;
  v.input = input;
  v.signature = sig;
  if (v.status == Status::Proved) v.derivation = sat.refutation();
  return v;
}

} // namespace

EntailmentVerdict saturate(const ClauseSet& s, const Budget& b, const Signature& sig)
{
  return run_saturation(s, b, sig);
}

EntailmentVerdict entails(const ClauseSet& s, const Clause& goal, const Budget& b, const Signature& sig)
{
  validate(b);
  for (const Clause& d : s) {
    if (auto matcher = subsumption_matcher(d, goal)) {
      EntailmentVerdict v;
      v.status = Status::Proved;
      v.budget = b;
      v.input = s;
      v.signature = sig;
      v.goal = goal;
      Derivation proof;
      DerivationStep leaf;
      leaf.clause = d;
      DerivationStep step;
      step.clause = goal;
      step.rule = Rule::Subsumption;
      step.parents = {0};
      step.unifier = *matcher;
      proof.steps = {leaf, step};
      v.derivation = std::move(proof);
      return v;
    }
  }
  EntailmentVerdict v = entails_formula(s, clause_formula(goal), b, sig);
  v.goal = goal;
  return v;
}

EntailmentVerdict entails_formula(const ClauseSet& s, const Formula& goal, const Budget& b, const Signature& sig)
{
  Signature extended = sig;
  ClauseSet input = s;
  for (Clause& c : clausify_negation(goal, extended)) input.push_back(std::move(c));
  return run_saturation(input, b, extended);
}

std::size_t SetVerdict::generated() const
{
  std::size_t n = 0;
  for (const EntailmentVerdict& v : parts) n += v.stats.generated;
  return n;
}

SetVerdict entails_set(const ClauseSet& s, const ClauseSet& t, const Budget& b, const Signature& sig)
{
  SetVerdict out;
  bool unknown = false;
  bool refuted = false;
  for (const Clause& goal : t) {
    out.parts.push_back(entails(s, goal, b, sig));
    unknown |= out.parts.back().status == Status::Unknown;
    refuted |= out.parts.back().status == Status::CounterSatisfiable;
  }
  out.status = unknown ? Status::Unknown : refuted ? Status::CounterSatisfiable : Status::Proved;
  return out;
}

std::vector<std::string> describe(const Derivation& d, const Signature& sig)
{
  std::vector<std::string> out;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const DerivationStep& s = d.steps[k];
    std::string line = std::to_string(k + 1) + ". " + (s.clause.empty() ? "$false" : io::to_string(s.clause, sig));
    line += "  [" + rule_name(s.rule);
    for (std::size_t i = 0; i < s.parents.size(); ++i) line += (i ? "," : " ") + std::to_string(s.parents[i] + 1);
    line += "]";
    out.push_back(std::move(line));
  }
  return out;
}

} // namespace csc::sat
