#include "csc/nclause/nclause.hpp"

#include <map>

#include "csc/saturation/subsumption.hpp"

namespace csc::nclause {

std::string restriction_name(Restriction r)
{
  switch (r) {
  case Restriction::NatFunction: return "nat-function";
  case Restriction::NoOtherSort: return "no-other-sort";
  case Restriction::EtaOutsideConstraint: return "eta-outside-constraint";
  case Restriction::NatEquation: return "nat-equation";
  }
  return "unknown";
}

NClauseError::NClauseError(Restriction r, const std::string& message)
  : std::invalid_argument(restriction_name(r) + ": " + message), restriction_(r)
{
}

Clause NClause::clause() const
{
  std::vector<Literal> lits;
  for (const Term& t : constraints) lits.push_back(Literal::equation(false, Term::parameter(), t));
  lits.insert(lits.end(), body.begin(), body.end());
  return Clause(std::move(lits));
}

void validate_signature(const Signature& sig)
{
  if (sig.sort_count() < 2) throw NClauseError(Restriction::NoOtherSort, "declare a sort besides nat");
  for (FuncId f = kSucc + 1; f < sig.function_count(); ++f) {
    if (sig.function(f).result == kNatSort) {
      throw NClauseError(Restriction::NatFunction, "function " + sig.function(f).name + " has range nat");
    }
  }
}

namespace {

std::variant<NClause, NClauseError> split(const Clause& c)
{
  NClause out;
  for (const Literal& l : c.literals()) {
    if (l.is_equation() && (l.lhs().is_parameter() || l.rhs().is_parameter())) {
      const Term& t = l.lhs().is_parameter() ? l.rhs() : l.lhs();
      if (l.positive()) {
        return NClauseError(Restriction::EtaOutsideConstraint, "positive literal eta = t");
      }
      if (t.has_parameter()) {
        return NClauseError(Restriction::EtaOutsideConstraint, "eta inside a constraint term");
      }
      out.constraints.push_back(t);
      continue;
    }
    if (l.is_equation() && l.lhs().sort() == kNatSort) {
      return NClauseError(Restriction::NatEquation, "equation between nat terms in the body");
    }
    if (l.lhs().has_parameter() || (l.is_equation() && l.rhs().has_parameter())) {
      return NClauseError(Restriction::EtaOutsideConstraint, "eta in a body literal");
    }
    out.body.push_back(l);
  }
  return out;
}

} // namespace

NClause as_nclause(const Clause& c)
{
  auto r = split(c);
  if (auto* e = std::get_if<NClauseError>(&r)) throw *e;
  return std::get<NClause>(r);
}

std::optional<NClause> try_nclause(const Clause& c)
{
  auto r = split(c);
  if (auto* n = std::get_if<NClause>(&r)) return *n;
  return std::nullopt;
}

std::vector<NClause> validate_nclause_set(const ClauseSet& r, const Signature& sig)
{
  validate_signature(sig);
  std::vector<NClause> out;
  for (const Clause& c : r) out.push_back(as_nclause(c));
  return out;
}

NClause descend(const NClause& c, unsigned i)
{
  NClause out = c;
  for (Term& t : out.constraints) t = succ_n(t, i);
  return out;
}

std::vector<NClause> descend(const std::vector<NClause>& s, unsigned i)
{
  std::vector<NClause> out;
  for (const NClause& c : s) out.push_back(descend(c, i));
  return out;
}

ClauseSet to_clauses(const std::vector<NClause>& s)
{
  ClauseSet out;
  for (const NClause& c : s) out.push_back(c.clause());
  return out;
}

namespace {

Clause canonical(const Clause& c)
{
  return normalize_variables(remove_duplicate_literals(c));
}

struct Node
{
  Clause clause;
  bool input = false;
  std::vector<std::size_t> parents;
  std::optional<NClause> nclause;
};

struct EngineResult
{
  cycles::ConditionCheck check;
  /** Clauses of S the proof used. */
  ClauseSet support;
};

class Detector
{
public:
  Detector(const std::vector<NClause>& r, const sat::Budget& b, const Signature& sig) : budget_(b), sig_(sig)
  {
    sat::Saturation run(b);
    for (const NClause& c : r) run.add_input(c.clause());
    saturation_ = run.run();
    for (const sat::StoredClause& s : run.clauses()) {
      Node n;
      n.clause = canonical(s.step.clause);
      n.input = s.step.rule == sat::Rule::Input;
      n.parents = s.step.parents;
      n.nclause = try_nclause(n.clause);
      nodes_.push_back(std::move(n));
    }
    // Inputs dropped as redundant still belong to R.
    for (const NClause& c : r) {
      Clause k = canonical(c.clause());
      bool present = false;
      for (const Node& n : nodes_) present = present || (n.input && n.clause == k);
      if (present) continue;
      Node n;
      n.clause = k;
      n.input = true;
      n.nclause = try_nclause(k);
      nodes_.push_back(std::move(n));
    }
  }

  sat::Status saturation() const { return saturation_; }

  std::vector<bool> candidates() const
  {
    std::vector<bool> out(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) out[i] = nodes_[i].nclause.has_value();
    return out;
  }

  ClauseSet clauses_of(const std::vector<bool>& s) const
  {
    ClauseSet out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (s[i]) out.push_back(nodes_[i].clause);
    }
    return out;
  }

  std::vector<bool> inputs_of(const std::vector<bool>& s) const
  {
    std::vector<bool> out(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) out[i] = s[i] && nodes_[i].input;
    return out;
  }

  /** Greatest fixpoint for step j starting from @b s. */
  std::vector<bool> fixpoint(std::vector<bool> s, unsigned j, std::vector<FixpointRound>& trace)
  {
    for (;;) {
      std::vector<bool> keep = s;
      FixpointRound round;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!s[i]) continue;
        if (!established(s, i, j).has_value()) {
          keep[i] = false;
          round.removed.push_back(nodes_[i].clause);
        }
      }
      if (round.removed.empty()) return s;
      trace.push_back(std::move(round));
      s = std::move(keep);
    }
  }

  /** Evidence for every clause of @b s, or nullopt if some image is not established. */
  std::optional<std::vector<DescentEvidence>> descent(const std::vector<bool>& s, unsigned j)
  {
    std::vector<DescentEvidence> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!s[i]) continue;
      auto e = established(s, i, j);
      if (!e) return std::nullopt;
      out.push_back(std::move(*e));
    }
    return out;
  }

  std::vector<cycles::ConditionCheck> base_cases(const std::vector<bool>& s, unsigned i, unsigned j) const
  {
    ClauseSet premises = clauses_of(s);
    std::vector<cycles::ConditionCheck> out;
    for (unsigned k = i; k < i + j; ++k) {
      cycles::ConditionCheck c;
      c.name = "base " + std::to_string(k);
      c.goal = "S |- eta != " + std::to_string(k);
      Clause goal({Literal::equation(false, Term::parameter(), numeral(k))});
      c.runs.push_back(sat::entails(premises, goal, budget_, sig_));
      c.status = c.runs.back().status;
      out.push_back(std::move(c));
    }
    return out;
  }

private:
  std::vector<bool> derivable(const std::vector<bool>& s) const
  {
    std::vector<bool> d = s;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (d[i] || nodes_[i].input || nodes_[i].parents.empty()) continue;
        bool all = true;
        for (std::size_t p : nodes_[i].parents) all = all && d[p];
        if (all) {
          d[i] = true;
          changed = true;
        }
      }
    }
    return d;
  }

  std::optional<DescentEvidence> established(const std::vector<bool>& s, std::size_t index, unsigned j)
  {
    DescentEvidence e;
    e.clause = nodes_[index].clause;
    e.image = canonical(descend(*nodes_[index].nclause, j).clause());
    std::vector<bool> d = derivable(s);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (d[k] && sat::subsumes(nodes_[k].clause, e.image)) {
        e.subsumer = nodes_[k].clause;
        return e;
      }
    }
    ClauseSet premises = clauses_of(s);
    auto key = std::make_pair(index, j);
    auto cached = cache_.find(key);
    if (cached != cache_.end()) {
      const EngineResult& r = cached->second;
      if (r.check.status != sat::Status::Proved) return std::nullopt;
      bool still = true;
      for (const Clause& c : r.support) {
        still = still && std::find(premises.begin(), premises.end(), c) != premises.end();
      }
      if (still) {
        e.check = r.check;
        return e;
      }
    }
    EngineResult r;
    r.check.name = "descent";
    r.check.goal = "S |- S descended by " + std::to_string(j);
    r.check.runs.push_back(sat::entails(premises, e.image, budget_, sig_));
    r.check.status = r.check.runs.back().status;
    if (r.check.status == sat::Status::Proved) {
      for (const sat::DerivationStep& step : r.check.runs.back().derivation->steps) {
        if (step.rule != sat::Rule::Input) continue;
        Clause c = canonical(step.clause);
        if (std::find(premises.begin(), premises.end(), c) != premises.end()) r.support.push_back(c);
      }
    }
    cache_[key] = r;
    if (r.check.status != sat::Status::Proved) return std::nullopt;
    e.check = r.check;
    return e;
  }

  sat::Budget budget_;
  const Signature& sig_;
  sat::Status saturation_ = sat::Status::Unknown;
  std::vector<Node> nodes_;
  std::map<std::pair<std::size_t, unsigned>, EngineResult> cache_;
};

bool all_proved(const std::vector<cycles::ConditionCheck>& checks, Attempt& a)
{
  for (const cycles::ConditionCheck& c : checks) {
    if (c.status != sat::Status::Proved) {
      a.reason = c.name + " is " + sat::status_name(c.status);
      a.undecided = c.status == sat::Status::Unknown;
      return false;
    }
  }
  return true;
}

} // namespace

Detection detect_cycle(const std::vector<NClause>& r, unsigned max_i, unsigned max_j, const sat::Budget& b,
                       const Signature& sig)
{
  sat::validate(b);
  Detector det(r, b, sig);
  Detection out;
  out.saturation = det.saturation();
  std::vector<bool> start = det.candidates();
  out.derived = det.clauses_of(start);
  for (unsigned j = 1; j <= max_j; ++j) {
    std::vector<FixpointRound> trace;
    std::vector<bool> s = det.fixpoint(start, j, trace);
    out.fixpoint = det.clauses_of(s);
    out.trace = trace;
    std::vector<bool> core = det.inputs_of(s);
    std::optional<std::vector<DescentEvidence>> core_descent = det.descent(core, j);
    for (unsigned i = 0; i <= max_i; ++i) {
      Attempt a{i, j, "", false};
      if (out.fixpoint.empty()) {
        a.reason = "empty fixpoint";
        out.attempts.push_back(a);
        continue;
      }
      if (core_descent) {
        std::vector<cycles::ConditionCheck> base = det.base_cases(core, i, j);
        Attempt ignored;
        if (all_proved(base, ignored)) {
          out.attempts.push_back(a);
          out.cycle = NCycle{i, j, det.clauses_of(core), std::move(base), *core_descent};
          return out;
        }
      }
      std::vector<cycles::ConditionCheck> base = det.base_cases(s, i, j);
      if (!all_proved(base, a)) {
        out.attempts.push_back(a);
        continue;
      }
      out.attempts.push_back(a);
      out.cycle = NCycle{i, j, out.fixpoint, std::move(base), *det.descent(s, j)};
      return out;
    }
  }
  return out;
}

Translation translate_cycle(const NCycle& nc)
{
  return Translation{cycles::normalize_offset_step(nc.clauses, nc.offset, nc.step), nc.offset};
}

} // namespace csc::nclause
