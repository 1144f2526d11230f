#include "csc/core/term.hpp"

#include <algorithm>

namespace csc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value)
{
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::make(TermKind kind, std::uint32_t id, SortId sort, std::vector<Term> args)
{
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->id = id;
  node->sort = sort;
  std::uint32_t weight = 1;
  std::uint32_t depth = 1;
  std::size_t h = mix(static_cast<std::size_t>(kind) * 31 + 7, id);
  bool ground = kind != TermKind::Variable;
  bool has_param = kind == TermKind::Parameter;
  for (const Term& a : args) {
    weight += a.weight();
    depth = std::max(depth, a.depth() + 1);
    h = mix(h, a.hash());
    ground = ground && a.is_ground();
    has_param = has_param || a.has_parameter();
  }
  node->args = std::move(args);
  node->weight = weight;
  node->depth = depth;
  node->hash = h;
  node->ground = ground;
  node->has_param = has_param;
  return Term(std::move(node));
}

Term Term::variable(VarId id, SortId sort)
{
  return make(TermKind::Variable, id, sort, {});
}

Term Term::parameter()
{
  static const Term eta = make(TermKind::Parameter, 0, kNatSort, {});
  return eta;
}

Term Term::function(FuncId f, std::vector<Term> args, SortId result)
{
  return make(TermKind::Function, f, result, std::move(args));
}

Term Term::predicate(PredId p, std::vector<Term> args)
{
  return make(TermKind::Predicate, p, kBoolSort, std::move(args));
}

Term Term::top()
{
  static const Term t = make(TermKind::Top, 0, kBoolSort, {});
  return t;
}

bool Term::operator==(const Term& other) const
{
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.id != b.id || a.sort != b.sort ||
      a.args.size() != b.args.size() || a.weight != b.weight) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (a.args[i] != b.args[i]) return false;
  }
  return true;
}

int Term::compare_structure(const Term& other) const
{
  if (node_ == other.node_) return 0;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.id != b.id) return a.id < b.id ? -1 : 1;
  if (a.sort != b.sort) return a.sort < b.sort ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    int c = a.args[i].compare_structure(b.args[i]);
    if (c != 0) return c;
  }
  return 0;
}

Term zero()
{
  static const Term z = Term::function(kZero, {}, kNatSort);
  return z;
}

Term succ(Term t)
{
  return Term::function(kSucc, {std::move(t)}, kNatSort);
}

Term succ_n(Term t, unsigned n)
{
  for (unsigned i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

Term numeral(unsigned n)
{
  return succ_n(zero(), n);
}

std::optional<unsigned> numeral_value(const Term& t)
{
  unsigned n = 0;
  const Term* cur = &t;
  while (cur->is_function() && cur->id() == kSucc) {
    ++n;
    cur = &cur->arg(0);
  }
  if (cur->is_function() && cur->id() == kZero) return n;
  return std::nullopt;
}

Term make_application(const Signature& sig, FuncId f, std::vector<Term> args)
{
  const FunctionDecl& decl = sig.function(f);
  if (decl.args.size() != args.size()) {
    throw SortError("function '" + decl.name + "' expects " + std::to_string(decl.args.size()) +
                    " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != decl.args[i]) {
      throw SortError("argument " + std::to_string(i + 1) + " of '" + decl.name + "' must have sort " +
                      sig.sort_name(decl.args[i]) + ", got " + sig.sort_name(args[i].sort()));
    }
  }
  return Term::function(f, std::move(args), decl.result);
}

Term make_application(const Signature& sig, std::string_view name, std::vector<Term> args)
{
  auto f = sig.find_function(name);
  if (!f) throw SortError("undeclared function '" + std::string(name) + "'");
  return make_application(sig, *f, std::move(args));
}

Term make_predicate(const Signature& sig, PredId p, std::vector<Term> args)
{
  const PredicateDecl& decl = sig.predicate(p);
  if (decl.args.size() != args.size()) {
    throw SortError("predicate '" + decl.name + "' expects " + std::to_string(decl.args.size()) +
                    " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != decl.args[i]) {
      throw SortError("argument " + std::to_string(i + 1) + " of '" + decl.name + "' must have sort " +
                      sig.sort_name(decl.args[i]) + ", got " + sig.sort_name(args[i].sort()));
    }
  }
  return Term::predicate(p, std::move(args));
}

bool occurs(VarId var, const Term& t)
{
  if (t.is_ground()) return false;
  if (t.is_variable()) return t.id() == var;
  for (const Term& a : t.args()) {
    if (occurs(var, a)) return true;
  }
  return false;
}

std::size_t count_symbol(const Term& t, FuncId f)
{
  std::size_t n = (t.is_function() && t.id() == f) ? 1 : 0;
  for (const Term& a : t.args()) n += count_symbol(a, f);
  return n;
}

void collect_variables(const Term& t, std::vector<Term>& out)
{
  if (t.is_ground()) return;
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

const Term& subterm_at(const Term& t, std::span<const std::uint32_t> pos)
{
  const Term* cur = &t;
  for (std::uint32_t i : pos) cur = &cur->arg(i);
  return *cur;
}

Term replace_at(const Term& t, std::span<const std::uint32_t> pos, const Term& replacement)
{
  if (pos.empty()) return replacement;
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[pos.front()] = replace_at(args[pos.front()], pos.subspan(1), replacement);
  switch (t.kind()) {
  case TermKind::Function: return Term::function(t.id(), std::move(args), t.sort());
  case TermKind::Predicate: return Term::predicate(t.id(), std::move(args));
  default: return t;
  }
}

Term map_term(const Term& t, const std::function<std::optional<Term>(const Term&)>& f)
{
  if (auto r = f(t)) return *r;
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(map_term(a, f));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  if (t.kind() == TermKind::Predicate) return Term::predicate(t.id(), std::move(args));
  return Term::function(t.id(), std::move(args), t.sort());
}

} // namespace csc
