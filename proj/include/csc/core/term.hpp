#ifndef CSC_CORE_TERM_HPP
#define CSC_CORE_TERM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <span>
#include <vector>

#include "csc/core/signature.hpp"

namespace csc {

enum class TermKind : std::uint8_t
{
  Variable,
  /** The distinguished parameter eta of sort nat. */
  Parameter,
  Function,
  /** A predicate application; only ever the left side of a literal. */
  Predicate,
  /** Truth constant paired with predicate applications inside literals. */
  Top,
};

using VarId = std::uint32_t;
using Position = std::vector<std::uint32_t>;

/**
 * Immutable first-order term with shared structure. Weight (symbol
 * count), depth and hash are computed at construction.
 */
class Term
{
public:
  static Term variable(VarId id, SortId sort);
  static Term parameter();
  static Term function(FuncId f, std::vector<Term> args, SortId result);
  static Term predicate(PredId p, std::vector<Term> args);
  static Term top();

  TermKind kind() const { return node_->kind; }
  bool is_variable() const { return node_->kind == TermKind::Variable; }
  bool is_parameter() const { return node_->kind == TermKind::Parameter; }
  bool is_function() const { return node_->kind == TermKind::Function; }

  /** Variable id for variables, symbol id for applications, 0 otherwise. */
  std::uint32_t id() const { return node_->id; }
  SortId sort() const { return node_->sort; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  std::uint32_t weight() const { return node_->weight; }
  /** Nesting depth; constants and variables have depth 1. */
  std::uint32_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  bool is_ground() const { return node_->ground; }
  bool has_parameter() const { return node_->has_param; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  /** Arbitrary but fixed structural total order. */
  int compare_structure(const Term& other) const;

private:
  struct Node
  {
    TermKind kind;
    std::uint32_t id;
    SortId sort;
    std::vector<Term> args;
    std::uint32_t weight;
    std::uint32_t depth;
    std::size_t hash;
    bool ground;
    bool has_param;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::uint32_t id, SortId sort, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

struct TermHash
{
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Construction helpers over the built-in nat symbols.
Term zero();
Term succ(Term t);
Term succ_n(Term t, unsigned n);
/** The numeral s^n(0). */
Term numeral(unsigned n);
/** If @b t is a numeral s^n(0), return n. */
std::optional<unsigned> numeral_value(const Term& t);

/** Sort-checked application of a declared function symbol. */
Term make_application(const Signature& sig, FuncId f, std::vector<Term> args);
Term make_application(const Signature& sig, std::string_view name, std::vector<Term> args);
Term make_predicate(const Signature& sig, PredId p, std::vector<Term> args);

bool occurs(VarId var, const Term& t);
std::size_t count_symbol(const Term& t, FuncId f);
/** Variables in order of first occurrence (left to right, depth first). */
void collect_variables(const Term& t, std::vector<Term>& out);

const Term& subterm_at(const Term& t, std::span<const std::uint32_t> pos);
Term replace_at(const Term& t, std::span<const std::uint32_t> pos, const Term& replacement);
/** Rebuild @b t, replacing every outermost subterm for which @b f yields a value. */
Term map_term(const Term& t, const std::function<std::optional<Term>(const Term&)>& f);

} // namespace csc

#endif
