#ifndef CSC_CORE_SIGNATURE_HPP
#define CSC_CORE_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace csc {

using SortId = std::uint32_t;
using FuncId = std::uint32_t;
using PredId = std::uint32_t;

inline constexpr SortId kNatSort = 0;
/** Pseudo-sort of predicate applications and of the truth constant. */
inline constexpr SortId kBoolSort = 0xffffffffu;

inline constexpr FuncId kZero = 0;
inline constexpr FuncId kSucc = 1;

class SortError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct FunctionDecl
{
  std::string name;
  std::vector<SortId> args;
  SortId result = kNatSort;
  bool skolem = false;

  bool operator==(const FunctionDecl&) const = default;
};

struct PredicateDecl
{
  std::string name;
  std::vector<SortId> args;

  bool operator==(const PredicateDecl&) const = default;
};

/**
 * Many-sorted signature. Sort nat and the symbols 0 : nat and
 * s : nat -> nat are always present with ids kNatSort, kZero and kSucc.
 *
 * Symbol ids are dense and follow declaration order; the term ordering
 * uses that order as its precedence. Function and predicate names share
 * one namespace so that the concrete syntax stays unambiguous.
 */
class Signature
{
public:
  Signature();

  /** Declare a sort; redeclaring an existing sort returns its id. */
  SortId add_sort(std::string_view name);

  /**
   * Declare a function symbol. Redeclaration with an identical type is a
   * no-op, a conflicting type throws SortError.
   */
  FuncId add_function(std::string_view name, std::vector<SortId> args, SortId result);
  PredId add_predicate(std::string_view name, std::vector<SortId> args);

  /** Fresh Skolem symbol whose name starts with @b prefix and is unused. */
  FuncId fresh_function(std::string_view prefix, std::vector<SortId> args, SortId result);

  std::optional<SortId> find_sort(std::string_view name) const;
  std::optional<FuncId> find_function(std::string_view name) const;
  std::optional<PredId> find_predicate(std::string_view name) const;

  const std::string& sort_name(SortId sort) const;
  const FunctionDecl& function(FuncId f) const { return functions_.at(f); }
  const PredicateDecl& predicate(PredId p) const { return predicates_.at(p); }

  std::size_t sort_count() const { return sorts_.size(); }
  std::size_t function_count() const { return functions_.size(); }
  std::size_t predicate_count() const { return predicates_.size(); }

  bool operator==(const Signature& other) const;

private:
  bool name_taken(std::string_view name) const;

  std::vector<std::string> sorts_;
  std::vector<FunctionDecl> functions_;
  std::vector<PredicateDecl> predicates_;
  std::unordered_map<std::string, SortId> sort_index_;
  std::unordered_map<std::string, FuncId> function_index_;
  std::unordered_map<std::string, PredId> predicate_index_;
};

} // namespace csc

#endif
