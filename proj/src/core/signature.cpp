#include "csc/core/signature.hpp"

namespace csc {

Signature::Signature()
{
  add_sort("nat");
  add_function("0", {}, kNatSort);
  add_function("s", {kNatSort}, kNatSort);
}

bool Signature::name_taken(std::string_view name) const
{
  std::string key(name);
  return function_index_.count(key) || predicate_index_.count(key);
}

SortId Signature::add_sort(std::string_view name)
{
  if (auto existing = find_sort(name)) {
    return *existing;
  }
  auto id = static_cast<SortId>(sorts_.size());
  sorts_.emplace_back(name);
  sort_index_.emplace(std::string(name), id);
  return id;
}

FuncId Signature::add_function(std::string_view name, std::vector<SortId> args, SortId result)
{
  if (auto existing = find_function(name)) {
    const auto& decl = functions_[*existing];
    if (decl.args != args || decl.result != result) {
      throw SortError("conflicting redeclaration of function '" + std::string(name) + "'");
    }
    return *existing;
  }
  if (name_taken(name)) {
    throw SortError("'" + std::string(name) + "' is already declared as a predicate");
  }
  for (SortId s : args) {
    if (s >= sorts_.size()) throw SortError("undeclared sort in type of '" + std::string(name) + "'");
  }
  if (result >= sorts_.size()) throw SortError("undeclared result sort of '" + std::string(name) + "'");
  auto id = static_cast<FuncId>(functions_.size());
  functions_.push_back(FunctionDecl{std::string(name), std::move(args), result, false});
  function_index_.emplace(std::string(name), id);
  return id;
}

PredId Signature::add_predicate(std::string_view name, std::vector<SortId> args)
{
  if (auto existing = find_predicate(name)) {
    if (predicates_[*existing].args != args) {
      throw SortError("conflicting redeclaration of predicate '" + std::string(name) + "'");
    }
    return *existing;
  }
  if (name_taken(name)) {
    throw SortError("'" + std::string(name) + "' is already declared as a function");
  }
  for (SortId s : args) {
    if (s >= sorts_.size()) throw SortError("undeclared sort in type of '" + std::string(name) + "'");
  }
  auto id = static_cast<PredId>(predicates_.size());
  predicates_.push_back(PredicateDecl{std::string(name), std::move(args)});
  predicate_index_.emplace(std::string(name), id);
  return id;
}

FuncId Signature::fresh_function(std::string_view prefix, std::vector<SortId> args, SortId result)
{
  std::string name;
  for (std::size_t n = functions_.size();; ++n) {
    name = std::string(prefix) + std::to_string(n);
    if (!name_taken(name)) break;
  }
  FuncId id = add_function(name, std::move(args), result);
  functions_[id].skolem = true;
  return id;
}

std::optional<SortId> Signature::find_sort(std::string_view name) const
{
  auto it = sort_index_.find(std::string(name));
  if (it == sort_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FuncId> Signature::find_function(std::string_view name) const
{
  auto it = function_index_.find(std::string(name));
  if (it == function_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PredId> Signature::find_predicate(std::string_view name) const
{
  auto it = predicate_index_.find(std::string(name));
  if (it == predicate_index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Signature::sort_name(SortId sort) const
{
  static const std::string bool_name = "$o";
  if (sort == kBoolSort) return bool_name;
  return sorts_.at(sort);
}

bool Signature::operator==(const Signature& other) const
{
  return sorts_ == other.sorts_ && functions_ == other.functions_ && predicates_ == other.predicates_;
}

} // namespace csc
