#ifndef CSC_IO_PROBLEM_HPP
#define CSC_IO_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csc/core/formula.hpp"

namespace csc::io {

enum class ParseErrorKind
{
  Lexical,
  Syntax,
  Sort,
};

class ParseError : public std::runtime_error
{
public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /** Message without the position prefix. */
  const std::string& detail() const { return detail_; }

private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

enum class ItemKind
{
  Clause,
  /** A clause that must lie in the n-clause fragment. */
  NClause,
  Formula,
};

struct ProblemItem
{
  ItemKind kind = ItemKind::Clause;
  Clause clause;
  std::optional<csc::Formula> formula;

  bool operator==(const ProblemItem&) const = default;
};

/** Contents of a `.csc` file: declarations, items and metadata. */
struct ProblemFile
{
  Signature signature;
  std::optional<std::string> name;
  std::optional<std::string> expect;
  std::vector<ProblemItem> items;

  /** All clause and nclause items in file order. */
  ClauseSet clauses() const;
  std::vector<csc::Formula> formulas() const;
  bool has_nclauses() const;

  bool operator==(const ProblemFile&) const = default;
};

/**
 * Parse a problem file. Declarations from @b base are visible and may be
 * repeated with the same type; this lets related files share one
 * signature and therefore one symbol numbering.
 */
ProblemFile parse_problem(std::string_view text, const Signature* base = nullptr);

/** Parse a single term; unknown identifiers become variables. */
Term parse_term(std::string_view text, const Signature& sig, SortId expected = kNatSort);
/** Parse a single formula over @b sig (same syntax as a formula item body). */
csc::Formula parse_formula(std::string_view text, const Signature& sig);

std::string to_string(const Term& t, const Signature& sig);
std::string to_string(const Literal& l, const Signature& sig);
/** Clause body in item syntax, without the leading keyword and final dot. */
std::string to_string(const Clause& c, const Signature& sig);
std::string to_string(const csc::Formula& f, const Signature& sig);
std::string to_string(const ClauseSet& s, const Signature& sig);

/** Declarations of every symbol beyond the built-in ones. */
std::string print_signature(const Signature& sig);
std::string print_clause_item(const Clause& c, const Signature& sig, ItemKind kind = ItemKind::Clause);
std::string print_problem(const ProblemFile& file);
/** A complete problem text holding the signature and @b clauses. */
std::string print_clause_set(const ClauseSet& clauses, const Signature& sig,
                             const std::optional<std::string>& name = std::nullopt);

} // namespace csc::io

#endif
