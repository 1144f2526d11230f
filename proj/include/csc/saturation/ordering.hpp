#ifndef CSC_SATURATION_ORDERING_HPP
#define CSC_SATURATION_ORDERING_HPP

#include "csc/core/clause.hpp"

namespace csc::sat {

enum class Order
{
  Less,
  Equal,
  Greater,
  Incomparable,
};

Order reverse(Order o);

/**
 * Knuth-Bendix ordering with every symbol and variable of weight 1.
 * Precedence: eta < function symbols in declaration order < predicate
 * symbols in declaration order. The truth constant is below every term.
 */
Order compare(const Term& s, const Term& t);

/**
 * Multiset extension: a positive literal s = t is {s, t}, a negative one
 * {s, s, t, t}; atoms are compared as P(..) = top.
 */
Order compare(const Literal& a, const Literal& b);

/** No other literal of @b c is greater than literal @b index. */
bool is_maximal(const std::vector<Literal>& c, std::size_t index);
/** No other literal of @b c is greater than or equal to literal @b index. */
bool is_strictly_maximal(const std::vector<Literal>& c, std::size_t index);

} // namespace csc::sat

#endif
