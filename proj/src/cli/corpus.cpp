#include "csc/cli/corpus.hpp"

namespace csc::cli {

const std::vector<CorpusFile>& corpus()
{
  static const std::vector<CorpusFile> files = {
    {"example25.csc", R"csc(# The clause set cycle S(eta) that refutes example25_refuted.csc with n = 1.
name "example25".
expect cycle.
pred P : nat.
clause P(eta).
clause ~P(0).
clause forall x:nat P(s(x)) => P(x).
)csc"},
    {"example25_refuted.csc", R"csc(# R(eta): refuted by the cycle in example25.csc with n = 1.
name "example25-refuted".
expect refuted.
pred P : nat.
pred Q : nat.
clause Q(eta).
clause ~Q(0).
clause forall x:nat Q(s(x)) => P(x).
clause ~P(0).
clause forall x:nat P(s(x)) => P(x).
)csc"},
    {"s_triangle.csc", R"csc(# The triangle function is not total: a cycle that refutes itself with n = 0.
name "s-triangle".
expect cycle.
func plus : nat, nat -> nat.
pred tri : nat, nat.
clause forall x:nat plus(x, 0) = x.
clause forall x:nat, y:nat plus(x, s(y)) = s(plus(x, y)).
clause tri(0, 0).
clause forall x:nat, y:nat tri(x, y) => tri(s(x), plus(s(x), y)).
clause forall y:nat ~tri(eta, y).
)csc"},
    {"c1c2c3.csc", R"csc(# n-clause set refuted by the cycle (0, 1, S).
name "c1c2c3".
expect ncycle.
sort i.
func c : -> i.
func plus : nat, i -> i.
pred tri : nat, i.
nclause tri(0, c).
nclause forall x:nat, y:i tri(x, y) => tri(s(x), plus(s(x), y)).
nclause forall x:nat, y:i eta = x => ~tri(x, y).
)csc"},
    {"c1c2c3_shifted.csc", R"csc(# The constraint of the last clause is shifted: the cycle found has offset 1,
# and R(0) is satisfiable, so it does not refute the set on its own.
name "c1c2c3_shifted".
expect ncycle.
sort i.
func c : -> i.
func plus : nat, i -> i.
pred tri : nat, i.
nclause tri(0, c).
nclause forall x:nat, y:i tri(x, y) => tri(s(x), plus(s(x), y)).
nclause forall x:nat, y:i eta = s(x) => ~tri(x, y).
)csc"},
    {"ncycle_parity.csc", R"csc(# n-clause set refuted by a cycle with offset 0 and step 2.
name "ncycle_parity".
expect ncycle.
sort i.
func c : -> i.
pred T : nat, i.
nclause T(0, c).
nclause T(s(0), c).
nclause forall x:nat, y:i T(x, y) => T(s(s(x)), y).
nclause forall x:nat, y:i eta = x => ~T(x, y).
)csc"},
    {"parity.csc", R"csc(# Offset/step cycle with offset 0 and step 2, but not a plain cycle.
name "parity".
expect offset_cycle.
pred E : nat.
clause E(eta).
clause ~E(0).
clause ~E(s(0)).
clause forall x:nat E(s(s(x))) => E(x).
)csc"},
    {"empty.csc", R"csc(# The empty clause set is true in every model, so S(0) has no refutation.
name "empty".
expect not_cycle.
)csc"},
  };
  return files;
}

} // namespace csc::cli
