#pragma once

// Cellularity (X ≫ A) and acyclicity (X > A) between perfect complexes.
//
// Every non-contractible perfect complex X generates the same cellular class
// as Σ^i E_j for (i, j) the lexicographically least interval summand of X,
// and Σ^i' E_j' ≫ Σ^i E_j exactly when (i, j) <= (i', j'). A contractible
// complex generates the class of acyclic complexes.
//
// Acyclicity is decided by support. R has a single prime ideal m, so the
// support condition reduces to comparing the lowest nonzero degree of the
// minimal models.

#include <optional>
#include <string>

#include "cellx/complex.hpp"
#include "cellx/reduce.hpp"

namespace cellx {

// Lexicographically least interval summand of x; nullopt when x is
// contractible.
std::optional<Interval> min_pair(const ChainComplex& x);

// Lowest degree with nonzero rank in the minimal model; nullopt when x is
// contractible.
std::optional<int> bottom_degree(const ChainComplex& x);

struct Verdict {
  bool holds = false;
  // "x-contractible", "a-contractible", "lex" (cellular) or "support"
  // (acyclic).
  std::string rule;
  std::optional<Interval> min_pair_x;
  std::optional<Interval> min_pair_a;
  // Bottom degrees, filled in by is_acyclic_over.
  std::optional<int> bottom_x;
  std::optional<int> bottom_a;
};

// Decides X ≫ A. Throws UsageError on a ring mismatch.
Verdict is_cellular(const ChainComplex& x, const ChainComplex& a);

// Decides X > A. Throws UsageError on a ring mismatch.
Verdict is_acyclic_over(const ChainComplex& x, const ChainComplex& a);

// (i, j) <= (i2, j2) lexicographically, i.e. Σ^i2 E_j2 ≫ Σ^i E_j.
bool generator_relation(int i, int j, int i2, int j2);

// One-line human-readable justification of a verdict.
std::string explain(const Verdict& v);

}  // namespace cellx
