#pragma once

// Splitting a perfect complex into disks plus interval complexes.
//
// minimize() strips embedded disks: a unit entry in some d_n spans a copy of
// D^n, which is always a direct summand because R is self-injective. What is
// left has every differential entry in m, so d_n = r * B_n for matrices B_n
// over k that can be chosen freely (m^2 = 0 imposes no relation between them).
// A minimal complex is therefore a representation of a linear quiver over k,
// and it splits into interval complexes Σ^i E_j.
//
// The existence argument goes degree by degree: take the smallest n0 with a
// map X -> E_{n0} onto X_0, show it is surjective and build a section, split
// off E_{n0}, repeat. barcode() counts the same summands from the ranks of the
// composites B_{a+1} ... B_b instead of building the sections.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "cellx/complex.hpp"
#include "cellx/linalg.hpp"

namespace cellx {

// The summand Σ^start E_span, free of rank one in degrees start..start+span.
struct Interval {
  int start = 0;
  int span = 0;

  int end() const noexcept { return start + span; }
  // Lexicographic in (start, span).
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Minimization {
  ChainComplex minimal;
  // Degrees of the split-off disks, ascending.
  std::vector<int> disks;
  // basis_change[n].forward = P_n, with P_{n-1} d_n P_n^-1 equal to d_n of
  // minimal ⊕ disk(disks[0]) ⊕ disk(disks[1]) ⊕ ...
  std::vector<BasisChange> basis_change;
};

// Throws InvalidComplex for an invalid input. Pivots are taken in the lowest
// degree first, then row-major.
Minimization minimize(const ChainComplex& x);

// Checks P_n P_n^-1 = 1 and that conjugating x by the certificates gives the
// block form minimal ⊕ disks exactly.
bool verify_certificates(const ChainComplex& x, const Minimization& m);

// rho(a, b) = rank_k(B_{a+1} ... B_b), with rho(a, a) = rank of degree a.
// Throws UsageError when m is not minimal or a > b.
std::size_t composite_rank(const ChainComplex& m, int a, int b);

// All of rho(a, b) for 0 <= a <= b <= top; zero outside that range.
class RankTable {
 public:
  explicit RankTable(const ChainComplex& minimal);

  int top() const noexcept { return top_; }
  std::size_t operator()(int a, int b) const;
  // Inclusion-exclusion count of Σ^a E_(b-a) summands. Negative values can
  // only come from a bug.
  long long multiplicity(int a, int b) const;

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  int top_;
  std::vector<std::size_t> rho_;
};

// Interval summands of a minimal complex, sorted, one entry per copy.
// Throws UsageError on a non-minimal input.
std::vector<Interval> barcode(const ChainComplex& minimal);

struct Decomposition {
  std::vector<Interval> intervals;  // sorted, with repeats
  std::vector<int> disks;           // sorted, with repeats
  std::optional<Minimization> certificates;

  bool same_summands(const Decomposition& o) const {
    return intervals == o.intervals && disks == o.disks;
  }
};

// minimize + barcode. Internally checks degreewise rank accounting and that
// the reconstructed sum has the same rank vector and rank table as the input;
// a failure there throws std::logic_error.
Decomposition decompose(const ChainComplex& x);

// ⊕ interval(i, j) ⊕ ⊕ disk(n), intervals first, each group in sorted order.
ChainComplex reconstruct(const Decomposition& d, const RingSpec& ring);
ChainComplex reconstruct(const std::vector<Interval>& intervals, const std::vector<int>& disks,
                         const RingSpec& ring);

// ranks[n] = #{intervals covering n} + #{disks at n} + #{disks at n + 1}.
bool rank_accounting_holds(const std::vector<std::size_t>& ranks, const Decomposition& d);

}  // namespace cellx
