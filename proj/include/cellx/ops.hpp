#pragma once

// Constructions on complexes and chain maps.
//
// Sign and ordering conventions, fixed so that outputs are reproducible:
//   shift:  (Σ^i X)_n = X_{n-i}, differential (-1)^i d.
//   sum:    X-block before Y-block.
//   cone:   C(f)_n = Y_n ⊕ X_{n-1} (Y-block first), d = [[d^Y, f], [0, -d^X]].
//   tensor: (X⊗Y)_n = ⊕_{i+j=n} X_i ⊗ Y_j with i ascending, Kronecker order
//           inside each block, d(x⊗y) = dx⊗y + (-1)^i x⊗dy.
//   hom:    Hom(X,Y)_n = Π_i hom(X_i, Y_{i+n}) with i ascending and each
//           hom block in row-major order; for n >= 2 the differential is
//           f |-> {d f_i + (-1)^n f_{i-1} d}. See hom_complex() for degree 0.

#include <cstddef>
#include <optional>
#include <vector>

#include "cellx/complex.hpp"
#include "cellx/linalg.hpp"

namespace cellx {

class ChainMap {
 public:
  // mats[n] : source_n -> target_n, one matrix per degree up to the longer of
  // the two complexes. Throws UsageError on shape or ring mismatch; does not
  // check commutation (see check_commutes()).
  ChainMap(ChainComplex source, ChainComplex target, std::vector<MatrixR> mats);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  const std::vector<MatrixR>& mats() const noexcept { return mats_; }
  // f_n for any n; zero-shaped outside the stored range.
  MatrixR at(int n) const;
  int degrees() const noexcept { return static_cast<int>(mats_.size()); }

  // nullopt when d^target_n f_n = f_{n-1} d^source_n for every n.
  std::optional<Diagnostic> check_commutes() const;

  friend bool operator==(const ChainMap&, const ChainMap&) = default;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<MatrixR> mats_;
};

ChainComplex shift(const ChainComplex& x, int i);
// Inverse of shift(x, k); throws DomainError if x has a nonzero rank below k.
ChainComplex desuspend(const ChainComplex& x, int k);

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y);

// Throws UsageError when f is not a chain map.
ChainComplex cone(const ChainMap& f);

ChainComplex tensor(const ChainComplex& x, const ChainComplex& y);

// The hom-complex from x to y.
//
// Degree 0 is the module of chain maps x -> y, the kernel of
//   f |-> {d f_i - f_{i-1} d}   on   Π_i hom(X_i, Y_i).
// That kernel need not be free. When it is, `complex` is the whole hom-complex
// with degree 0 expressed in the basis `degree0_basis`; otherwise degree 0 of
// `complex` is left at rank zero and only its isomorphism class is reported.
//
// The boundary from degree 1 is f |-> {(-1)^i (d f_i - f_{i-1} d)}: the
// degree-n formula at n = 1 lands in maps with d g_i = -g_{i-1} d, and the
// factor (-1)^i carries those onto chain maps while keeping D_1 D_2 = 0.
struct HomComplex {
  ChainComplex complex;
  bool degree0_free = false;
  ModuleDescriptor degree0;
  // Columns span the chain maps inside Π_i hom(X_i, Y_i) (only when free).
  std::optional<MatrixR> degree0_basis;
  // |image of the boundary into degree 0| = p^boundary_image_log.
  std::size_t boundary_image_log = 0;
};

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y);

// Composite f∘g; requires g.target() == f.source().
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap identity_map(const ChainComplex& x);
ChainMap zero_map(const ChainComplex& x, const ChainComplex& y);

// Inclusion Y -> C(f) and the quotient C(f) -> Σ^1 X.
ChainMap cone_inclusion(const ChainMap& f);
ChainMap cone_projection(const ChainMap& f);

}  // namespace cellx
