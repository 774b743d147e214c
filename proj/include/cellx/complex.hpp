#pragma once

// Bounded, non-negatively graded chain complexes of finite free R-modules.
//
// A complex is its rank vector (ranks()[n] = rank of X_n) together with the
// differentials d_n : X_n -> X_{n-1}, stored as rank(n-1) x rank(n) matrices
// for n = 1..top. Trailing zero ranks are trimmed, so the zero complex has an
// empty rank vector and equality is structural.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cellx/linalg.hpp"
#include "cellx/ring.hpp"

namespace cellx {

class ChainComplex {
 public:
  // The zero complex.
  explicit ChainComplex(const RingSpec& ring);

  // diffs[n-1] is d_n and must be ranks[n-1] x ranks[n]. Throws UsageError on
  // a shape or ring mismatch. Does not check d∘d = 0; see validate().
  ChainComplex(const RingSpec& ring, std::vector<std::size_t> ranks,
               std::vector<MatrixR> diffs);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  // Rank in any degree; zero outside [0, top].
  std::size_t rank(int n) const;
  // Number of stored degrees, top_degree() + 1.
  int length() const noexcept { return static_cast<int>(ranks_.size()); }
  int top_degree() const noexcept { return length() - 1; }
  bool is_zero() const noexcept { return ranks_.empty(); }
  std::size_t total_rank() const;

  // d_n for any n; a zero-shaped matrix outside [1, top].
  MatrixR d(int n) const;
  const std::vector<MatrixR>& differentials() const noexcept { return diffs_; }

  // True when every differential entry lies in m (no embedded disks).
  bool is_minimal() const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  RingSpec ring_;
  std::vector<std::size_t> ranks_;
  std::vector<MatrixR> diffs_;
};

struct Diagnostic {
  int degree;
  std::string message;
};

// nullopt when d_{n} d_{n+1} = 0 for every n; otherwise the lowest degree n
// where it fails.
std::optional<Diagnostic> validate(const ChainComplex& x);
// Throws InvalidComplex with the diagnostic.
void require_valid(const ChainComplex& x);

ChainComplex sphere(const RingSpec& ring, int n);
// D^n for n >= 1; throws DomainError for n < 1.
ChainComplex disk(const RingSpec& ring, int n);
// Σ^i E_j: R in degrees i..i+j, every differential multiplication by (-1)^i r.
// interval(ring, 0, 0) is the sphere S^0.
ChainComplex interval(const RingSpec& ring, int i, int j);

// The isomorphism class R^a ⊕ k^b.
struct ModuleDescriptor {
  std::size_t free_rank = 0;     // a
  std::size_t residue_rank = 0;  // b

  bool is_zero() const noexcept { return free_rank == 0 && residue_rank == 0; }
  // log_p of the cardinality, 2a + b.
  std::size_t log_cardinality() const noexcept { return 2 * free_rank + residue_rank; }
  ModuleDescriptor& operator+=(const ModuleDescriptor& o) {
    free_rank += o.free_rank;
    residue_rank += o.residue_rank;
    return *this;
  }
  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

std::string to_string(const ModuleDescriptor& m);

// H_n for n = 0..top, read off the interval decomposition: Σ^i E_0 gives R in
// degree i, Σ^i E_j with j >= 1 gives k in degrees i and i + j.
// Throws InvalidComplex on an invalid complex.
std::vector<ModuleDescriptor> homology(const ChainComplex& x);

// Elementwise homology over the finite ring: enumerates every cycle and every
// boundary. Refuses (GuardRefusal) when |⊕ X_n| = p^(2 Σ ranks) exceeds
// max_elements.
inline constexpr std::size_t kDefaultBruteHomologyElements = 4096;
std::vector<ModuleDescriptor> brute_homology(
    const ChainComplex& x, std::size_t max_elements = kDefaultBruteHomologyElements);

}  // namespace cellx
