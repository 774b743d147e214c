#pragma once

// Definition-level checks by exhaustive enumeration over the finite ring.
//
// These routines never call the decomposition engine on the path that
// produces their verdict, so they can be used to test it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cellx/complex.hpp"
#include "cellx/ops.hpp"

namespace cellx {

struct SizeGuard {
  // Upper bound on the number of candidates an enumeration may face, counted
  // before any pruning.
  std::uint64_t max_search_space = std::uint64_t{1} << 20;
};

// Calls visit(mats) once for every chain map x -> y, where mats[n] is the
// degree-n component. Stops early when visit returns false. Candidates are
// built degree by degree; a column of f_n is only kept when
// d f_n = f_{n-1} d holds on that column. Throws GuardRefusal when
// |R|^(Σ_n rank x_n * rank y_n) exceeds the guard.
void for_each_chain_map(const ChainComplex& x, const ChainComplex& y, const SizeGuard& guard,
                        const std::function<bool(const std::vector<MatrixR>&)>& visit);

std::vector<ChainMap> enumerate_chain_maps(const ChainComplex& x, const ChainComplex& y,
                                           const SizeGuard& guard = {});

// True iff the images of H_0(f) over all chain maps f : a -> y generate
// H_0(y). A map out of a direct sum of copies of a is a family of maps out of
// a, so this is the same as asking for some ⊕_I a -> y onto H_0.
// Throws DomainError when H_0(a) = 0.
bool exists_h0_epi(const ChainComplex& a, const ChainComplex& y, const SizeGuard& guard = {});

struct CrossCheck {
  bool lattice = false;  // is_cellular(x, a)
  bool oracle = false;   // enumeration verdict
  bool agree = false;
  // "h0-epi": direct enumeration; "h0-epi-desuspended": both desuspended by
  // i_A first; "shift": i_X < i_A so the answer is false; "acyclic": A is
  // contractible and the oracle checks that X is acyclic elementwise.
  std::string route;
};

CrossCheck cross_check(const ChainComplex& x, const ChainComplex& a, const SizeGuard& guard = {});

// 0 -> X -> Y -> Z -> 0 with Y_n = X_n ⊕ Z_n and d^Y = [[d^X, h], [0, d^Z]].
struct Extension {
  ChainComplex extension;
  // connecting[n - 1] = h_n : Z_n -> X_{n-1}.
  std::vector<MatrixR> connecting;
  ChainMap inclusion;
  ChainMap projection;
  std::uint64_t seed = 0;
};

// Throws InvalidComplex when the given h does not give d∘d = 0.
Extension extend(const ChainComplex& x, const ChainComplex& z, std::vector<MatrixR> connecting);

// Samples h by rejection within `attempts` tries, falling back to h = 0.
Extension random_extension(const ChainComplex& x, const ChainComplex& z, std::uint64_t seed,
                           int attempts = 64);

}  // namespace cellx
