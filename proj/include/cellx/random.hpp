#pragma once

// Seeded generators for complexes and chain maps.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "cellx/complex.hpp"
#include "cellx/ops.hpp"
#include "cellx/reduce.hpp"

namespace cellx {

using Rng = std::mt19937_64;

struct RandomComplexOptions {
  int max_degree = 4;        // top degree is drawn from [0, max_degree]
  std::size_t max_rank = 4;  // per-degree rank is drawn from [0, max_rank]
};

// Ranks uniform, differential entries uniform in m. Always valid and minimal.
ChainComplex random_minimal_complex(const RingSpec& ring, const RandomComplexOptions& opts,
                                    Rng& rng);

// Ranks uniform, entries uniform in R, each d_n redrawn until d_{n-1} d_n = 0;
// a degree whose budget runs out gets d_n = 0.
ChainComplex random_complex_with_units(const RingSpec& ring, const RandomComplexOptions& opts,
                                       Rng& rng, int budget_per_degree = 256);

// A minimal part plus disks, conjugated by random invertible matrices, so the
// differentials carry units. Ranks stay within opts.
ChainComplex random_complex(const RingSpec& ring, const RandomComplexOptions& opts, Rng& rng);

// Direct sum of between 1 and max_disks disks of degree <= max_degree, conjugated.
ChainComplex random_disk_sum(const RingSpec& ring, int max_degree, int max_disks, Rng& rng);

// Random invertible matrix together with its inverse.
BasisChange random_invertible(const RingSpec& ring, std::size_t n, Rng& rng);

// x conjugated degreewise by random invertible matrices.
ChainComplex scramble(const ChainComplex& x, Rng& rng);

// A random chain map x -> y: a map between the minimal models with entries in
// m, carried back through the minimization certificates, plus a null-homotopic
// map d h + h d.
ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, Rng& rng);

RingElement random_element(const RingSpec& ring, Rng& rng);
RingElement random_m_element(const RingSpec& ring, Rng& rng);
MatrixR random_matrix(const RingSpec& ring, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace cellx
