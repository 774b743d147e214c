#include "cellx/random.hpp"

#include <algorithm>

namespace cellx {

namespace {

std::int64_t coord(const RingSpec& ring, Rng& rng) {
  return std::uniform_int_distribution<std::int64_t>(0, ring.p() - 1)(rng);
}

std::vector<std::size_t> draw_ranks(const RandomComplexOptions& opts, Rng& rng) {
  const int top = std::uniform_int_distribution<int>(0, std::max(opts.max_degree, 0))(rng);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1);
  std::uniform_int_distribution<std::size_t> rank(0, opts.max_rank);
  for (auto& r : ranks) r = rank(rng);
  return ranks;
}

}  // namespace

RingElement random_element(const RingSpec& ring, Rng& rng) {
  return ring.element_at(std::uniform_int_distribution<std::int64_t>(0, ring.order() - 1)(rng));
}

RingElement random_m_element(const RingSpec& ring, Rng& rng) {
  return ring.element(0, coord(ring, rng));
}

MatrixR random_matrix(const RingSpec& ring, std::size_t rows, std::size_t cols, Rng& rng) {
  MatrixR m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_element(ring, rng));
  return m;
}

ChainComplex random_minimal_complex(const RingSpec& ring, const RandomComplexOptions& opts,
                                    Rng& rng) {
  auto ranks = draw_ranks(opts, rng);
  std::vector<MatrixR> diffs;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    MatrixR d(ring, ranks[n - 1], ranks[n]);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) d.set(i, j, random_m_element(ring, rng));
    diffs.push_back(std::move(d));
  }
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

ChainComplex random_complex_with_units(const RingSpec& ring, const RandomComplexOptions& opts,
                                       Rng& rng, int budget_per_degree) {
  auto ranks = draw_ranks(opts, rng);
  std::vector<MatrixR> diffs;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    MatrixR chosen(ring, ranks[n - 1], ranks[n]);
    for (int attempt = 0; attempt < budget_per_degree; ++attempt) {
      MatrixR d = random_matrix(ring, ranks[n - 1], ranks[n], rng);
      if (n == 1 || matmul(diffs.back(), d).is_zero()) {
        chosen = std::move(d);
        break;
      }
    }
    diffs.push_back(std::move(chosen));
  }
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

BasisChange random_invertible(const RingSpec& ring, std::size_t n, Rng& rng) {
  BasisChange bc = BasisChange::identity(ring, n);
  if (n == 0) return bc;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t step = 0; step < 3 * n * n + 2; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    switch (rng() % 3) {
      case 0:
        bc.row_swap(i, j);
        break;
      case 1:
        bc.row_scale(i, ring.element(1 + coord(ring, rng) % (ring.p() - 1), coord(ring, rng)));
        break;
      default:
        if (i != j) bc.row_add(i, j, random_element(ring, rng));
        break;
    }
  }
  return bc;
}

ChainComplex scramble(const ChainComplex& x, Rng& rng) {
  std::vector<BasisChange> bases;
  for (int n = 0; n < x.length(); ++n) bases.push_back(random_invertible(x.ring(), x.rank(n), rng));
  std::vector<MatrixR> diffs;
  for (int n = 1; n < x.length(); ++n)
    diffs.push_back(apply_basis_change(x.d(n), bases[n - 1].forward, bases[n].inverse));
  return ChainComplex(x.ring(), x.ranks(), std::move(diffs));
}

ChainComplex random_complex(const RingSpec& ring, const RandomComplexOptions& opts, Rng& rng) {
  const auto ranks = draw_ranks(opts, rng);
  const int top = static_cast<int>(ranks.size()) - 1;
  // disks[n] = number of D^n summands; D^n occupies one slot in n and n - 1.
  std::vector<std::size_t> disks(ranks.size() + 1, 0);
  for (int n = top; n >= 1; --n) {
    const std::size_t room = std::min(ranks[n] - disks[n + 1], ranks[n - 1]);
    disks[n] = std::uniform_int_distribution<std::size_t>(0, room)(rng);
  }
  std::vector<std::size_t> minimal_ranks(ranks.size());
  for (int n = 0; n <= top; ++n) minimal_ranks[n] = ranks[n] - disks[n] - disks[n + 1];

  std::vector<MatrixR> diffs;
  for (int n = 1; n <= top; ++n) {
    MatrixR d(ring, minimal_ranks[n - 1], minimal_ranks[n]);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) d.set(i, j, random_m_element(ring, rng));
    diffs.push_back(std::move(d));
  }
  ChainComplex x(ring, minimal_ranks, std::move(diffs));
  for (int n = 1; n <= top; ++n)
    for (std::size_t k = 0; k < disks[n]; ++k) x = direct_sum(x, disk(ring, n));
  return scramble(x, rng);
}

ChainComplex random_disk_sum(const RingSpec& ring, int max_degree, int max_disks, Rng& rng) {
  const int count = std::uniform_int_distribution<int>(1, std::max(max_disks, 1))(rng);
  ChainComplex x(ring);
  for (int k = 0; k < count; ++k)
    x = direct_sum(x, disk(ring, std::uniform_int_distribution<int>(1, std::max(max_degree, 1))(rng)));
  return scramble(x, rng);
}

ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, Rng& rng) {
  const auto& ring = x.ring();
  const Minimization mx = minimize(x);
  const Minimization my = minimize(y);
  const int len = std::max(x.length(), y.length());

  std::vector<MatrixR> homotopy;  // h_n : X_n -> Y_{n+1}
  for (int n = 0; n < len; ++n) homotopy.push_back(random_matrix(ring, y.rank(n + 1), x.rank(n), rng));

  std::vector<MatrixR> mats;
  for (int n = 0; n < len; ++n) {
    MatrixR block(ring, y.rank(n), x.rank(n));
    for (std::size_t i = 0; i < my.minimal.rank(n); ++i)
      for (std::size_t j = 0; j < mx.minimal.rank(n); ++j) block.set(i, j, random_m_element(ring, rng));
    MatrixR f = block;
    if (n < x.length() && n < y.length())
      f = matmul(matmul(my.basis_change[n].inverse, block), mx.basis_change[n].forward);
    f = add(f, matmul(y.d(n + 1), homotopy[n]));
    if (n >= 1) f = add(f, matmul(homotopy[n - 1], x.d(n)));
    mats.push_back(std::move(f));
  }
  return ChainMap(x, y, std::move(mats));
}

}  // namespace cellx
