#include "cellx/reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cellx/errors.hpp"
#include "cellx/ops.hpp"

namespace cellx {

namespace {

// Differentials of a complex under simultaneous change of basis in every
// degree. An operation E on the coordinates of X_n acts as E * d_{n+1} on the
// rows of d_{n+1} and as d_n * E^-1 on the columns of d_n.
class WorkingComplex {
 public:
  explicit WorkingComplex(const ChainComplex& x) : top_(x.top_degree()) {
    for (int n = 0; n <= top_; ++n) {
      bases_.push_back(BasisChange::identity(x.ring(), x.rank(n)));
      active_.emplace_back(x.rank(n), true);
    }
    for (int n = 1; n <= top_; ++n) diffs_.push_back(x.d(n));
  }

  MatrixR& d(int n) { return diffs_[static_cast<std::size_t>(n - 1)]; }
  std::vector<bool>& active(int n) { return active_[static_cast<std::size_t>(n)]; }
  int top() const { return top_; }

  // x_dst += c x_src in degree n.
  // c is taken by value: callers pass entries of the matrices being modified.
  void add(int n, std::size_t dst, std::size_t src, RingElement c) {
    if (n + 1 <= top_) d(n + 1).add_row_multiple(dst, src, c);
    if (n >= 1) d(n).add_col_multiple(src, dst, -c);
    bases_[static_cast<std::size_t>(n)].row_add(dst, src, c);
  }

  void scale(int n, std::size_t i, RingElement u) {
    if (n + 1 <= top_) d(n + 1).scale_row(i, u);
    if (n >= 1) d(n).scale_col(i, u.inverse());
    bases_[static_cast<std::size_t>(n)].row_scale(i, u);
  }

  std::optional<std::pair<std::size_t, std::size_t>> unit_pivot(int n) {
    const MatrixR& m = d(n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!active(n - 1)[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (active(n)[j] && m(i, j).is_unit()) return std::pair{i, j};
    }
    return std::nullopt;
  }

  std::vector<BasisChange>& bases() { return bases_; }

 private:
  int top_;
  std::vector<MatrixR> diffs_;
  std::vector<BasisChange> bases_;
  std::vector<std::vector<bool>> active_;
};

struct SplitDisk {
  int degree;
  std::size_t bottom;  // basis index in degree - 1
  std::size_t top;     // basis index in degree
};

}  // namespace

Minimization minimize(const ChainComplex& x) {
  require_valid(x);
  const auto& ring = x.ring();
  WorkingComplex w(x);
  std::vector<SplitDisk> split;

  for (int n = 1; n <= w.top();) {
    const auto piv = w.unit_pivot(n);
    if (!piv) {
      ++n;
      continue;
    }
    const auto [i, j] = *piv;
    w.scale(n - 1, i, w.d(n)(i, j).inverse());
    for (std::size_t k = 0; k < w.d(n).rows(); ++k)
      if (k != i && w.active(n - 1)[k] && !w.d(n)(k, j).is_zero())
        w.add(n - 1, k, i, -w.d(n)(k, j));
    for (std::size_t k = 0; k < w.d(n).cols(); ++k)
      if (k != j && w.active(n)[k] && !w.d(n)(i, k).is_zero())
        w.add(n, j, k, w.d(n)(i, k));
    // d∘d = 0 forces column i of d_{n-1} and row j of d_{n+1} to vanish, so
    // the pair spans a direct summand D^n.
    w.active(n - 1)[i] = false;
    w.active(n)[j] = false;
    split.push_back({n, i, j});
    // Lower degrees are already minimal and stay so: the induced operations
    // on d_{n-1} have coefficients acting on entries of m.
  }

  std::stable_sort(split.begin(), split.end(),
                   [](const SplitDisk& a, const SplitDisk& b) { return a.degree < b.degree; });

  // New basis order per degree: surviving indices, then disk contributions.
  std::vector<std::vector<std::size_t>> order(static_cast<std::size_t>(w.top() + 1));
  std::vector<std::size_t> min_ranks;
  for (int n = 0; n <= w.top(); ++n) {
    for (std::size_t k = 0; k < w.active(n).size(); ++k)
      if (w.active(n)[k]) order[n].push_back(k);
    min_ranks.push_back(order[n].size());
  }
  for (const auto& s : split) {
    order[s.degree - 1].push_back(s.bottom);
    order[s.degree].push_back(s.top);
  }

  std::vector<MatrixR> min_diffs;
  for (int n = 1; n <= w.top(); ++n) {
    MatrixR m(ring, min_ranks[n - 1], min_ranks[n]);
    for (std::size_t r = 0; r < min_ranks[n - 1]; ++r)
      for (std::size_t c = 0; c < min_ranks[n]; ++c) m.set(r, c, w.d(n)(order[n - 1][r], order[n][c]));
    min_diffs.push_back(std::move(m));
  }

  Minimization out{ChainComplex(ring, std::move(min_ranks), std::move(min_diffs)), {}, {}};
  for (const auto& s : split) out.disks.push_back(s.degree);
  for (int n = 0; n <= w.top(); ++n) {
    const auto& bc = w.bases()[static_cast<std::size_t>(n)];
    const std::size_t size = order[n].size();
    BasisChange permuted = BasisChange::identity(ring, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) {
        permuted.forward.set(r, c, bc.forward(order[n][r], c));
        permuted.inverse.set(r, c, bc.inverse(r, order[n][c]));
      }
    out.basis_change.push_back(std::move(permuted));
  }
  return out;
}

bool verify_certificates(const ChainComplex& x, const Minimization& m) {
  ChainComplex block = m.minimal;
  for (int n : m.disks) block = direct_sum(block, disk(x.ring(), n));
  if (block.ranks() != x.ranks()) return false;
  if (m.basis_change.size() != x.ranks().size()) return false;
  for (int n = 0; n < x.length(); ++n) {
    const auto& bc = m.basis_change[static_cast<std::size_t>(n)];
    if (!(matmul(bc.forward, bc.inverse) == MatrixR::identity(x.ring(), x.rank(n)))) return false;
  }
  for (int n = 1; n < x.length(); ++n) {
    const auto& lower = m.basis_change[static_cast<std::size_t>(n - 1)];
    const auto& upper = m.basis_change[static_cast<std::size_t>(n)];
    if (!(apply_basis_change(x.d(n), lower.forward, upper.inverse) == block.d(n))) return false;
  }
  return true;
}

std::size_t composite_rank(const ChainComplex& m, int a, int b) {
  if (a < 0 || a > b || b > m.top_degree())
    throw UsageError("composite_rank needs 0 <= a <= b <= top degree");
  if (!m.is_minimal()) throw UsageError("composite_rank needs a minimal complex");
  MatrixK prod = MatrixK::identity(m.ring().p(), m.rank(a));
  for (int n = a + 1; n <= b; ++n) prod = matmul_k(prod, m.d(n).r_coefficients());
  return rank_k(prod);
}

RankTable::RankTable(const ChainComplex& minimal) : top_(minimal.top_degree()) {
  if (!minimal.is_minimal()) throw UsageError("rank table needs a minimal complex");
  const auto n = static_cast<std::size_t>(top_ + 1);
  rho_.assign(n * n, 0);
  for (int a = 0; a <= top_; ++a) {
    MatrixK prod = MatrixK::identity(minimal.ring().p(), minimal.rank(a));
    rho_[a * n + a] = minimal.rank(a);
    for (int b = a + 1; b <= top_; ++b) {
      prod = matmul_k(prod, minimal.d(b).r_coefficients());
      rho_[a * n + b] = rank_k(prod);
    }
  }
}

std::size_t RankTable::operator()(int a, int b) const {
  if (a < 0 || b > top_ || a > b) return 0;
  return rho_[static_cast<std::size_t>(a) * static_cast<std::size_t>(top_ + 1) + b];
}

long long RankTable::multiplicity(int a, int b) const {
  auto rho = [this](int x, int y) { return static_cast<long long>((*this)(x, y)); };
  return rho(a, b) - rho(a - 1, b) - rho(a, b + 1) + rho(a - 1, b + 1);
}

std::vector<Interval> barcode(const ChainComplex& minimal) {
  const RankTable table(minimal);
  std::vector<Interval> out;
  for (int a = 0; a <= table.top(); ++a)
    for (int b = a; b <= table.top(); ++b) {
      const long long mult = table.multiplicity(a, b);
      if (mult < 0)
        throw std::logic_error("negative interval multiplicity at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      for (long long k = 0; k < mult; ++k) out.push_back({a, b - a});
    }
  return out;
}

bool rank_accounting_holds(const std::vector<std::size_t>& ranks, const Decomposition& d) {
  std::vector<std::size_t> count(ranks.size(), 0);
  auto bump = [&](int n) {
    if (n < 0 || n >= static_cast<int>(count.size())) return false;
    ++count[static_cast<std::size_t>(n)];
    return true;
  };
  for (const auto& iv : d.intervals)
    for (int n = iv.start; n <= iv.end(); ++n)
      if (!bump(n)) return false;
  for (int n : d.disks)
    if (!bump(n) || !bump(n - 1)) return false;
  return count == ranks;
}

Decomposition decompose(const ChainComplex& x) {
  Minimization m = minimize(x);
  Decomposition out{barcode(m.minimal), m.disks, std::nullopt};

  if (!rank_accounting_holds(x.ranks(), out))
    throw std::logic_error("decomposition breaks degreewise rank accounting");
  const ChainComplex rebuilt = reconstruct(out, x.ring());
  const ChainComplex rebuilt_intervals = reconstruct(out.intervals, {}, x.ring());
  if (rebuilt.ranks() != x.ranks() || !(RankTable(rebuilt_intervals) == RankTable(m.minimal)))
    throw std::logic_error("reconstructed complex has a different rank table");

  out.certificates = std::move(m);
  return out;
}

ChainComplex reconstruct(const std::vector<Interval>& intervals, const std::vector<int>& disks,
                         const RingSpec& ring) {
  auto ivs = intervals;
  auto ds = disks;
  std::sort(ivs.begin(), ivs.end());
  std::sort(ds.begin(), ds.end());
  ChainComplex out(ring);
  for (const auto& iv : ivs) out = direct_sum(out, interval(ring, iv.start, iv.span));
  for (int n : ds) out = direct_sum(out, disk(ring, n));
  return out;
}

ChainComplex reconstruct(const Decomposition& d, const RingSpec& ring) {
  return reconstruct(d.intervals, d.disks, ring);
}

}  // namespace cellx
