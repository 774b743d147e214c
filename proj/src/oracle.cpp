#include "cellx/oracle.hpp"

#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "cellx/errors.hpp"
#include "cellx/lattice.hpp"
#include "cellx/reduce.hpp"

namespace cellx {

namespace {

using Vec = std::vector<RingElement>;

// Enumerates R^n; index digits are base |R|, lowest coordinate first.
class VectorSpace {
 public:
  VectorSpace(const RingSpec& ring, std::size_t dim) : ring_(ring), dim_(dim) {
    size_ = 1;
    for (std::size_t k = 0; k < dim; ++k) size_ *= static_cast<std::uint64_t>(ring.order());
  }

  std::uint64_t size() const { return size_; }

  Vec at(std::uint64_t index) const {
    Vec v;
    v.reserve(dim_);
    const auto q = static_cast<std::uint64_t>(ring_.order());
    for (std::size_t k = 0; k < dim_; ++k) {
      v.push_back(ring_.element_at(static_cast<std::int64_t>(index % q)));
      index /= q;
    }
    return v;
  }

  std::uint64_t index(const Vec& v) const {
    std::uint64_t idx = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
      idx = idx * static_cast<std::uint64_t>(ring_.order()) + static_cast<std::uint64_t>(it->index());
    return idx;
  }

 private:
  RingSpec ring_;
  std::size_t dim_;
  std::uint64_t size_;
};

Vec act(const MatrixR& m, const Vec& v) {
  Vec out(m.rows(), m.ring().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Vec column(const MatrixR& m, std::size_t c) {
  Vec v;
  for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, c));
  return v;
}

void check_guard(double log2_needed, const SizeGuard& guard, const std::string& what) {
  if (log2_needed > std::log2(static_cast<double>(guard.max_search_space)) + 1e-9)
    throw GuardRefusal(what + " needs a search space of 2^" + std::to_string(log2_needed) +
                           ", guard allows " + std::to_string(guard.max_search_space),
                       log2_needed);
}

// H_0(y) = y_0 / im d_1 as an explicit coset table.
class ZeroHomology {
 public:
  ZeroHomology(const ChainComplex& y, const SizeGuard& guard)
      : ring_(y.ring()), space_(y.ring(), y.rank(0)) {
    const VectorSpace above(ring_, y.rank(1));
    check_guard(std::log2(static_cast<double>(space_.size())) +
                    std::log2(static_cast<double>(above.size())),
                guard, "H_0 coset table");
    const MatrixR d1 = y.d(1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t w = 0; w < above.size(); ++w) {
      const auto b = act(d1, above.at(w));
      if (seen.insert(space_.index(b)).second) boundaries_.push_back(b);
    }
    coset_.assign(space_.size(), kUnset);
    for (std::uint64_t v = 0; v < space_.size(); ++v) {
      if (coset_[v] != kUnset) continue;
      const Vec rep = space_.at(v);
      for (const auto& b : boundaries_) coset_[space_.index(add(rep, b))] = v;
      ++count_;
    }
  }

  std::uint64_t count() const { return count_; }
  std::uint64_t coset_of(const Vec& v) const { return coset_[space_.index(v)]; }
  Vec representative(std::uint64_t id) const { return space_.at(id); }

  // Size of the submodule generated by the given coset ids.
  std::uint64_t span_size(const std::unordered_set<std::uint64_t>& generators) const {
    std::unordered_set<std::uint64_t> span{coset_of(Vec(space_.at(0)))};
    for (auto g : generators) {
      if (span.contains(g)) continue;
      const Vec gv = representative(g);
      std::unordered_set<std::uint64_t> next;
      for (auto s : span) {
        const Vec sv = representative(s);
        for (std::int64_t c = 0; c < ring_.order(); ++c) {
          const auto coeff = ring_.element_at(c);
          Vec t = sv;
          for (std::size_t k = 0; k < t.size(); ++k) t[k] += coeff * gv[k];
          next.insert(coset_of(t));
        }
      }
      span = std::move(next);
      if (span.size() == count_) break;
    }
    return span.size();
  }

 private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  static Vec add(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  }

  RingSpec ring_;
  VectorSpace space_;
  std::vector<Vec> boundaries_;
  std::vector<std::uint64_t> coset_;
  std::uint64_t count_ = 0;
};

}  // namespace

void for_each_chain_map(const ChainComplex& x, const ChainComplex& y, const SizeGuard& guard,
                        const std::function<bool(const std::vector<MatrixR>&)>& visit) {
  if (!(x.ring() == y.ring())) throw UsageError("enumerate_chain_maps: ring mismatch");
  const auto& ring = x.ring();
  const int degrees = std::max(x.length(), y.length());
  std::size_t entries = 0;
  for (int n = 0; n < degrees; ++n) entries += x.rank(n) * y.rank(n);
  check_guard(static_cast<double>(entries) * std::log2(static_cast<double>(ring.order())), guard,
              "chain map enumeration");

  std::vector<MatrixR> mats;
  for (int n = 0; n < degrees; ++n) mats.emplace_back(ring, y.rank(n), x.rank(n));

  // Recursion over degrees, then over columns of the current degree.
  bool stop = false;
  std::function<void(int)> degree_step;
  degree_step = [&](int n) {
    if (stop) return;
    if (n == degrees) {
      if (!visit(mats)) stop = true;
      return;
    }
    const VectorSpace col_space(ring, y.rank(n));
    const MatrixR dy = y.d(n);
    const MatrixR rhs = n >= 1 ? matmul(mats[n - 1], x.d(n)) : MatrixR(ring, 0, x.rank(n));
    // Columns of f_n are constrained independently: d^Y f_n[:,c] = rhs[:,c].
    std::vector<std::vector<Vec>> choices(x.rank(n));
    for (std::size_t c = 0; c < x.rank(n); ++c) {
      const Vec target = n >= 1 ? column(rhs, c) : Vec(dy.rows(), ring.zero());
      for (std::uint64_t idx = 0; idx < col_space.size(); ++idx) {
        Vec v = col_space.at(idx);
        if (act(dy, v) == target) choices[c].push_back(std::move(v));
      }
      if (choices[c].empty()) return;
    }
    if (x.rank(n) == 0) {
      // Nothing to choose, but d^Y_n * 0 = f_{n-1} d^X_n must still hold.
      if (n >= 1 && !rhs.is_zero()) return;
      degree_step(n + 1);
      return;
    }
    std::function<void(std::size_t)> column_step;
    column_step = [&](std::size_t c) {
      if (stop) return;
      if (c == x.rank(n)) {
        degree_step(n + 1);
        return;
      }
      for (const auto& v : choices[c]) {
        for (std::size_t r = 0; r < v.size(); ++r) mats[n].set(r, c, v[r]);
        column_step(c + 1);
        if (stop) return;
      }
    };
    column_step(0);
  };
  degree_step(0);
}

std::vector<ChainMap> enumerate_chain_maps(const ChainComplex& x, const ChainComplex& y,
                                           const SizeGuard& guard) {
  std::vector<ChainMap> out;
  for_each_chain_map(x, y, guard, [&](const std::vector<MatrixR>& mats) {
    out.emplace_back(x, y, mats);
    return true;
  });
  return out;
}

bool exists_h0_epi(const ChainComplex& a, const ChainComplex& y, const SizeGuard& guard) {
  if (!(a.ring() == y.ring())) throw UsageError("exists_h0_epi: ring mismatch");
  const ZeroHomology h0_a(a, guard);
  if (h0_a.count() <= 1)
    throw DomainError("exists_h0_epi needs H_0(A) != 0; desuspend both complexes first");
  const ZeroHomology h0_y(y, guard);
  if (h0_y.count() == 1) return true;

  std::unordered_set<std::uint64_t> generators;
  for_each_chain_map(a, y, guard, [&](const std::vector<MatrixR>& mats) {
    if (mats.empty()) return true;
    const MatrixR& f0 = mats[0];
    for (std::size_t c = 0; c < f0.cols(); ++c) generators.insert(h0_y.coset_of(column(f0, c)));
    return true;
  });
  return h0_y.span_size(generators) == h0_y.count();
}

CrossCheck cross_check(const ChainComplex& x, const ChainComplex& a, const SizeGuard& guard) {
  CrossCheck out;
  out.lattice = is_cellular(x, a).holds;

  const auto pair_a = min_pair(a);
  if (!pair_a) {
    out.route = "acyclic";
    const std::size_t limit = static_cast<std::size_t>(
        std::min<std::uint64_t>(guard.max_search_space, std::uint64_t{1} << 40));
    out.oracle = true;
    for (const auto& h : brute_homology(x, limit)) out.oracle = out.oracle && h.is_zero();
  } else if (pair_a->start == 0) {
    out.route = "h0-epi";
    out.oracle = exists_h0_epi(a, x, guard);
  } else {
    const auto pair_x = min_pair(x);
    if (pair_x && pair_x->start < pair_a->start) {
      out.route = "shift";
      out.oracle = false;
    } else {
      out.route = "h0-epi-desuspended";
      const ChainComplex xs = desuspend(minimize(x).minimal, pair_a->start);
      const ChainComplex as = desuspend(minimize(a).minimal, pair_a->start);
      out.oracle = exists_h0_epi(as, xs, guard);
    }
  }
  out.agree = out.lattice == out.oracle;
  return out;
}

Extension extend(const ChainComplex& x, const ChainComplex& z, std::vector<MatrixR> connecting) {
  if (!(x.ring() == z.ring())) throw UsageError("extension: ring mismatch");
  const auto& ring = x.ring();
  const int len = std::max(x.length(), z.length());
  if (connecting.size() != static_cast<std::size_t>(std::max(len - 1, 0)))
    throw UsageError("extension needs one connecting block per degree 1.." +
                     std::to_string(len - 1));
  std::vector<std::size_t> ranks;
  for (int n = 0; n < len; ++n) ranks.push_back(x.rank(n) + z.rank(n));
  std::vector<MatrixR> diffs;
  for (int n = 1; n < len; ++n) {
    const auto& h = connecting[static_cast<std::size_t>(n - 1)];
    if (h.rows() != x.rank(n - 1) || h.cols() != z.rank(n))
      throw UsageError("connecting block h_" + std::to_string(n) + " has the wrong shape");
    MatrixR d(ring, ranks[n - 1], ranks[n]);
    d.set_block(0, 0, x.d(n));
    d.set_block(0, x.rank(n), h);
    d.set_block(x.rank(n - 1), x.rank(n), z.d(n));
    diffs.push_back(std::move(d));
  }
  ChainComplex y(ring, ranks, std::move(diffs));
  require_valid(y);

  std::vector<MatrixR> inc, proj;
  for (int n = 0; n < std::max(len, y.length()); ++n) {
    MatrixR i(ring, y.rank(n), x.rank(n));
    i.set_block(0, 0, MatrixR::identity(ring, x.rank(n)));
    inc.push_back(std::move(i));
    MatrixR p(ring, z.rank(n), y.rank(n));
    p.set_block(0, x.rank(n), MatrixR::identity(ring, z.rank(n)));
    proj.push_back(std::move(p));
  }
  ChainMap inclusion(x, y, std::move(inc));
  ChainMap projection(y, z, std::move(proj));
  return Extension{std::move(y), std::move(connecting), std::move(inclusion),
                   std::move(projection), 0};
}

Extension random_extension(const ChainComplex& x, const ChainComplex& z, std::uint64_t seed,
                           int attempts) {
  if (!(x.ring() == z.ring())) throw UsageError("extension: ring mismatch");
  const auto& ring = x.ring();
  const int len = std::max(x.length(), z.length());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, ring.p() - 1);

  auto zero_blocks = [&] {
    std::vector<MatrixR> h;
    for (int n = 1; n < len; ++n) h.emplace_back(ring, x.rank(n - 1), z.rank(n));
    return h;
  };

  // h = 0 is drawn directly one time in eight.
  if (std::uniform_int_distribution<int>(0, 7)(rng) != 0) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
      auto h = zero_blocks();
      const int mode = attempt % 3;  // arbitrary, in m, sparse arbitrary
      for (auto& block : h)
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) {
            if (mode == 2 && (rng() & 1)) continue;
            const std::int64_t a = mode == 1 ? 0 : coord(rng);
            block.set(r, c, ring.element(a, coord(rng)));
          }
      try {
        auto e = extend(x, z, std::move(h));
        e.seed = seed;
        return e;
      } catch (const InvalidComplex&) {
      }
    }
  }
  auto e = extend(x, z, zero_blocks());
  e.seed = seed;
  return e;
}

}  // namespace cellx
