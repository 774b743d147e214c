#include "cellx/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cellx/errors.hpp"

namespace cellx {

namespace {

void require_same_ring(const ChainComplex& x, const ChainComplex& y, const char* op) {
  if (!(x.ring() == y.ring()))
    throw UsageError(std::string(op) + ": ring mismatch " + x.ring().to_string() + " vs " +
                     y.ring().to_string());
}

RingElement sign(const RingSpec& ring, int k) { return (k % 2 == 0) ? ring.one() : -ring.one(); }

// Assembles a complex from per-degree ranks and a builder for d_n.
template <typename Fn>
ChainComplex build(const RingSpec& ring, std::vector<std::size_t> ranks, Fn&& dn) {
  std::vector<MatrixR> diffs;
  for (std::size_t n = 1; n < ranks.size(); ++n) diffs.push_back(dn(static_cast<int>(n)));
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

}  // namespace

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<MatrixR> mats)
    : source_(std::move(source)), target_(std::move(target)), mats_(std::move(mats)) {
  require_same_ring(source_, target_, "chain map");
  const auto degrees = static_cast<std::size_t>(std::max(source_.length(), target_.length()));
  if (mats_.size() != degrees)
    throw UsageError("chain map needs " + std::to_string(degrees) + " matrices, got " +
                     std::to_string(mats_.size()));
  for (std::size_t n = 0; n < degrees; ++n) {
    const auto& m = mats_[n];
    const int deg = static_cast<int>(n);
    if (!(m.ring() == source_.ring())) throw UsageError("chain map matrix from another ring");
    if (m.rows() != target_.rank(deg) || m.cols() != source_.rank(deg))
      throw UsageError("chain map component in degree " + std::to_string(n) + " must be " +
                       std::to_string(target_.rank(deg)) + "x" + std::to_string(source_.rank(deg)));
  }
}

MatrixR ChainMap::at(int n) const {
  if (n >= 0 && n < degrees()) return mats_[static_cast<std::size_t>(n)];
  return MatrixR(source_.ring(), target_.rank(n), source_.rank(n));
}

std::optional<Diagnostic> ChainMap::check_commutes() const {
  for (int n = 1; n < degrees(); ++n) {
    if (!(matmul(target_.d(n), at(n)) == matmul(at(n - 1), source_.d(n))))
      return Diagnostic{n, "chain map does not commute with the differentials in degree " +
                               std::to_string(n)};
  }
  return std::nullopt;
}

ChainComplex shift(const ChainComplex& x, int i) {
  if (i < 0) throw DomainError("shift amount must be non-negative");
  if (x.is_zero()) return x;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(i), 0);
  ranks.insert(ranks.end(), x.ranks().begin(), x.ranks().end());
  const auto s = sign(x.ring(), i);
  return build(x.ring(), std::move(ranks), [&](int n) { return x.d(n - i).scaled(s); });
}

ChainComplex desuspend(const ChainComplex& x, int k) {
  if (k < 0) throw DomainError("desuspension amount must be non-negative");
  for (int n = 0; n < k; ++n)
    if (x.rank(n) != 0)
      throw DomainError("cannot desuspend by " + std::to_string(k) + ": degree " +
                        std::to_string(n) + " is nonzero");
  if (x.length() <= k) return ChainComplex(x.ring());
  std::vector<std::size_t> ranks(x.ranks().begin() + k, x.ranks().end());
  const auto s = sign(x.ring(), k);
  return build(x.ring(), std::move(ranks), [&](int n) { return x.d(n + k).scaled(s); });
}

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y) {
  require_same_ring(x, y, "direct_sum");
  const int len = std::max(x.length(), y.length());
  std::vector<std::size_t> ranks;
  for (int n = 0; n < len; ++n) ranks.push_back(x.rank(n) + y.rank(n));
  return build(x.ring(), std::move(ranks),
               [&](int n) { return block_diagonal(x.d(n), y.d(n)); });
}

ChainComplex cone(const ChainMap& f) {
  if (auto diag = f.check_commutes())
    throw UsageError("cone: input is not a chain map (" + diag->message + ")");
  const auto& x = f.source();
  const auto& y = f.target();
  const auto& ring = x.ring();
  const int len = std::max(y.length(), x.is_zero() ? 0 : x.length() + 1);
  std::vector<std::size_t> ranks;
  for (int n = 0; n < len; ++n) ranks.push_back(y.rank(n) + x.rank(n - 1));
  return build(ring, ranks, [&](int n) {
    MatrixR d(ring, ranks[n - 1], ranks[n]);
    d.set_block(0, 0, y.d(n));
    d.set_block(0, y.rank(n), f.at(n - 1));
    d.set_block(y.rank(n - 1), y.rank(n), x.d(n - 1).scaled(-ring.one()));
    return d;
  });
}

ChainMap cone_inclusion(const ChainMap& f) {
  const ChainComplex c = cone(f);
  const auto& y = f.target();
  std::vector<MatrixR> mats;
  for (int n = 0; n < std::max(c.length(), y.length()); ++n) {
    MatrixR m(c.ring(), c.rank(n), y.rank(n));
    m.set_block(0, 0, MatrixR::identity(c.ring(), y.rank(n)));
    mats.push_back(std::move(m));
  }
  return ChainMap(y, c, std::move(mats));
}

ChainMap cone_projection(const ChainMap& f) {
  const ChainComplex c = cone(f);
  const ChainComplex sx = shift(f.source(), 1);
  const auto& y = f.target();
  std::vector<MatrixR> mats;
  for (int n = 0; n < std::max(c.length(), sx.length()); ++n) {
    MatrixR m(c.ring(), sx.rank(n), c.rank(n));
    m.set_block(0, y.rank(n), MatrixR::identity(c.ring(), sx.rank(n)));
    mats.push_back(std::move(m));
  }
  return ChainMap(c, sx, std::move(mats));
}

ChainComplex tensor(const ChainComplex& x, const ChainComplex& y) {
  require_same_ring(x, y, "tensor");
  const auto& ring = x.ring();
  if (x.is_zero() || y.is_zero()) return ChainComplex(ring);
  const int len = x.length() + y.length() - 1;

  // offset[n][i] = position of the X_i ⊗ Y_{n-i} block inside degree n.
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(len));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(len), 0);
  for (int n = 0; n < len; ++n) {
    offset[n].assign(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
      offset[n][i] = ranks[n];
      ranks[n] += x.rank(i) * y.rank(n - i);
    }
  }
  return build(ring, ranks, [&](int n) {
    MatrixR d(ring, ranks[n - 1], ranks[n]);
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      if (x.rank(i) * y.rank(j) == 0) continue;
      if (i >= 1 && x.rank(i - 1) * y.rank(j) != 0)
        d.set_block(offset[n - 1][i - 1], offset[n][i],
                    kronecker(x.d(i), MatrixR::identity(ring, y.rank(j))));
      if (j >= 1 && x.rank(i) * y.rank(j - 1) != 0)
        d.set_block(offset[n - 1][i], offset[n][i],
                    kronecker(MatrixR::identity(ring, x.rank(i)), y.d(j)).scaled(sign(ring, i)));
    }
    return d;
  });
}

namespace {

// Coordinates of Π_i hom(X_i, Y_{i+n}).
struct HomLayout {
  std::vector<std::size_t> offset;  // indexed by i
  std::size_t size = 0;

  HomLayout(const ChainComplex& x, const ChainComplex& y, int n) {
    for (int i = 0; i < x.length(); ++i) {
      offset.push_back(size);
      size += y.rank(i + n) * x.rank(i);
    }
  }
  std::size_t index(const ChainComplex& x, int i, std::size_t row, std::size_t col) const {
    return offset[static_cast<std::size_t>(i)] + row * x.rank(i) + col;
  }
};

// Matrix of f |-> {dY f_i + c_top(i) * f_{i-1} dX} from degree n to degree
// n - 1, each output block i multiplied by outer(i).
template <typename OuterSign>
MatrixR hom_boundary(const ChainComplex& x, const ChainComplex& y, int n, const RingElement& c,
                     OuterSign&& outer) {
  const auto& ring = x.ring();
  const HomLayout src(x, y, n), dst(x, y, n - 1);
  MatrixR m(ring, dst.size, src.size);
  for (int i = 0; i < x.length(); ++i) {
    const MatrixR dy = y.d(i + n);      // Y_{i+n} -> Y_{i+n-1}
    const MatrixR dx = x.d(i);          // X_i -> X_{i-1}
    const RingElement s = outer(i);
    for (std::size_t row = 0; row < y.rank(i + n - 1); ++row)
      for (std::size_t col = 0; col < x.rank(i); ++col) {
        const std::size_t out = dst.index(x, i, row, col);
        // (dY f_i)[row, col] = Σ_k dY[row, k] f_i[k, col]
        for (std::size_t k = 0; k < y.rank(i + n); ++k)
          if (!dy(row, k).is_zero())
            m.set(out, src.index(x, i, k, col), m(out, src.index(x, i, k, col)) + s * dy(row, k));
        // (f_{i-1} dX)[row, col] = Σ_k f_{i-1}[row, k] dX[k, col]
        if (i >= 1)
          for (std::size_t k = 0; k < x.rank(i - 1); ++k)
            if (!dx(k, col).is_zero()) {
              const std::size_t in = src.index(x, i - 1, row, k);
              m.set(out, in, m(out, in) + s * c * dx(k, col));
            }
      }
  }
  return m;
}

std::size_t image_log(const MatrixR& m) {
  const auto form = local_smith_form(m);
  return 2 * form.units + form.r_pivots;
}

}  // namespace

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
  require_same_ring(x, y, "hom_complex");
  const auto& ring = x.ring();
  const int len = std::max(y.length(), 1);
  std::vector<std::size_t> ranks;
  for (int n = 0; n < len; ++n) ranks.push_back(HomLayout(x, y, n).size);

  auto plus_one = [&](int) { return ring.one(); };
  // Chain-map condition on Π_i hom(X_i, Y_i): d f_i - f_{i-1} d = 0.
  const MatrixR cycle_condition = hom_boundary(x, y, 0, -ring.one(), plus_one);
  const MatrixR d1 = len > 1 ? hom_boundary(x, y, 1, -ring.one(),
                                            [&](int i) { return sign(ring, i); })
                             : MatrixR(ring, ranks[0], 0);

  const auto form = local_smith_form(cycle_condition);
  const std::size_t n0 = ranks[0];
  HomComplex out{ChainComplex(ring), form.r_pivots == 0,
                 {n0 - form.units - form.r_pivots, form.r_pivots}, std::nullopt, image_log(d1)};

  // Kernel coordinates are the trailing entries of Q^-1 v.
  const std::size_t lead = form.units + form.r_pivots;
  const MatrixR& q = form.columns.inverse;
  const MatrixR& q_inv = form.columns.forward;
  MatrixR d1_in_kernel(ring, 0, d1.cols());
  if (out.degree0_free) {
    out.degree0_basis = q.block(0, lead, n0, n0 - lead);
    const MatrixR coords = matmul(q_inv, d1);
    if (!coords.block(0, 0, lead, coords.cols()).is_zero())
      throw std::logic_error("hom_complex: boundary does not land in chain maps");
    d1_in_kernel = coords.block(lead, 0, n0 - lead, coords.cols());
    ranks[0] = n0 - lead;
  } else {
    ranks[0] = 0;
    d1_in_kernel = MatrixR(ring, 0, d1.cols());
  }

  out.complex = build(ring, ranks, [&](int n) {
    if (n == 1) return d1_in_kernel;
    return hom_boundary(x, y, n, sign(ring, n), plus_one);
  });
  return out;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  if (!(g.target() == f.source())) throw UsageError("compose: g's target is not f's source");
  std::vector<MatrixR> mats;
  for (int n = 0; n < std::max(g.source().length(), f.target().length()); ++n)
    mats.push_back(matmul(f.at(n), g.at(n)));
  return ChainMap(g.source(), f.target(), std::move(mats));
}

ChainMap identity_map(const ChainComplex& x) {
  std::vector<MatrixR> mats;
  for (int n = 0; n < x.length(); ++n) mats.push_back(MatrixR::identity(x.ring(), x.rank(n)));
  return ChainMap(x, x, std::move(mats));
}

ChainMap zero_map(const ChainComplex& x, const ChainComplex& y) {
  require_same_ring(x, y, "zero_map");
  std::vector<MatrixR> mats;
  for (int n = 0; n < std::max(x.length(), y.length()); ++n)
    mats.emplace_back(x.ring(), y.rank(n), x.rank(n));
  return ChainMap(x, y, std::move(mats));
}

}  // namespace cellx
