#include "cellx/complex.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "cellx/errors.hpp"
#include "cellx/reduce.hpp"

namespace cellx {

ChainComplex::ChainComplex(const RingSpec& ring) : ring_(ring) {}

ChainComplex::ChainComplex(const RingSpec& ring, std::vector<std::size_t> ranks,
                           std::vector<MatrixR> diffs)
    : ring_(ring), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (diffs_.size() != expected)
    throw UsageError("complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                     std::to_string(expected) + " differentials, got " +
                     std::to_string(diffs_.size()));
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const auto& d = diffs_[n - 1];
    if (!(d.ring() == ring_)) throw UsageError("differential from a different ring");
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n])
      throw UsageError("d_" + std::to_string(n) + " must be " + std::to_string(ranks_[n - 1]) +
                       "x" + std::to_string(ranks_[n]) + ", got " + std::to_string(d.rows()) +
                       "x" + std::to_string(d.cols()));
  }
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n >= length()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

std::size_t ChainComplex::total_rank() const {
  return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0});
}

MatrixR ChainComplex::d(int n) const {
  if (n >= 1 && n <= top_degree()) return diffs_[static_cast<std::size_t>(n - 1)];
  return MatrixR(ring_, rank(n - 1), rank(n));
}

bool ChainComplex::is_minimal() const {
  for (const auto& d : diffs_)
    if (!d.is_minimal()) return false;
  return true;
}

std::optional<Diagnostic> validate(const ChainComplex& x) {
  for (int n = 1; n < x.top_degree(); ++n) {
    if (!matmul(x.d(n), x.d(n + 1)).is_zero())
      return Diagnostic{n, "d_" + std::to_string(n) + " * d_" + std::to_string(n + 1) +
                               " is nonzero (d∘d = 0 fails at degree " + std::to_string(n) +
                               ")"};
  }
  return std::nullopt;
}

void require_valid(const ChainComplex& x) {
  if (auto diag = validate(x)) throw InvalidComplex(diag->message, diag->degree);
}

ChainComplex sphere(const RingSpec& ring, int n) {
  if (n < 0) throw DomainError("sphere degree must be non-negative");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks.back() = 1;
  std::vector<MatrixR> diffs;
  for (int k = 1; k <= n; ++k) diffs.emplace_back(ring, ranks[k - 1], ranks[k]);
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

ChainComplex disk(const RingSpec& ring, int n) {
  if (n < 1) throw DomainError("disk(n) needs n >= 1, got " + std::to_string(n));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks[n - 1] = ranks[n] = 1;
  std::vector<MatrixR> diffs;
  for (int k = 1; k <= n; ++k) diffs.emplace_back(ring, ranks[k - 1], ranks[k]);
  diffs.back() = MatrixR::identity(ring, 1);
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

ChainComplex interval(const RingSpec& ring, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("interval(i, j) needs i, j >= 0");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(i + j) + 1, 0);
  for (int n = i; n <= i + j; ++n) ranks[n] = 1;
  const RingElement entry = (i % 2 == 0) ? ring.r() : -ring.r();
  std::vector<MatrixR> diffs;
  for (int n = 1; n <= i + j; ++n) {
    MatrixR d(ring, ranks[n - 1], ranks[n]);
    if (n > i) d.set(0, 0, entry);
    diffs.push_back(std::move(d));
  }
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

std::string to_string(const ModuleDescriptor& m) {
  if (m.is_zero()) return "0";
  std::string s;
  if (m.free_rank) s += m.free_rank == 1 ? "R" : "R^" + std::to_string(m.free_rank);
  if (m.residue_rank) {
    if (!s.empty()) s += " + ";
    s += m.residue_rank == 1 ? "k" : "k^" + std::to_string(m.residue_rank);
  }
  return s;
}

std::vector<ModuleDescriptor> homology(const ChainComplex& x) {
  require_valid(x);
  std::vector<ModuleDescriptor> h(x.ranks().size());
  for (const auto& iv : decompose(x).intervals) {
    if (iv.span == 0) {
      h[iv.start].free_rank += 1;
    } else {
      h[iv.start].residue_rank += 1;
      h[iv.start + iv.span].residue_rank += 1;
    }
  }
  return h;
}

namespace {

using Vec = std::vector<RingElement>;

// Vectors of R^n enumerated by index in base |R|.
Vec vector_at(const RingSpec& ring, std::size_t n, std::uint64_t index) {
  Vec v;
  v.reserve(n);
  const auto q = static_cast<std::uint64_t>(ring.order());
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(ring.element_at(static_cast<std::int64_t>(index % q)));
    index /= q;
  }
  return v;
}

std::uint64_t index_of(const Vec& v, std::int64_t order) {
  std::uint64_t idx = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    idx = idx * static_cast<std::uint64_t>(order) + static_cast<std::uint64_t>(it->index());
  return idx;
}

Vec act(const MatrixR& m, const Vec& v) {
  Vec out(m.rows(), m.ring().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Exact log_p of a power of p; throws std::logic_error otherwise.
std::size_t log_p(std::uint64_t n, std::int64_t p) {
  std::size_t e = 0;
  while (n > 1) {
    if (n % static_cast<std::uint64_t>(p) != 0)
      throw std::logic_error("cardinality is not a power of p");
    n /= static_cast<std::uint64_t>(p);
    ++e;
  }
  return e;
}

}  // namespace

std::vector<ModuleDescriptor> brute_homology(const ChainComplex& x, std::size_t max_elements) {
  require_valid(x);
  const auto& ring = x.ring();
  const double needed = 2.0 * static_cast<double>(x.total_rank()) * std::log2(ring.p());
  if (needed > std::log2(static_cast<double>(max_elements)) + 1e-9)
    throw GuardRefusal("brute_homology: complex has p^" + std::to_string(2 * x.total_rank()) +
                           " elements, guard allows " + std::to_string(max_elements),
                       needed);

  const auto q = static_cast<std::uint64_t>(ring.order());
  std::vector<ModuleDescriptor> out;
  for (int n = 0; n < x.length(); ++n) {
    const std::size_t rn = x.rank(n);
    const std::uint64_t count = power(q, rn);
    const MatrixR dn = x.d(n);
    const MatrixR dn1 = x.d(n + 1);

    std::unordered_set<std::uint64_t> boundaries;
    const std::uint64_t above = power(q, x.rank(n + 1));
    for (std::uint64_t w = 0; w < above; ++w)
      boundaries.insert(index_of(act(dn1, vector_at(ring, x.rank(n + 1), w)), ring.order()));

    std::uint64_t cycles = 0;
    std::uint64_t annihilated = 0;  // cycles z with r z a boundary
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Vec v = vector_at(ring, rn, idx);
      const Vec dv = act(dn, v);
      bool is_cycle = true;
      for (const auto& e : dv) is_cycle = is_cycle && e.is_zero();
      if (!is_cycle) continue;
      ++cycles;
      Vec rv = v;
      for (auto& e : rv) e = ring.r() * e;
      if (boundaries.contains(index_of(rv, ring.order()))) ++annihilated;
    }
    const auto im = static_cast<std::uint64_t>(boundaries.size());
    const std::size_t h = log_p(cycles / im, ring.p());
    const std::size_t a = log_p(annihilated / im, ring.p());
    // |H| = p^(2a+b) and |ann_r H| = p^(a+b).
    if (a > h || 2 * a < h)
      throw std::logic_error("homology cardinalities p^" + std::to_string(h) + ", p^" +
                             std::to_string(a) + " fit no module R^a + k^b");
    out.push_back({h - a, 2 * a - h});
  }
  return out;
}

}  // namespace cellx
