#include "cellx/linalg.hpp"

#include <algorithm>
#include <string>

#include "cellx/errors.hpp"

namespace cellx {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

MatrixR::MatrixR(const RingSpec& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

MatrixR MatrixR::identity(const RingSpec& ring, std::size_t n) {
  MatrixR m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = ring.one();
  return m;
}

MatrixR MatrixR::from_entries(const RingSpec& ring, std::size_t rows, std::size_t cols,
                              std::vector<RingElement> entries) {
  if (entries.size() != rows * cols)
    throw UsageError("expected " + std::to_string(rows * cols) + " entries for a " +
                     shape(rows, cols) + " matrix, got " + std::to_string(entries.size()));
  for (const auto& e : entries)
    if (!(e.spec() == ring)) throw UsageError("matrix entry from a different ring");
  MatrixR m(ring, rows, cols);
  m.data_ = std::move(entries);
  return m;
}

void MatrixR::set(std::size_t r, std::size_t c, const RingElement& x) {
  if (!(x.spec() == ring_)) throw UsageError("matrix entry from a different ring");
  data_[r * cols_ + c] = x;
}

bool MatrixR::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const RingElement& x) { return x.is_zero(); });
}

bool MatrixR::is_minimal() const {
  return std::none_of(data_.begin(), data_.end(),
                      [](const RingElement& x) { return x.is_unit(); });
}

MatrixK MatrixR::residue() const {
  MatrixK k(ring_.p(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) k.set(i, j, (*this)(i, j).a());
  return k;
}

MatrixK MatrixR::r_coefficients() const {
  MatrixK k(ring_.p(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (x.is_unit())
        throw UsageError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is a unit; matrix is not divisible by r");
      k.set(i, j, x.b());
    }
  return k;
}

MatrixR MatrixR::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
  MatrixR m(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
  return m;
}

void MatrixR::set_block(std::size_t r0, std::size_t c0, const MatrixR& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw UsageError("block out of range");
  if (!(src.ring_ == ring_)) throw UsageError("ring mismatch in set_block");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = src(i, j);
}

MatrixR MatrixR::scaled(const RingElement& c) const {
  MatrixR m = *this;
  for (auto& x : m.data_) x = c * x;
  return m;
}

MatrixR MatrixR::transposed() const {
  MatrixR m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = (*this)(i, j);
  return m;
}

void MatrixR::add_row_multiple(std::size_t dst, std::size_t src, const RingElement& c) {
  if (c.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j)
    data_[dst * cols_ + j] += c * data_[src * cols_ + j];
}

void MatrixR::add_col_multiple(std::size_t dst, std::size_t src, const RingElement& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i)
    data_[i * cols_ + dst] += data_[i * cols_ + src] * c;
}

void MatrixR::scale_row(std::size_t i, const RingElement& c) {
  for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = c * data_[i * cols_ + j];
}

void MatrixR::scale_col(std::size_t j, const RingElement& c) {
  for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + j] = data_[i * cols_ + j] * c;
}

void MatrixR::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

void MatrixR::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
}

MatrixK::MatrixK(std::int64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixK MatrixK::identity(std::int64_t p, std::size_t n) {
  MatrixK m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void MatrixK::set(std::size_t r, std::size_t c, std::int64_t v) {
  data_[r * cols_ + c] = ((v % p_) + p_) % p_;
}

bool MatrixK::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

MatrixR matmul(const MatrixR& a, const MatrixR& b) {
  if (!(a.ring() == b.ring())) throw UsageError("matmul: ring mismatch");
  if (a.cols() != b.rows())
    throw UsageError("matmul: cannot multiply " + shape(a.rows(), a.cols()) + " by " +
                     shape(b.rows(), b.cols()));
  MatrixR c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, c(i, j) + x * b(k, j));
    }
  return c;
}

MatrixK matmul_k(const MatrixK& a, const MatrixK& b) {
  if (a.p() != b.p()) throw UsageError("matmul_k: field mismatch");
  if (a.cols() != b.rows())
    throw UsageError("matmul_k: cannot multiply " + shape(a.rows(), a.cols()) + " by " +
                     shape(b.rows(), b.cols()));
  MatrixK c(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = (s + a(i, k) * b(k, j)) % a.p();
      c.set(i, j, s);
    }
  return c;
}

MatrixR add(const MatrixR& a, const MatrixR& b) {
  if (!(a.ring() == b.ring())) throw UsageError("add: ring mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("add: shape mismatch");
  MatrixR c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

std::size_t rank_k(MatrixK a) {
  const std::int64_t p = a.p();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto t = a(rank, j);
        a.set(rank, j, a(pivot, j));
        a.set(pivot, j, t);
      }
    const std::int64_t inv = inverse_mod_prime(a(rank, col), p);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      const std::int64_t f = a(i, col) * inv % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a.set(i, j, a(i, j) - f * a(rank, j) % p);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::pair<std::size_t, std::size_t>> find_unit_pivot(const MatrixR& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_unit()) return std::pair{i, j};
  return std::nullopt;
}

MatrixR apply_basis_change(const MatrixR& a, const MatrixR& p, const MatrixR& q) {
  return matmul(matmul(p, a), q);
}

bool is_invertible(const MatrixR& p) {
  return p.rows() == p.cols() && rank_k(p.residue()) == p.rows();
}

MatrixR inverse(const MatrixR& p) {
  if (!is_invertible(p)) throw DomainError("matrix is not invertible");
  // Gauss-Jordan with unit pivots; the residue is invertible so every column
  // has a unit among the remaining rows.
  const std::size_t n = p.rows();
  MatrixR a = p;
  BasisChange ops = BasisChange::identity(p.ring(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (!a(piv, col).is_unit()) ++piv;
    a.swap_rows(piv, col);
    ops.row_swap(piv, col);
    const auto u = a(col, col).inverse();
    a.scale_row(col, u);
    ops.row_scale(col, u);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const auto c = -a(i, col);
      a.add_row_multiple(i, col, c);
      ops.row_add(i, col, c);
    }
  }
  return ops.forward;
}

MatrixR block_diagonal(const MatrixR& a, const MatrixR& b) {
  if (!(a.ring() == b.ring())) throw UsageError("block_diagonal: ring mismatch");
  MatrixR m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

MatrixR kronecker(const MatrixR& a, const MatrixR& b) {
  if (!(a.ring() == b.ring())) throw UsageError("kronecker: ring mismatch");
  MatrixR m(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      m.set_block(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
    }
  return m;
}

BasisChange BasisChange::identity(const RingSpec& ring, std::size_t n) {
  return {MatrixR::identity(ring, n), MatrixR::identity(ring, n)};
}

void BasisChange::row_add(std::size_t dst, std::size_t src, const RingElement& c) {
  forward.add_row_multiple(dst, src, c);
  inverse.add_col_multiple(src, dst, -c);
}

void BasisChange::row_scale(std::size_t i, const RingElement& u) {
  forward.scale_row(i, u);
  inverse.scale_col(i, u.inverse());
}

void BasisChange::row_swap(std::size_t i, std::size_t j) {
  forward.swap_rows(i, j);
  inverse.swap_cols(i, j);
}

LocalSmithForm local_smith_form(const MatrixR& a) {
  const auto& ring = a.ring();
  LocalSmithForm out{BasisChange::identity(ring, a.rows()), BasisChange::identity(ring, a.cols())};
  MatrixR w = a;

  // Column operations on w are recorded as row operations on Q^-1.
  auto col_add = [&](std::size_t dst, std::size_t src, const RingElement& c) {
    w.add_col_multiple(dst, src, c);
    out.columns.row_add(src, dst, -c);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    w.swap_cols(i, j);
    out.columns.row_swap(i, j);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const RingElement& c) {
    w.add_row_multiple(dst, src, c);
    out.rows.row_add(dst, src, c);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    w.swap_rows(i, j);
    out.rows.row_swap(i, j);
  };
  auto clear_around = [&](std::size_t k, const RingElement& pivot_inv) {
    w.scale_row(k, pivot_inv);
    out.rows.row_scale(k, pivot_inv);
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (i != k && !w(i, k).is_zero()) row_add(i, k, -w(i, k));
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (j != k && !w(k, j).is_zero()) col_add(j, k, -w(k, j));
  };

  std::size_t k = 0;
  const std::size_t limit = std::min(w.rows(), w.cols());
  // Unit pivots first.
  for (; k < limit; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = k; i < w.rows() && !piv; ++i)
      for (std::size_t j = k; j < w.cols(); ++j)
        if (w(i, j).is_unit()) {
          piv = std::pair{i, j};
          break;
        }
    if (!piv) break;
    row_swap(k, piv->first);
    col_swap(k, piv->second);
    clear_around(k, w(k, k).inverse());
    ++out.units;
  }
  // The rest lies in m: eliminate on the r-coordinate, pivots become r.
  for (; k < limit; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = k; i < w.rows() && !piv; ++i)
      for (std::size_t j = k; j < w.cols(); ++j)
        if (!w(i, j).is_zero()) {
          piv = std::pair{i, j};
          break;
        }
    if (!piv) break;
    row_swap(k, piv->first);
    col_swap(k, piv->second);
    // w(k,k) = b r; multiplying by the unit lift(b^-1) turns it into r, and
    // x * (b r) only depends on the residue of x.
    const auto binv = ring.element(inverse_mod_prime(w(k, k).b(), ring.p()), 0);
    w.scale_row(k, binv);
    out.rows.row_scale(k, binv);
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (i != k && !w(i, k).is_zero()) row_add(i, k, -ring.element(w(i, k).b(), 0));
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (j != k && !w(k, j).is_zero()) col_add(j, k, -ring.element(w(k, j).b(), 0));
    ++out.r_pivots;
  }
  return out;
}

}  // namespace cellx
