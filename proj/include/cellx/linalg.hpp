#pragma once

// Dense matrices over R and over the residue field k.
//
// Eliminations over R only ever pivot on units. Ranks are only computed over
// k, where Gaussian elimination is valid.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cellx/ring.hpp"

namespace cellx {

class MatrixK;

class MatrixR {
 public:
  // Zero matrix. Zero rows or zero columns are allowed.
  MatrixR(const RingSpec& ring, std::size_t rows, std::size_t cols);

  static MatrixR identity(const RingSpec& ring, std::size_t n);
  // Row-major list of entries; throws UsageError on a length or ring mismatch.
  static MatrixR from_entries(const RingSpec& ring, std::size_t rows, std::size_t cols,
                              std::vector<RingElement> entries);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const RingElement& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const RingElement& x);

  bool is_zero() const;
  // True when every entry lies in m.
  bool is_minimal() const;

  // Residue of every entry, a matrix over k.
  MatrixK residue() const;
  // For a matrix with every entry in m, the matrix B over k with A = r*B.
  // Throws UsageError if some entry is a unit.
  MatrixK r_coefficients() const;

  MatrixR block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const MatrixR& src);
  MatrixR scaled(const RingElement& c) const;
  MatrixR transposed() const;

  // Elementary operations, in place.
  void add_row_multiple(std::size_t dst, std::size_t src, const RingElement& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const RingElement& c);
  void scale_row(std::size_t i, const RingElement& c);
  void scale_col(std::size_t j, const RingElement& c);
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend bool operator==(const MatrixR&, const MatrixR&) = default;

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> data_;
};

class MatrixK {
 public:
  MatrixK(std::int64_t p, std::size_t rows, std::size_t cols);
  static MatrixK identity(std::int64_t p, std::size_t n);

  std::int64_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Stores v reduced into [0, p).
  void set(std::size_t r, std::size_t c, std::int64_t v);

  bool is_zero() const;

  friend bool operator==(const MatrixK&, const MatrixK&) = default;

 private:
  std::int64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

// Shape mismatch or ring mismatch throws UsageError.
MatrixR matmul(const MatrixR& a, const MatrixR& b);
MatrixK matmul_k(const MatrixK& a, const MatrixK& b);
MatrixR add(const MatrixR& a, const MatrixR& b);

std::size_t rank_k(MatrixK a);

// First unit entry in row-major order, or nullopt when every entry is in m.
std::optional<std::pair<std::size_t, std::size_t>> find_unit_pivot(const MatrixR& a);

// P * A * Q.
MatrixR apply_basis_change(const MatrixR& a, const MatrixR& p, const MatrixR& q);

// A square matrix over a local ring is invertible iff its residue is.
bool is_invertible(const MatrixR& p);

// Throws DomainError when p is singular.
MatrixR inverse(const MatrixR& p);

MatrixR block_diagonal(const MatrixR& a, const MatrixR& b);
MatrixR kronecker(const MatrixR& a, const MatrixR& b);

// An invertible matrix kept together with its inverse under elementary row
// operations: each call replaces `forward` by E * forward and `inverse` by
// inverse * E^-1.
struct BasisChange {
  MatrixR forward;
  MatrixR inverse;

  static BasisChange identity(const RingSpec& ring, std::size_t n);

  // E adds c times row src to row dst.
  void row_add(std::size_t dst, std::size_t src, const RingElement& c);
  // E scales row i by the unit u.
  void row_scale(std::size_t i, const RingElement& u);
  void row_swap(std::size_t i, std::size_t j);
};

// P * A * Q = diag(1, ..., 1, r, ..., r, 0, ...) with `units` ones followed by
// `r_pivots` copies of r. Every matrix over R has this form since R is a
// principal ideal ring with m^2 = 0.
struct LocalSmithForm {
  BasisChange rows;     // forward = P
  BasisChange columns;  // forward = Q^-1, inverse = Q
  std::size_t units = 0;
  std::size_t r_pivots = 0;
};

LocalSmithForm local_smith_form(const MatrixR& a);

}  // namespace cellx
