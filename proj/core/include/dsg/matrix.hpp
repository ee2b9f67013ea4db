#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsg/polynomial.hpp"

namespace dsg {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  // Builds a matrix from columns of equal length (`rows` fixes the height
  // when there are no columns).
  static PolyMatrix from_columns(std::size_t rows, const std::vector<std::vector<Polynomial>>& cols);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

PolyMatrix multiply(const PolyRing& R, const PolyMatrix& a, const PolyMatrix& b);
bool is_zero(const PolyMatrix& m);

/// Entry (i, j) is d f_i / d X_j.
PolyMatrix jacobian_matrix(const PolyRing& R, std::span<const Polynomial> relations);

// Square determinants. Bareiss elimination divides exactly at every step;
// cofactor expansion is kept for cross-checking and for tiny sizes.
Polynomial determinant_bareiss(const PolyRing& R, const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyRing& R, const PolyMatrix& m);
Polynomial determinant(const PolyRing& R, const PolyMatrix& m);

/// All h x h minors, rows-major over (row subset, column subset) in
/// lexicographic subset order. Zeros and duplicates are kept.
/// Throws DomainError unless 1 <= h <= min(rows, cols).
std::vector<Polynomial> minors(const PolyRing& R, const PolyMatrix& m, std::size_t h);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace dsg
