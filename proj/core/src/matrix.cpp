#include "dsg/matrix.hpp"

#include <utility>

#include "dsg/errors.hpp"

namespace dsg {

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

PolyMatrix PolyMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Polynomial>>& cols) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

PolyMatrix multiply(const PolyRing& R, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimensions do not agree");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc = R.add(acc, R.mul(a(i, k), b(k, j)));
      out(i, j) = std::move(acc);
    }
  return out;
}

bool is_zero(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

PolyMatrix jacobian_matrix(const PolyRing& R, std::span<const Polynomial> relations) {
  PolyMatrix m(relations.size(), R.nvars());
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t j = 0; j < R.nvars(); ++j) m(i, j) = R.derivative(relations[i], j);
  return m;
}

Polynomial determinant_bareiss(const PolyRing& R, const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return R.one();
  PolyMatrix a = input;
  Polynomial prev = R.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return R.zero();
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = R.sub(R.mul(a(i, j), a(k, k)), R.mul(a(i, k), a(k, j)));
        a(i, j) = R.divide_exact(num, prev);
      }
      a(i, k) = R.zero();
    }
    prev = a(k, k);
  }
  auto det = a(n - 1, n - 1);
  return negate ? R.neg(det) : det;
}

Polynomial determinant_cofactor(const PolyRing& R, const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R.one();
  if (n == 1) return m(0, 0);
  if (n == 2) return R.sub(R.mul(m(0, 0), m(1, 1)), R.mul(m(0, 1), m(1, 0)));
  Polynomial acc;
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    auto sub = R.mul(m(0, c), determinant_cofactor(R, m.submatrix(rows, cols)));
    acc = c % 2 == 0 ? R.add(acc, sub) : R.sub(acc, sub);
  }
  return acc;
}

Polynomial determinant(const PolyRing& R, const PolyMatrix& m) {
  // Expansion wins on the sparse small minors that Jacobians produce.
  return m.rows() <= 3 ? determinant_cofactor(R, m) : determinant_bareiss(R, m);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const PolyRing& R, const PolyMatrix& m, std::size_t h) {
  if (h == 0 || h > m.rows() || h > m.cols())
    throw DomainError("minor size " + std::to_string(h) + " out of range for a " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  std::vector<Polynomial> out;
  auto row_sets = subsets(m.rows(), h);
  auto col_sets = subsets(m.cols(), h);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(determinant(R, m.submatrix(rs, cs)));
  return out;
}

}  // namespace dsg
