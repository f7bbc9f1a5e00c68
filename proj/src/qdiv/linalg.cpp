#include "drinfeld/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

QVector EchelonBasis::reduce(QVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const mpq_class f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = pivots_[i]; j < dim_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool EchelonBasis::contains(const QVector& v) const {
  const QVector r = reduce(v);
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool EchelonBasis::insert(const QVector& v) {
  QVector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && r[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const mpq_class lead = r[pivot];
  for (std::size_t j = pivot; j < dim_; ++j) r[j] /= lead;
  // Keep earlier rows reduced against the new pivot so reduce() stays single-pass.
  for (auto& row : rows_) {
    const mpq_class f = row[pivot];
    if (f == 0) continue;
    for (std::size_t j = pivot; j < dim_; ++j) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

std::vector<QVector> EchelonBasis::rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pivots_[x] < pivots_[y]; });
  std::vector<QVector> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

QMatrix left_kernel(const QMatrix& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  // Row-reduce [rows | I]; rows whose left block vanishes carry kernel vectors.
  QMatrix aug(m, QVector(ncols + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("left_kernel: ragged matrix");
    for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = rows[i][j];
    aug[i][ncols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols + m && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[r], aug[piv]);
    const mpq_class lead = aug[r][col];
    for (auto& x : aug[r]) x /= lead;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][col] == 0) continue;
      const mpq_class f = aug[i][col];
      for (std::size_t j = col; j < ncols + m; ++j) aug[i][j] -= f * aug[r][j];
    }
    ++r;
  }
  EchelonBasis kernel(m);
  for (const auto& row : aug) {
    bool zero_left = true;
    for (std::size_t j = 0; j < ncols && zero_left; ++j) zero_left = row[j] == 0;
    if (!zero_left) continue;
    kernel.insert(QVector(row.begin() + static_cast<std::ptrdiff_t>(ncols), row.end()));
  }
  return kernel.rows();
}

std::size_t rank(const QMatrix& rows, std::size_t ncols) {
  EchelonBasis basis(ncols);
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

}  // namespace drinfeld
