#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace drinfeld {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;  // row-major

// Incrementally built row-echelon basis of a subspace of Q^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Adds v to the spanning set; returns false if it was already in the span.
  bool insert(const QVector& v);
  bool contains(const QVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // Reduced row-echelon rows, ordered by pivot.
  std::vector<QVector> rows() const;

 private:
  QVector reduce(QVector v) const;

  std::size_t dim_;
  std::vector<QVector> rows_;        // rows_[i] has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

// Reduced row-echelon basis of {c : sum_i c_i rows[i] = 0}.
QMatrix left_kernel(const QMatrix& rows, std::size_t ncols);

std::size_t rank(const QMatrix& rows, std::size_t ncols);

}  // namespace drinfeld
