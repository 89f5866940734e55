#pragma once

#include "srg/rational.hpp"

#include <iosfwd>
#include <vector>

namespace srg {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;
};

/// Exact sparse matrix in triplet form; entries are kept unique and nonzero by `add`.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int row, int col, const Rational& v);
  /// Sorted (col, row) entries without zeros.
  std::vector<MatrixEntry> entries() const;
  std::size_t nonzeros() const;

  SparseMatrix multiply(const SparseMatrix& rhs) const;
  bool is_zero() const { return nonzeros() == 0; }
  SparseMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

  /// "row col value" lines, 0-based, after a "rows cols nnz" header.
  void write_triplets(std::ostream& os) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<MatrixEntry> raw_;
};

/// Rank by fraction-free elimination over the integers with sparsity pivoting.
int rank_sparse(const SparseMatrix& m);
/// Rank by dense Gaussian elimination over Q (reference).
int rank_dense(const SparseMatrix& m);

}  // namespace srg
