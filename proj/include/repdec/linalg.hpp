#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repdec/cyclotomic.hpp"

namespace repdec {

// Dense matrix over Cyclotomic, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Cyclotomic>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Cyclotomic& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Cyclotomic>& entries() const { return e_; }
  std::vector<Cyclotomic>& entries() { return e_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix scaled(const Cyclotomic& z) const;
  Matrix scaled(const Rational& r) const;

  Matrix transpose() const;
  Matrix conj_transpose() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix block(int r0, int c0, int h, int w) const;
  void set_block(int r0, int c0, const Matrix& m);
  Matrix column(int c) const;

  // Entry-wise conductor reduction; applied at module boundaries.
  Matrix reduced() const;
  std::size_t hash() const;
  std::string str() const;

private:
  int rows_, cols_;
  std::vector<Cyclotomic> e_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

// Column space of a set of linearly independent columns of the ambient space.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  Subspace(int ambient_dim, Matrix basis);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

private:
  int ambient_;
  Matrix basis_;  // ambient x dim, columns are basis vectors
};

struct RowReduceResult {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;
  Subspace kernel;        // of the original matrix (as a map)
  Subspace column_space;  // spanned by the pivot columns of the input
};

// Reduced row echelon form via Gaussian elimination over the field, with
// deterministic first-nonzero pivoting.
RowReduceResult row_reduce(const Matrix& m);

Matrix invert(const Matrix& m);  // throws SingularMatrixError / ShapeError

// Solves A X = B exactly; nullopt when inconsistent. A need not be square.
// When the solution is not unique the pivot-based particular solution is
// returned (free variables zero).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// A = L D L* with unit lower-triangular L and diagonal D, for Hermitian A.
// Throws ZeroPivotError with the failing index when a pivot vanishes.
std::pair<Matrix, Matrix> ldl_hermitian(const Matrix& a);

// Trace(A B*).
Cyclotomic trace_inner_product(const Matrix& a, const Matrix& b);

}  // namespace repdec
