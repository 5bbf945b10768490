#include "repdec/linalg.hpp"

#include <sstream>

#include "repdec/errors.hpp"

namespace repdec {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
  return m;
}

Matrix Matrix::diagonal(const std::vector<Cyclotomic>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Matrix: shape mismatch in +");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Matrix: shape mismatch in +=");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Matrix: shape mismatch in -");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("Matrix: shape mismatch in *");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyclotomic& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Cyclotomic& z) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i].is_zero()) out.e_[i] = e_[i] * z;
  }
  return out;
}

Matrix Matrix::scaled(const Rational& r) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].scaled(r);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::conj_transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

Cyclotomic Matrix::trace() const {
  if (!is_square()) throw ShapeError("Matrix: trace of non-square matrix");
  Cyclotomic t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& z : e_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return false;
  }
  return true;
}

Matrix Matrix::block(int r0, int c0, int h, int w) const {
  Matrix out(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

Matrix Matrix::column(int c) const {
  Matrix out(rows_, 1);
  for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
  return out;
}

Matrix Matrix::reduced() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].reduced();
  return out;
}

std::size_t Matrix::hash() const {
  const std::size_t kPrime = 1099511628211ull;
  std::size_t h = 14695981039346656037ull;
  h = (h ^ static_cast<std::size_t>(rows_)) * kPrime;
  h = (h ^ static_cast<std::size_t>(cols_)) * kPrime;
  for (const auto& z : e_) h = (h ^ z.hash()) * kPrime;
  return h;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int x = 0; x < a.rows(); ++x) {
    for (int y = 0; y < a.cols(); ++y) {
      const Cyclotomic& axy = a.at(x, y);
      if (axy.is_zero()) continue;
      for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
          if (b.at(i, j).is_zero()) continue;
          out.at(x * b.rows() + i, y * b.cols() + j) = axy * b.at(i, j);
        }
      }
    }
  }
  return out;
}

Subspace::Subspace(int ambient_dim, Matrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_) throw ShapeError("Subspace: basis rows != ambient dimension");
}

namespace {

// In-place Gaussian elimination to reduced row echelon form. Deterministic:
// for each column, the first row with a nonzero entry becomes the pivot.
void rref_in_place(Matrix& m, std::vector<int>& pivot_cols) {
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
    }
    Cyclotomic inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) {
      if (!m.at(row, c).is_zero()) m.at(row, c) = m.at(row, c) * inv;
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
}

}  // namespace

RowReduceResult row_reduce(const Matrix& input) {
  RowReduceResult res;
  res.rref = input;
  rref_in_place(res.rref, res.pivot_cols);
  res.rank = static_cast<int>(res.pivot_cols.size());

  // Kernel: one basis vector per free column.
  std::vector<bool> is_pivot(input.cols(), false);
  for (int c : res.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < input.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix ker(input.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(fc, static_cast<int>(k)) = Cyclotomic::one();
    for (int r = 0; r < res.rank; ++r) {
      ker.at(res.pivot_cols[r], static_cast<int>(k)) = -res.rref.at(r, fc);
    }
  }
  res.kernel = Subspace(input.cols(), std::move(ker));

  Matrix cs(input.rows(), res.rank);
  for (int k = 0; k < res.rank; ++k) {
    for (int r = 0; r < input.rows(); ++r) cs.at(r, k) = input.at(r, res.pivot_cols[k]);
  }
  res.column_space = Subspace(input.rows(), std::move(cs));
  return res;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("invert: matrix is not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  std::vector<int> pivots;
  rref_in_place(aug, pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) {
    throw SingularMatrixError("invert: matrix is singular");
  }
  return aug.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
  int n = a.cols(), k = b.cols();
  Matrix aug(a.rows(), n + k);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  std::vector<int> pivots;
  rref_in_place(aug, pivots);
  // Inconsistent iff a pivot lands in the right block.
  for (int p : pivots) {
    if (p >= n) return std::nullopt;
  }
  Matrix x(n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int j = 0; j < k; ++j) x.at(pivots[r], j) = aug.at(static_cast<int>(r), n + j);
  }
  return x;
}

std::pair<Matrix, Matrix> ldl_hermitian(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("ldl_hermitian: matrix is not square");
  int n = a.rows();
  Matrix l = Matrix::identity(n);
  std::vector<Cyclotomic> d(n);
  for (int j = 0; j < n; ++j) {
    Cyclotomic dj = a.at(j, j);
    for (int k = 0; k < j; ++k) {
      if (l.at(j, k).is_zero()) continue;
      dj -= l.at(j, k) * l.at(j, k).conj() * d[k];
    }
    if (dj.is_zero()) {
      throw ZeroPivotError(j, "ldl_hermitian: zero pivot at index " + std::to_string(j) +
                                  " (matrix is not positive definite)");
    }
    d[j] = dj;
    Cyclotomic dj_inv = dj.inverse();
    for (int i = j + 1; i < n; ++i) {
      Cyclotomic lij = a.at(i, j);
      for (int k = 0; k < j; ++k) {
        if (l.at(i, k).is_zero() || l.at(j, k).is_zero()) continue;
        lij -= l.at(i, k) * l.at(j, k).conj() * d[k];
      }
      if (!lij.is_zero()) l.at(i, j) = lij * dj_inv;
    }
  }
  return {std::move(l), Matrix::diagonal(d)};
}

Cyclotomic trace_inner_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("trace_inner_product: shape mismatch");
  }
  // Trace(A B*) = sum_{ij} A_ij conj(B_ij).
  Cyclotomic t;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || b.at(i, j).is_zero()) continue;
      t += a.at(i, j) * b.at(i, j).conj();
    }
  }
  return t;
}

}  // namespace repdec
