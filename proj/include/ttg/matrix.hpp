#ifndef TTG_MATRIX_HPP
#define TTG_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttg/field.hpp"

namespace ttg {

// Dense matrix over an exact field, column-vector convention: a matrix of a
// linear map V -> W has shape (dim W) x (dim V) and composition is the usual
// product. Rank/kernel/solve are exact Gaussian elimination; nothing here is
// approximate.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, f.zero()) {}

  static Matrix identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  static Matrix from_int_rows(Field f,
                              const std::vector<std::vector<std::int64_t>>& r) {
    int nr = static_cast<int>(r.size());
    int nc = nr == 0 ? 0 : static_cast<int>(r[0].size());
    Matrix m(f, nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(i, j) = f.from_int(r[i][j]);
    return m;
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!field_.is_zero(s)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
      return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }
  Matrix scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = field_.mul(data_[i], c);
    return r;
  }
  Matrix negated() const { return scaled(field_.from_int(-1)); }

  Matrix transposed() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Kronecker product with the row-major pairing (i,k) -> i*o.rows+k.
  // Matches the basis ordering e_i (x) f_k of a tensor product of spaces.
  Matrix kron(const Matrix& o) const {
    Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Scalar& a = at(i, j);
        if (field_.is_zero(a)) continue;
        for (int k = 0; k < o.rows_; ++k)
          for (int l = 0; l < o.cols_; ++l)
            r.at(i * o.rows_ + k, j * o.cols_ + l) = field_.mul(a, o.at(k, l));
      }
    return r;
  }

  Matrix hstack(const Matrix& o) const {
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }
  Matrix vstack(const Matrix& o) const {
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix column(int j) const {
    Matrix r(field_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
  }
  Matrix columns(const std::vector<int>& js) const {
    Matrix r(field_, rows_, static_cast<int>(js.size()));
    for (int i = 0; i < rows_; ++i)
      for (size_t j = 0; j < js.size(); ++j) r.at(i, (int)j) = at(i, js[j]);
    return r;
  }
  void set_block(int i0, int j0, const Matrix& b) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }
  Matrix block(int i0, int j0, int nr, int nc) const {
    Matrix r(field_, nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
  }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!field_.is_zero(at(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
      Scalar d = field_.inv(at(row, col));
      for (int j = 0; j < cols_; ++j) at(row, j) = field_.mul(at(row, j), d);
      for (int i = 0; i < rows_; ++i) {
        if (i == row || field_.is_zero(at(i, col))) continue;
        Scalar c = at(i, col);
        for (int j = 0; j < cols_; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(c, at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the right kernel {v : Av = 0}, one basis vector per column.
  Matrix kernel() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
      int j = free_cols[fc];
      k.at(j, (int)fc) = field_.one();
      for (size_t r = 0; r < pivots.size(); ++r)
        k.at(pivots[r], (int)fc) = field_.neg(m.at((int)r, j));
    }
    return k;
  }

  // Basis of the column space: the pivot columns of the original matrix.
  Matrix column_space() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    return columns(pivots);
  }

  // Solve AX = B exactly. Returns nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    Matrix aug = hstack(b);
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
      if (p >= cols_) return std::nullopt;  // pivot in the RHS block
    Matrix x(field_, cols_, b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
      for (int j = 0; j < b.cols(); ++j)
        x.at(pivots[r], j) = aug.at((int)r, cols_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (!((*this) * *x == identity(field_, rows_))) return std::nullopt;
    return x;
  }

  bool is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += field_.to_string(at(i, j));
      }
      s += "\n";
    }
    return s;
  }

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Does v lie in the column span of basis?
inline bool in_column_span(const Matrix& basis, const Matrix& v) {
  return basis.solve(v).has_value();
}

// Extend the columns of `base` by columns of `extra` to a basis of their
// joint span; returns the indices of the adopted `extra` columns.
inline std::vector<int> extend_column_basis(Matrix& base, const Matrix& extra) {
  std::vector<int> taken;
  for (int j = 0; j < extra.cols(); ++j) {
    Matrix v = extra.column(j);
    if (base.cols() == 0) {
      if (v.is_zero()) continue;
      base = v;
      taken.push_back(j);
    } else if (!in_column_span(base, v)) {
      base = base.hstack(v);
      taken.push_back(j);
    }
  }
  return taken;
}

}  // namespace ttg

#endif
