#include "stt/matrix.hpp"

#include <sstream>

namespace stt {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw internal_error("ragged rows in from_rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t nrows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(f, nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) throw internal_error("bad column length in from_columns");
    for (std::size_t i = 0; i < nrows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw internal_error("matrix index out of range");
  return e_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw internal_error("matrix index out of range");
  e_[i * cols_ + j] = v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("shape mismatch in +");
  Matrix m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw internal_error("shape mismatch in *");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = e_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.e_[k * o.cols_ + j];
        if (!b.is_zero()) m.e_[i * o.cols_ + j] += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.e_) x *= c;
  return m;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("shape mismatch in add_scaled");
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) e_[k] += o.e_[k] * c;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw internal_error("shape mismatch in apply");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw internal_error("row mismatch in hstack");
  Matrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) m.set(i, cols_ + j, o.at(i, j));
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw internal_error("column mismatch in vstack");
  Matrix m(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
  return m;
}

Matrix Matrix::dsum(const Matrix& o) const {
  Matrix m(field_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) m.set(rows_ + i, cols_ + j, o.at(i, j));
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Rref rref(const Matrix& m) {
  Matrix R = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t sel = R.rows();
    for (std::size_t i = r; i < R.rows(); ++i)
      if (!R.at(i, c).is_zero()) { sel = i; break; }
    if (sel == R.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < R.cols(); ++j) {
        Scalar t = R.at(r, j);
        R.set(r, j, R.at(sel, j));
        R.set(sel, j, t);
      }
    Scalar inv = R.at(r, c).inverse();
    for (std::size_t j = c; j < R.cols(); ++j)
      if (!R.at(r, j).is_zero()) R.set(r, j, R.at(r, j) * inv);
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r) continue;
      Scalar f = R.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < R.cols(); ++j) {
        const Scalar& prj = R.at(r, j);
        if (!prj.is_zero()) R.set(i, j, R.at(i, j) - f * prj);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(R), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& m) {
  Rref e = rref(m);
  const auto& piv = e.pivot_cols;
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[fc] = Scalar::one(m.field());
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e.R.at(i, fc);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), cols);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw internal_error("dimension mismatch in solve");
  auto X = solve_matrix(m, Matrix::from_columns(m.field(), m.rows(), {b}));
  if (!X) return std::nullopt;
  return X->column(0);
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& B) {
  if (B.rows() != m.rows()) throw internal_error("dimension mismatch in solve_matrix");
  Rref e = rref(m.hstack(B));
  // any pivot inside the B block means some column is inconsistent
  for (auto c : e.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix X(m.field(), m.cols(), B.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      X.set(e.pivot_cols[i], j, e.R.at(i, m.cols() + j));
  return X;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw internal_error("invert requires a square matrix");
  Rref e = rref(m.hstack(Matrix::identity(m.field(), m.rows())));
  if (e.pivot_cols.size() != m.rows()) return std::nullopt;
  for (auto c : e.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix inv(m.field(), m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv.set(i, j, e.R.at(i, m.cols() + j));
  return inv;
}

Matrix column_space_basis(const Matrix& m) {
  Rref e = rref(m.transpose());
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) cols.push_back(e.R.row(i));
  return Matrix::from_columns(m.field(), m.rows(), cols);
}

bool in_column_space(const Matrix& basis, const std::vector<Scalar>& v) {
  return solve(basis, v).has_value();
}

QuotientSpace quotient_space(const Matrix& sub, std::size_t ambient_dim,
                             const FieldSpec& f) {
  if (sub.cols() != 0 && sub.rows() != ambient_dim)
    throw internal_error("subspace ambient dimension mismatch");
  Matrix C = sub.cols() ? column_space_basis(sub) : Matrix(f, ambient_dim, 0);
  // pivot row of each basis column (reduced column echelon: leading 1 rows)
  std::vector<std::size_t> pivot_rows;
  std::vector<bool> is_piv(ambient_dim, false);
  for (std::size_t j = 0; j < C.cols(); ++j) {
    std::size_t pr = ambient_dim;
    for (std::size_t i = 0; i < ambient_dim; ++i)
      if (!C.at(i, j).is_zero()) { pr = i; break; }
    if (pr == ambient_dim) throw internal_error("zero column in subspace basis");
    pivot_rows.push_back(pr);
    is_piv[pr] = true;
  }
  std::size_t q = ambient_dim - C.cols();
  QuotientSpace out{Matrix(f, q, ambient_dim), Matrix(f, ambient_dim, q)};
  std::size_t qi = 0;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (is_piv[i]) continue;
    // proj row: e_i minus the correction that kills the subspace
    out.proj.set(qi, i, Scalar::one(f));
    for (std::size_t j = 0; j < C.cols(); ++j)
      out.proj.set(qi, pivot_rows[j], -C.at(i, j));
    out.section.set(i, qi, Scalar::one(f));
    ++qi;
  }
  return out;
}

}  // namespace stt
