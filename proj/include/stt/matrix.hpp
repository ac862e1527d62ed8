#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stt/field.hpp"

namespace stt {

/// Dense matrix over one FieldSpec, row-major, every entry canonical.
/// All operations are pure; 0xN and Nx0 shapes are first-class.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f,
                          const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(const FieldSpec& f, std::size_t nrows,
                             const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// this += o * c, skipping zero entries (hot path for action assembly).
  void add_scaled(const Matrix& o, const Scalar& c);

  Matrix transpose() const;
  bool is_zero() const;

  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;

  /// Matrix-vector product.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// [this | o] side by side; row counts must agree.
  Matrix hstack(const Matrix& o) const;
  /// [this ; o] stacked; column counts must agree.
  Matrix vstack(const Matrix& o) const;
  /// Block diagonal [this 0; 0 o].
  Matrix dsum(const Matrix& o) const;

  std::string str() const;

 private:
  FieldSpec field_ = FieldSpec::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Reduced row echelon data: R is the RREF of the input, pivot_cols the
/// pivot column of each nonzero row (so rank = pivot_cols.size()).
struct Rref {
  Matrix R;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of { x : m x = 0 }; column count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Throws on shape mismatch.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Some X with m X = B (column-wise), or nullopt when any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& B);

/// Inverse of a square matrix, or nullopt when singular. Throws on non-square.
std::optional<Matrix> invert(const Matrix& m);

/// Canonical basis of the column space: reduced column echelon form.
/// Two matrices have equal column spaces iff these outputs are equal.
Matrix column_space_basis(const Matrix& m);

bool in_column_space(const Matrix& basis, const std::vector<Scalar>& v);

/// Coordinates of k^n modulo a subspace. `proj` maps a vector to quotient
/// coordinates, `section` picks representatives; proj*section = I and
/// proj annihilates the subspace.
struct QuotientSpace {
  Matrix proj;     // (n-r) x n
  Matrix section;  // n x (n-r)
};

/// `sub` is any spanning set of columns inside k^n (n = sub.rows()).
QuotientSpace quotient_space(const Matrix& sub, std::size_t ambient_dim,
                             const FieldSpec& f);

}  // namespace stt
