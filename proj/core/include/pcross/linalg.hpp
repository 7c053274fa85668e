#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcross/scalar.hpp"

namespace pcross {

/// Dense coordinate vector over one field.
class Vector {
 public:
  Vector() = default;
  Vector(const Field& field, std::size_t size);
  Vector(const Field& field, std::initializer_list<long> values);
  Vector(const Field& field, std::vector<Scalar> values);

  static Vector unit(const Field& field, std::size_t size, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_zero() const;

  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Scalar> entries() const noexcept { return data_; }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& c);
  /// this += c * rhs
  void axpy(const Scalar& c, const Vector& rhs);

  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  friend bool operator==(const Vector& lhs, const Vector& rhs);

  std::string to_string() const;

 private:
  void require_compatible(const Vector& rhs) const;

  Field field_;
  std::vector<Scalar> data_;
};

/// Dense row-major matrix. Linear maps act on column vectors: y = M x, so the
/// image of basis vector j is column j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  Matrix(const Field& field, std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(const Field& field, std::size_t n);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const Field& field, std::size_t rows, std::span<const Vector> cols);
  static Matrix from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  void set_row(std::size_t r, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  /// Stack rows of `below` under this matrix.
  Matrix vstack(const Matrix& below) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Structure constants of a bilinear map V1 x V2 -> V3: t(i, j, k) is the
/// coefficient of output basis vector k on the input pair (e_i, e_j).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(const Field& field, std::size_t d1, std::size_t d2, std::size_t d3);

  const Field& field() const noexcept { return field_; }
  std::size_t dim1() const noexcept { return d1_; }
  std::size_t dim2() const noexcept { return d2_; }
  std::size_t dim3() const noexcept { return d3_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  Scalar& flat(std::size_t n) { return data_[n]; }
  const Scalar& flat(std::size_t n) const { return data_[n]; }

  /// Output vector for the basis pair (e_i, e_j).
  Vector fiber(std::size_t i, std::size_t j) const;
  void set_fiber(std::size_t i, std::size_t j, const Vector& v);
  /// Bilinear evaluation sum_ij x_i y_j t(i, j, .).
  Vector apply(const Vector& x, const Vector& y) const;

  friend bool operator==(const Tensor3& lhs, const Tensor3& rhs);

 private:
  Field field_;
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Subspace in canonical form: nonzero rows of a reduced row-echelon matrix.
/// Two subspaces are equal iff their bases compare equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(const Field& field, std::size_t ambient_dim);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const Vector& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// ambient_dim x dim matrix with the basis vectors as columns.
  Matrix as_columns() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&);

 private:
  friend SubspaceBasis subspace_from_rref(const Field&, std::size_t, const RrefResult&);

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// V / R realized by a projection onto the span of the non-pivot coordinate
/// vectors of R's echelon basis and the matching section.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  SubspaceBasis relations;
  std::vector<std::size_t> complement;  // ambient coordinates spanning the quotient
  Matrix projection;                    // dim x ambient
  Matrix section;                       // ambient x dim

  std::size_t dim() const noexcept { return complement.size(); }
  Vector project(const Vector& v) const { return projection.apply(v); }
  Vector lift(const Vector& q) const { return section.apply(q); }
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// One solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
SubspaceBasis kernel_basis(const Matrix& m);
SubspaceBasis span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors);
/// Non-empty list only; the ambient dimension is taken from the vectors.
SubspaceBasis span(std::span<const Vector> vectors);
SubspaceBasis image(const Matrix& m);
/// Coefficients of v in the echelon basis of sub, or nullopt if v is not a member.
std::optional<Vector> coords_in(const SubspaceBasis& sub, const Vector& v);
QuotientSpace quotient(const Field& field, std::size_t ambient_dim, std::span<const Vector> relations);
/// Row-major Kronecker product: index (i, j) -> i * w.size() + j.
Vector kron(const Vector& v, const Vector& w);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Matrix (out_dim x in_dim) of a linear map given as a function on coordinate vectors.
Matrix matrix_of(const Field& field, std::size_t in_dim, std::size_t out_dim,
                 const std::function<Vector(const Vector&)>& map);

void require_dims(std::size_t got, std::size_t want, const char* what);

}  // namespace pcross
