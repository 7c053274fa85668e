#include "pcross/linalg.hpp"

#include <sstream>

#include "pcross/error.hpp"

namespace pcross {

void require_dims(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

Matrix matrix_of(const Field& field, std::size_t in_dim, std::size_t out_dim,
                 const std::function<Vector(const Vector&)>& map) {
  Matrix m(field, out_dim, in_dim);
  for (std::size_t c = 0; c < in_dim; ++c) m.set_column(c, map(Vector::unit(field, in_dim, c)));
  return m;
}

// ---------------------------------------------------------------- Vector

Vector::Vector(const Field& field, std::size_t size) : field_(field), data_(size, Scalar::zero(field)) {}

Vector::Vector(const Field& field, std::initializer_list<long> values) : field_(field) {
  data_.reserve(values.size());
  for (long v : values) data_.emplace_back(field, v);
}

Vector::Vector(const Field& field, std::vector<Scalar> values) : field_(field), data_(std::move(values)) {
  for (const auto& s : data_) {
    if (s.field() != field) throw Error(ErrorCode::FieldMismatch, "vector entry from another field");
  }
}

Vector Vector::unit(const Field& field, std::size_t size, std::size_t index) {
  Vector v(field, size);
  v[index] = Scalar::one(field);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void Vector::require_compatible(const Vector& rhs) const {
  if (field_ != rhs.field_) throw Error(ErrorCode::FieldMismatch, "vector fields differ");
  require_dims(rhs.size(), size(), "vector length");
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  }
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  for (auto& s : data_) {
    if (!s.is_zero()) s *= c;
  }
  return *this;
}

void Vector::axpy(const Scalar& c, const Vector& rhs) {
  require_compatible(rhs);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += c * rhs.data_[i];
  }
}

bool operator==(const Vector& lhs, const Vector& rhs) {
  return lhs.field_ == rhs.field_ && lhs.data_ == rhs.data_;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < data_.size(); ++i) os << (i ? ", " : "") << data_[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(const Field& field, std::initializer_list<std::initializer_list<long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_dims(r.size(), cols_, "matrix row length");
    for (long v : r) data_.emplace_back(field, v);
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require_dims(v.size(), rows_, "matrix column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  require_dims(v.size(), cols_, "matrix row");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  require_dims(x.size(), cols_, "matrix-vector product");
  Vector y(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) y[r] += m * x[c];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_dims(rhs.rows_, cols_, "matrix product");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& b = rhs(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_dims(rhs.rows_, rows_, "matrix rows");
  require_dims(rhs.cols_, cols_, "matrix cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_dims(rhs.rows_, rows_, "matrix rows");
  require_dims(rhs.cols_, cols_, "matrix cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.field_ == rhs.field_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         lhs.data_ == rhs.data_;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require_dims(below.cols_, cols_, "vstack columns");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) os << (r ? ", " : "") << row(r).to_string();
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Tensor3

Tensor3::Tensor3(const Field& field, std::size_t d1, std::size_t d2, std::size_t d3)
    : field_(field), d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, Scalar::zero(field)) {}

Vector Tensor3::fiber(std::size_t i, std::size_t j) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>((i * d2_ + j) * d3_);
  return Vector(field_, std::vector<Scalar>(begin, begin + static_cast<std::ptrdiff_t>(d3_)));
}

void Tensor3::set_fiber(std::size_t i, std::size_t j, const Vector& v) {
  require_dims(v.size(), d3_, "tensor fiber");
  for (std::size_t k = 0; k < d3_; ++k) (*this)(i, j, k) = v[k];
}

Vector Tensor3::apply(const Vector& x, const Vector& y) const {
  require_dims(x.size(), d1_, "tensor first argument");
  require_dims(y.size(), d2_, "tensor second argument");
  Vector out(field_, d3_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d2_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < d3_; ++k) {
        const Scalar& t = (*this)(i, j, k);
        if (!t.is_zero()) out[k] += c * t;
      }
    }
  }
  return out;
}

bool operator==(const Tensor3& lhs, const Tensor3& rhs) {
  return lhs.field_ == rhs.field_ && lhs.d1_ == rhs.d1_ && lhs.d2_ == rhs.d2_ && lhs.d3_ == rhs.d3_ &&
         lhs.data_ == rhs.data_;
}

// ---------------------------------------------------------------- echelon machinery

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(pivot_row, k));
    }
    const Scalar inv = a(pivot_row, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!a(pivot_row, k).is_zero()) a(pivot_row, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(pivot_row, k).is_zero()) a(r, k) -= factor * a(pivot_row, k);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require_dims(b.size(), m.rows(), "right-hand side");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.field(), m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return x;
}

SubspaceBasis::SubspaceBasis(const Field& field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim) {}

SubspaceBasis subspace_from_rref(const Field& field, std::size_t ambient, const RrefResult& red) {
  SubspaceBasis s(field, ambient);
  for (std::size_t i = 0; i < red.rank; ++i) s.basis_.push_back(red.reduced.row(i));
  s.pivots_ = red.pivots;
  return s;
}

bool SubspaceBasis::contains(const Vector& v) const { return coords_in(*this, v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Matrix SubspaceBasis::as_columns() const { return Matrix::from_columns(field_, ambient_, basis_); }

bool operator==(const SubspaceBasis& lhs, const SubspaceBasis& rhs) {
  return lhs.field_ == rhs.field_ && lhs.ambient_ == rhs.ambient_ && lhs.basis_ == rhs.basis_;
}

SubspaceBasis kernel_basis(const Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, free);
    vecs.push_back(std::move(v));
  }
  return span(m.field(), m.cols(), vecs);
}

SubspaceBasis span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  for (const auto& v : vectors) require_dims(v.size(), ambient_dim, "span member");
  if (vectors.empty()) return SubspaceBasis(field, ambient_dim);
  return subspace_from_rref(field, ambient_dim, rref(Matrix::from_rows(field, ambient_dim, vectors)));
}

SubspaceBasis span(std::span<const Vector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::DimensionMismatch, "span of an empty list needs an ambient dimension");
  return span(vectors.front().field(), vectors.front().size(), vectors);
}

SubspaceBasis image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.field(), m.rows(), cols);
}

std::optional<Vector> coords_in(const SubspaceBasis& sub, const Vector& v) {
  require_dims(v.size(), sub.ambient_dim(), "coords_in ambient");
  // Echelon form: the coefficient of basis vector i is v at pivot i.
  Vector coeffs(sub.field(), sub.dim());
  Vector residual = v;
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    const Scalar c = residual[sub.pivots()[i]];
    coeffs[i] = c;
    if (!c.is_zero()) residual.axpy(-c, sub[i]);
  }
  if (!residual.is_zero()) return std::nullopt;
  return coeffs;
}

QuotientSpace quotient(const Field& field, std::size_t ambient_dim, std::span<const Vector> relations) {
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = span(field, ambient_dim, relations);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : q.relations.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) q.complement.push_back(c);
  }
  q.projection = Matrix(field, q.complement.size(), ambient_dim);
  q.section = Matrix(field, ambient_dim, q.complement.size());
  for (std::size_t k = 0; k < q.complement.size(); ++k) {
    q.projection(k, q.complement[k]) = Scalar::one(field);
    q.section(q.complement[k], k) = Scalar::one(field);
  }
  // e_p for a pivot p is congruent to e_p - row_p, which has support on the complement only.
  for (std::size_t r = 0; r < q.relations.dim(); ++r) {
    const std::size_t p = q.relations.pivots()[r];
    for (std::size_t k = 0; k < q.complement.size(); ++k) {
      q.projection(k, p) = -q.relations[r][q.complement[k]];
    }
  }
  return q;
}

Vector kron(const Vector& v, const Vector& w) {
  Vector out(v.field(), v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!w[j].is_zero()) out[i * w.size() + j] = v[i] * w[j];
    }
  }
  return out;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_dims(b.ambient_dim(), a.ambient_dim(), "intersect ambient");
  // Solve sum x_i a_i - sum y_j b_j = 0 and map the x part back.
  const std::size_t n = a.ambient_dim();
  Matrix m(a.field(), n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_column(i, a[i]);
  for (std::size_t j = 0; j < b.dim(); ++j) m.set_column(a.dim() + j, -Scalar::one(a.field()) * b[j]);
  const SubspaceBasis ker = kernel_basis(m);
  std::vector<Vector> vecs;
  for (const auto& k : ker.basis()) {
    Vector v(a.field(), n);
    for (std::size_t i = 0; i < a.dim(); ++i) v.axpy(k[i], a[i]);
    vecs.push_back(std::move(v));
  }
  return span(a.field(), n, vecs);
}

}  // namespace pcross
