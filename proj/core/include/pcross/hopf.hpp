#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcross/check_report.hpp"
#include "pcross/linalg.hpp"

namespace pcross {

/// Finite-dimensional algebra by structure constants:
/// mult(i, j, k) is the coefficient of e_k in e_i e_j.
struct AlgebraData {
  std::vector<std::string> labels;
  Tensor3 mult;
  Vector unit;

  std::size_t dim() const noexcept { return unit.size(); }
  const Field& field() const noexcept { return unit.field(); }
  Vector basis(std::size_t i) const { return Vector::unit(field(), dim(), i); }
  Vector zero() const { return Vector(field(), dim()); }
  Vector multiply(const Vector& x, const Vector& y) const { return mult.apply(x, y); }
  Vector multiply(const Vector& x, const Vector& y, const Vector& z) const {
    return multiply(multiply(x, y), z);
  }
  /// Matrix of y -> x y.
  Matrix left_mult(const Vector& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const Vector& x) const;
};

/// One Sweedler term of an iterated coproduct: coef * e_{idx[0]} (x) ... (x) e_{idx[n-1]}.
struct SweedlerTerm {
  std::vector<std::size_t> idx;
  Scalar coef;
};

/// comult(i, j, k) is the coefficient of e_j (x) e_k in Delta(e_i).
struct CoalgebraData {
  Tensor3 comult;
  Vector counit;

  std::size_t dim() const noexcept { return counit.size(); }
  const Field& field() const noexcept { return counit.field(); }
  /// Nonzero terms of the (parts-1)-fold iterated coproduct of e_i
  /// (parts = 1 gives e_i itself), expanding the last leg each time.
  std::vector<SweedlerTerm> coproduct(std::size_t i, std::size_t parts) const;
  Scalar epsilon(const Vector& x) const;
};

struct HopfAlgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  Matrix antipode;  // column i = S(e_i)

  std::size_t dim() const noexcept { return algebra.dim(); }
  const Field& field() const noexcept { return algebra.field(); }
  const Vector& one() const noexcept { return algebra.unit; }
  Vector basis(std::size_t i) const { return algebra.basis(i); }
  Vector multiply(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
  Vector S(const Vector& x) const { return antipode.apply(x); }
  std::vector<SweedlerTerm> coproduct(std::size_t i, std::size_t parts) const {
    return coalgebra.coproduct(i, parts);
  }
};

/// Element of a convolution algebra Hom(C, A): codomain x domain matrix,
/// column c holds the image of the c-th coalgebra basis vector.
struct LinMapHom {
  Matrix matrix;

  std::size_t domain_dim() const noexcept { return matrix.cols(); }
  std::size_t codomain_dim() const noexcept { return matrix.rows(); }
  Vector operator()(const Vector& c) const { return matrix.apply(c); }
  Vector at(std::size_t c) const { return matrix.column(c); }
  friend bool operator==(const LinMapHom&, const LinMapHom&) = default;
};

CheckReport verify_algebra(const AlgebraData& a);
CheckReport verify_coalgebra(const CoalgebraData& c);
/// Bialgebra compatibility and the antipode axiom. Also re-runs the algebra
/// and coalgebra verifiers as sub-reports.
CheckReport verify_hopf(const HopfAlgebraData& h);
bool is_cocommutative(const HopfAlgebraData& h);

/// C (x) C with Delta(a (x) b) = (a1 (x) b1) (x) (a2 (x) b2); index (a, b) -> a * n + b.
CoalgebraData tensor_square(const CoalgebraData& c);
/// Dual coalgebra of a finite-dimensional algebra: Delta(d_k) = sum mult(i, j, k) d_i (x) d_j.
CoalgebraData dual_coalgebra(const AlgebraData& a);

/// unit o epsilon, the unit of Hom(C, A).
LinMapHom convolution_unit(const CoalgebraData& c, const AlgebraData& a);
/// (f * g)(c) = f(c1) g(c2).
LinMapHom convolution(const LinMapHom& f, const LinMapHom& g, const CoalgebraData& c, const AlgebraData& a);
/// Two-sided inverse found by a linear solve, or nullopt.
std::optional<LinMapHom> convolution_inverse(const LinMapHom& f, const CoalgebraData& c, const AlgebraData& a);
/// Elementary maps E_ij: c_k -> delta_ik a_j, which span Hom(C, A).
LinMapHom elementary_map(std::size_t coalgebra_index, std::size_t algebra_index, const CoalgebraData& c,
                         const AlgebraData& a);
/// f is central iff it commutes with every E_ij.
bool is_central_in_convolution(const LinMapHom& f, const CoalgebraData& c, const AlgebraData& a);
/// Flattening used by linear solves over Hom(C, A): entry (row r, col c) -> r * domain + c.
Vector flatten(const LinMapHom& f);
LinMapHom unflatten(const Vector& v, std::size_t codomain_dim, std::size_t domain_dim);

/// Solution space of x t = epsilon(x) t for all basis x.
SubspaceBasis left_integrals(const HopfAlgebraData& h);
/// Solution space of t x = epsilon(x) t.
SubspaceBasis right_integrals(const HopfAlgebraData& h);

/// Cayley table of a finite group: table[i][j] = index of g_i g_j.
struct GroupTable {
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;

  std::size_t order() const noexcept { return table.size(); }
  std::size_t identity() const;
};

/// Validates the table (closure, associativity, identity, inverses); throws NonGroup.
void validate_group(const GroupTable& g);
GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group3();
/// One representative of every group of order 1..6.
std::vector<GroupTable> groups_up_to_order6();

/// kG with Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
HopfAlgebraData group_algebra(const Field& field, const GroupTable& g);
/// k^G: pointwise product, Delta(d_x) = sum_{yz=x} d_y (x) d_z, S(d_x) = d_{x^{-1}}.
HopfAlgebraData dual_group_algebra(const Field& field, const GroupTable& g);
/// The one-dimensional Hopf algebra k.
HopfAlgebraData trivial_hopf(const Field& field);
/// Recovers the group when every basis vector is group-like and products
/// permute the basis.
std::optional<GroupTable> as_group(const HopfAlgebraData& h);

/// k^n with componentwise product.
AlgebraData componentwise_algebra(const Field& field, std::size_t n);
/// Full matrix algebra M_n(k), basis E_ij at index i * n + j.
AlgebraData matrix_algebra(const Field& field, std::size_t n);
/// Upper triangular 2 x 2 matrices, basis E11, E12, E22.
AlgebraData upper_triangular2(const Field& field);

}  // namespace pcross
