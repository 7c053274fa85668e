#pragma once

#include <optional>

#include "pcross/check_report.hpp"
#include "pcross/partial_action.hpp"

namespace pcross {

/// A#H as the subspace of A (x) H spanned by a(h1 . 1_A) (x) h2. Ambient
/// coordinates use index a * dim(H) + h; elements are always handled in the
/// echelon basis of that subspace.
struct CrossedProductAlgebra {
  TwistedPartialAction tpa;
  SubspaceBasis basis;   // echelon basis inside A (x) H
  AlgebraData algebra;   // structure constants in `basis`
  Matrix embedding;      // dim x dim(A): a -> a # 1_H

  std::size_t dim() const noexcept { return basis.dim(); }
  std::size_t ambient_dim() const noexcept { return basis.ambient_dim(); }
  Vector multiply(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
  Vector unit() const { return algebra.unit; }
  Vector to_ambient(const Vector& coords) const;
  /// Coordinates of an A (x) H vector, or nullopt if it lies outside A#H.
  std::optional<Vector> from_ambient(const Vector& ambient) const { return coords_in(basis, ambient); }
  /// Coordinates of a # h = a(h1 . 1_A) (x) h2.
  Vector element(const Vector& a, const Vector& h) const;
  Vector iota(const Vector& a) const { return embedding.apply(a); }
};

/// B#_u H on all of B (x) H.
struct GlobalCrossedProduct {
  GlobalTwistedAction global;
  AlgebraData algebra;  // basis b_i (x) h_j at index i * dim(H) + j

  std::size_t dim() const noexcept { return algebra.dim(); }
  Vector multiply(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
};

struct CrossedBuildOptions {
  /// Refuse to build unless the twisted partial action and the crossed
  /// product conditions verify.
  bool require_axioms = true;
};

/// (a (x) h)(b (x) l) = a(h1 . b) w(h2, l1) (x) h3 l2 on all basis pairs of A (x) H.
Tensor3 ambient_crossed_table(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action,
                              const Tensor3& cocycle);

CrossedProductAlgebra build_partial_crossed(const TwistedPartialAction& tpa, CrossedBuildOptions options = {});
GlobalCrossedProduct build_global_crossed(const GlobalTwistedAction& g, CrossedBuildOptions options = {});
/// Product in computed-basis coordinates.
Vector multiply(const CrossedProductAlgebra& cp, const Vector& x, const Vector& y);
/// Full triple-product associativity sweep plus unit checks.
CheckReport verify_assoc_unital(const CrossedProductAlgebra& cp);
CheckReport verify_assoc_unital(const GlobalCrossedProduct& cp);

struct Coaction {
  Matrix rho;                   // (dim * dim(H)) x dim, target index k * dim(H) + m
  SubspaceBasis coinvariants;   // inside A#H coordinates
  SubspaceBasis iota_image;     // iota_A(A) inside A#H coordinates
  bool coinvariants_equal_A = false;
};
/// rho(a # h) = (a # h1) (x) h2.
Coaction comodule_coaction(const CrossedProductAlgebra& cp);
/// (rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = id, basiswise.
CheckReport verify_coaction(const CrossedProductAlgebra& cp, const Coaction& co);

/// (A#H) (x)_A (A#H): plain tensor index p * dim + q modulo x iota(a) (x) y - x (x) iota(a) y.
QuotientSpace balanced_tensor_square(const CrossedProductAlgebra& cp);

struct CanonicalMap {
  QuotientSpace balanced;
  Matrix plain;       // on the plain tensor square, (dim * dim(H)) x dim^2
  Matrix on_quotient; // (dim * dim(H)) x dim(balanced)
  std::size_t rank = 0;
  bool well_defined = false;
  bool injective = false;
  bool bijective = false;  // onto all of (A#H) (x) H
};
/// can(x (x) y) = x y0 (x) y1 on the balanced tensor square.
CanonicalMap canonical_map(const CrossedProductAlgebra& cp);

}  // namespace pcross
