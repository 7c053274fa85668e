#pragma once

#include <optional>

#include "pcross/check_report.hpp"
#include "pcross/hopf.hpp"

namespace pcross {

/// A pair (action, cocycle) of H on A.
///   action(i, j, k):  coefficient of a_k in h_i . a_j
///   cocycle(i, j, k): coefficient of a_k in w(h_i, h_j)
struct TwistedPartialAction {
  HopfAlgebraData H;
  AlgebraData A;
  Tensor3 action;
  Tensor3 cocycle;

  const Field& field() const noexcept { return A.field(); }
  Vector act(const Vector& h, const Vector& a) const { return action.apply(h, a); }
  Vector act(std::size_t h, const Vector& a) const { return act(H.basis(h), a); }
  Vector omega(const Vector& h, const Vector& l) const { return cocycle.apply(h, l); }
  Vector omega(std::size_t h, std::size_t l) const { return cocycle.fiber(h, l); }
  /// e(h) = h . 1_A
  Vector e(const Vector& h) const { return act(h, A.unit); }
  Vector e(std::size_t h) const { return act(h, A.unit); }
};

/// A global twisted action (measuring `action`, twist `twist`) of H on B.
struct GlobalTwistedAction {
  HopfAlgebraData H;
  AlgebraData B;
  Tensor3 action;
  Tensor3 twist;

  Vector act(const Vector& h, const Vector& b) const { return action.apply(h, b); }
  Vector act(std::size_t h, const Vector& b) const { return act(H.basis(h), b); }
  Vector u(const Vector& h, const Vector& l) const { return twist.apply(h, l); }
  /// Same data viewed as a partial action on all of B.
  TwistedPartialAction as_partial() const { return {H, B, action, twist}; }
};

/// Central idempotent 1_A of B with its ideal A = 1_A B as a standalone algebra.
struct CentralIdempotent {
  Vector element;        // 1_A in B coordinates
  SubspaceBasis ideal;   // echelon basis of 1_A B inside B
  AlgebraData algebra;   // A in the echelon basis, unit 1_A
  Matrix inclusion;      // dim B x dim A
  Matrix projection;     // dim A x dim B: b -> coordinates of 1_A b
};

struct InducedPartialAction {
  TwistedPartialAction tpa;
  CentralIdempotent idempotent;
};

/// Validates 1_A as a central idempotent of B and extracts the ideal.
CentralIdempotent central_idempotent(const AlgebraData& B, const Vector& one_A);

/// Partial module algebra axioms for a cocycle-free partial action.
CheckReport verify_partial_module_algebra(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action);
/// Unit action, measuring, twisted module condition and cocycle support
/// w(h, l) = w(h1, l1)(h2 l2 . 1_A).
CheckReport verify_twisted_partial(const TwistedPartialAction& tpa);
/// w(h, l) = (h1 . (l1 . 1_A)) w(h2, l2) = (h1 . 1_A) w(h2, l).
CheckReport verify_cocycle_absorption(const TwistedPartialAction& tpa);
/// Normalization, twisted module and 2-cocycle conditions under which the
/// crossed product is unital and associative.
CheckReport verify_crossed_conditions(const TwistedPartialAction& tpa);
/// h . (l . 1_A) = w(h, l) = (h1 . 1_A)(h2 l . 1_A) for all basis pairs.
bool is_trivial_cocycle(const TwistedPartialAction& tpa);
/// The six axioms of a twisted global action.
CheckReport verify_global(const GlobalTwistedAction& g);
/// h . a = 1_A (h |> a), w(h, l) = (h1 . 1_A) u(h2, l1)(h3 l2 . 1_A) on A = 1_A B.
InducedPartialAction induce_partial(const GlobalTwistedAction& g, const Vector& one_A);

struct SymmetricResult {
  CheckReport report;
  std::optional<LinMapHom> omega_inverse;  // w' in Hom(H (x) H, A)
};
/// f1(h, k) = (h . 1_A) eps(k) and f2(h, k) = hk . 1_A central, w invertible
/// relative to f1 * f2 inside the ideal it generates, and
/// h . (k . 1_A) = (h1 . 1_A)(h2 k . 1_A).
SymmetricResult verify_symmetric(const TwistedPartialAction& tpa);
LinMapHom f1_map(const TwistedPartialAction& tpa);
LinMapHom f2_map(const TwistedPartialAction& tpa);
/// The cocycle as an element of Hom(H (x) H, A).
LinMapHom cocycle_map(const TwistedPartialAction& tpa);

struct EMapResult {
  LinMapHom e;
  bool central = false;
};
/// e(h) = h . 1_A together with its centrality in Hom(H, A).
EMapResult e_map(const TwistedPartialAction& tpa);

}  // namespace pcross
