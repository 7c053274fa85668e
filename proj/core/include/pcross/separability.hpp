#pragma once

#include <optional>

#include "pcross/crossed_product.hpp"

namespace pcross {

/// Partially cleft data on R = A#H: gamma, gamma' : H -> R as dim R x dim H matrices.
struct CleftData {
  CrossedProductAlgebra cp;
  Coaction coaction;
  LinMapHom gamma;
  LinMapHom gamma_prime;
};

/// gamma(h) = 1_A # h and gamma'(h) = 1_A # S(h). Only offered for trivial
/// cocycles; throws PreconditionFailed otherwise.
CleftData default_cleft_data(const CrossedProductAlgebra& cp);
CleftData make_cleft_data(const CrossedProductAlgebra& cp, LinMapHom gamma, LinMapHom gamma_prime);

/// (i) gamma(1) = 1; (ii) rho gamma = (gamma (x) id) Delta and
/// rho gamma' = (gamma' (x) S) Delta^cop; (iii) (gamma * gamma') o m lies in
/// iota(A), is central in Hom(H (x) H, A), and each value commutes with A.
/// Throws CoinvariantsMismatch when the coinvariants differ from iota(A).
CheckReport verify_partially_cleft(const CleftData& cd);

/// Elements of R commuting with iota(A).
SubspaceBasis centralizer(const CrossedProductAlgebra& cp);

/// gamma'(h1) c (S(h2) . 1_A) gamma(h3) = gamma(S(h2)) c gamma'(S(h1)) = S(h) . c
/// for basis h, with c in R coordinates. The last side is only evaluated for
/// c in iota(A). Throws NonCocommutative and NotInCentralizer.
CheckReport verify_centralizer_identity(const CleftData& cd, const Vector& c);

/// Element of R (x)_A R: quotient coordinates plus a lift in the plain
/// tensor square (index p * dim R + q).
struct BalancedTensorElement {
  Vector coords;
  Vector lift;
};
BalancedTensorElement balanced_from_lift(const QuotientSpace& q, const Vector& lift);

struct SeparabilityResult {
  BalancedTensorElement e;
  BalancedTensorElement f;  // gamma'(u1) (x)_A gamma(u2)
  QuotientSpace balanced;
  CheckReport report;
  std::size_t can_rank = 0;
  bool can_bijective = false;
};

/// Central c in A (A coordinates) with t . c = 1_A, if one exists.
std::optional<Vector> find_normalizing_center(const TwistedPartialAction& tpa, const Vector& t);

/// e = gamma'(u1) iota(c) iota(S(u2) . 1_A) (x)_A gamma(u3) with u = S(t),
/// checked for xe = ex, m(e) = 1 and e e = e; can bijectivity is reported.
/// t is in H coordinates, c in A coordinates. Throws NonCocommutative,
/// NotIntegral, NotCentral, NormalizationFailed, PreconditionFailed.
SeparabilityResult separability_idempotent(const CleftData& cd, const Vector& t, const Vector& c);

/// Conditions (1) and (2) plus the derived idempotence for any candidate.
CheckReport check_separable_extension(const CrossedProductAlgebra& cp, const QuotientSpace& balanced,
                                      const BalancedTensorElement& e);

}  // namespace pcross
