#pragma once

#include <optional>

#include "pcross/crossed_product.hpp"

namespace pcross {

/// v: H -> A with a weak convolution inverse v_inv relative to e(h) = h . 1_A.
struct GaugePair {
  LinMapHom v;
  LinMapHom v_inv;
  bool fully_invertible = false;  // v also has a two-sided inverse for unit o eps
};

/// Solves, in one stacked system, v_inv * v = v * v_inv = e,
/// v_inv(h) = v_inv(h1)(h2 . 1_A) = (h1 . 1_A) v_inv(h2), v_inv(1) = 1_A.
/// Throws PreconditionFailed unless v(1_H) = 1_A.
std::optional<GaugePair> weak_conv_inverse(const LinMapHom& v, const TwistedPartialAction& tpa);
/// The gauge v = unit o eps with itself as inverse.
GaugePair identity_gauge(const TwistedPartialAction& tpa);

/// w^v(h, l) = v(h1)(h2 . v(l1)) w(h3, l2) v_inv(h4 l3).
Tensor3 gauge_cocycle(const TwistedPartialAction& tpa, const GaugePair& g);
/// h .^v a = v(h1)(h2 . a) v_inv(h3).
Tensor3 gauge_action(const TwistedPartialAction& tpa, const GaugePair& g);
/// (A, .^v, w^v).
TwistedPartialAction gauged(const TwistedPartialAction& tpa, const GaugePair& g);

/// Pointwise composite (vu)(h) = v(h1) u(h2) with its freshly solved weak inverse.
std::optional<GaugePair> compose_gauges(const TwistedPartialAction& tpa, const GaugePair& v, const GaugePair& u);
/// w^{vu} = (w^u)^v and .^{vu} = (.^u)^v entrywise. Throws CompositeNotGauge
/// when vu has no weak inverse.
CheckReport verify_gauge_composition(const TwistedPartialAction& tpa, const GaugePair& v, const GaugePair& u);

struct GaugeIsomorphism {
  CrossedProductAlgebra original;  // A #_{., w} H
  CrossedProductAlgebra target;    // A #_{.^v, w^v} H
  Matrix phi;                      // target -> original, a # h -> a v(h1) # h2
  Matrix psi;                      // original -> target, a # h -> a v_inv(h1) # h2
  CheckReport report;
};
/// Builds both crossed products and checks that phi is a unital algebra
/// isomorphism with inverse psi. An informational sub-report evaluates the
/// reading with the ungauged action on the target.
GaugeIsomorphism gauge_isomorphism(const TwistedPartialAction& tpa, const GaugePair& g);

/// Verdicts of normalization, twisted module and cocycle conditions for
/// (., w) and (.^v, w^v) must agree pairwise.
CheckReport verify_equisatisfiability(const TwistedPartialAction& tpa, const GaugePair& g);

}  // namespace pcross
