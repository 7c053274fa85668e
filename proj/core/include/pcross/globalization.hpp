#pragma once

#include "pcross/check_report.hpp"
#include "pcross/partial_action.hpp"

namespace pcross {

/// A candidate enveloping action: a global twisted action on B together
/// with theta: A -> B (dim B x dim A).
struct EnvelopingActionData {
  TwistedPartialAction tpa;
  GlobalTwistedAction global;
  Matrix theta;
};

/// Sub-reports: global, partial, monomorphism, ideal, equivalence,
/// admissible, cocycle_compatibility, and the informational
/// cocycle_compatibility_literal (theta(a w(g,h)) = theta(a) u(g,h) verbatim).
CheckReport verify_enveloping(const EnvelopingActionData& e);

/// Morphism check between two twisted partial actions of the same H along
/// phi: A -> A' (dim A' x dim A): phi bijective, unital, multiplicative, and
/// intertwining both actions and cocycles.
CheckReport verify_partial_equivalence(const TwistedPartialAction& from, const TwistedPartialAction& to,
                                       const Matrix& phi);

/// Standard globalization of a partial action of a group algebra kG with
/// trivial cocycle inside F(G, A) = A^|G|: theta(a)(x) = x . a and
/// (h |> f)(x) = f(xh); B = span{h |> theta(a)} with u trivial.
EnvelopingActionData globalize_group_partial(const TwistedPartialAction& tpa);

/// induce_partial(global, theta(1_A)) compared with tpa through theta.
CheckReport verify_globalization_round_trip(const EnvelopingActionData& e);

}  // namespace pcross
