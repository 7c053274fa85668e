#pragma once

#include <cstdint>
#include <random>

#include "pcross/globalization.hpp"
#include "pcross/partial_action.hpp"

namespace pcross::fixtures {

/// kC_n with basis 1, g, ..., g^{n-1}.
HopfAlgebraData cyclic(const Field& f, std::size_t n);

/// kC3 on k^2: g.(x,y) = (0,x), g^2.(x,y) = (y,0), w(h,l) = h.(l.1_A).
TwistedPartialAction c3_partial(const Field& f = Field::rational());
/// kC2 acting trivially on k with w(1,1) = w(1,g) = w(g,1) = 1, w(g,g) = lambda.
TwistedPartialAction cocycle_c2(const Field& f, const Scalar& lambda);
TwistedPartialAction cocycle_c2(long lambda);
/// Induced from the swap on k^2 cut down by 1_A = (1,0): g.a = 0 on A = k.
TwistedPartialAction degenerate_swap(const Field& f = Field::rational());
/// H = k acting on k^2.
TwistedPartialAction trivial_hopf_action(const Field& f = Field::rational());
/// kC2 on upper triangular 2x2 matrices with g.a = E11 a E11.
TwistedPartialAction triangular_corner(const Field& f = Field::rational());

/// k^3 with the cyclic shift g |> e_i = e_{i+1}, u trivial.
GlobalTwistedAction c3_shift(const Field& f = Field::rational());
/// k^2 with the coordinate swap, u trivial.
GlobalTwistedAction c2_swap(const Field& f = Field::rational());
/// kC2 acting trivially on k with u(g,g) = lambda.
GlobalTwistedAction c2_twisted_scalar(const Field& f, const Scalar& lambda);
/// Trivial action h |> b = eps(h) b and trivial twist.
GlobalTwistedAction trivial_global(const HopfAlgebraData& H, const AlgebraData& B);

/// c3_partial inside k^3 with the shift and theta = inclusion of e1, e2.
EnvelopingActionData c3_enveloping(const Field& f = Field::rational());
/// degenerate_swap inside k^2 with the swap and theta(a) = (a, 0).
EnvelopingActionData swap_enveloping(const Field& f = Field::rational());

/// Every shipped fixture with a short name.
std::vector<std::pair<std::string, TwistedPartialAction>> shipped();

/// A gauge test case over kC_n on k^m (n, m <= 3): an action induced from a
/// permutation action cut down by a coordinate idempotent, a cocycle
/// rescaled on its support (so it may or may not satisfy the axioms), and a
/// gauge map v with v(1) = 1_A and v(g) an invertible element of (g.1_A)A.
struct GaugeCase {
  TwistedPartialAction tpa;
  LinMapHom v;
  bool cocycle_rescaled = false;
};
GaugeCase random_gauge_case(std::mt19937_64& rng);

}  // namespace pcross::fixtures
