#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "pcross/error.hpp"
#include "pcross/fixtures.hpp"
#include "pcross/globalization.hpp"

using namespace pcross;
using testing::qvec;
using testing::sub_passed;

namespace {

const Field Q = Field::rational();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// kC2 swapping the first two coordinates of k^3, A = k sitting in the first coordinate.
EnvelopingActionData swap_in_three() {
  const HopfAlgebraData H = fixtures::cyclic(Q, 2);
  GlobalTwistedAction g = fixtures::trivial_global(H, componentwise_algebra(Q, 3));
  g.action.set_fiber(1, 0, qvec({0, 1, 0}));
  g.action.set_fiber(1, 1, qvec({1, 0, 0}));
  Matrix theta(Q, 3, 1);
  theta(0, 0) = Scalar::one(Q);
  return {fixtures::degenerate_swap(), g, theta};
}

}  // namespace

TEST_SUITE("globalization") {
  TEST_CASE("shipped enveloping actions verify") {
    const CheckReport c3 = verify_enveloping(fixtures::c3_enveloping());
    CHECK(c3.passed());
    for (const char* s : {"global", "partial", "monomorphism", "ideal", "equivalence", "admissible",
                          "cocycle_compatibility"})
      CHECK_MESSAGE(sub_passed(c3, s), s);
    CHECK(verify_enveloping(fixtures::swap_enveloping()).passed());
  }

  TEST_CASE("non-admissible enveloping action") {
    const CheckReport r = verify_enveloping(swap_in_three());
    CHECK_FALSE(r.passed());
    CHECK_FALSE(sub_passed(r, "admissible"));
    CHECK(sub_passed(r, "monomorphism"));
    CHECK(sub_passed(r, "ideal"));
    CHECK(sub_passed(r, "equivalence"));
  }

  TEST_CASE("single-entry corruptions of theta or u are caught") {
    const EnvelopingActionData base = fixtures::c3_enveloping();
    for (std::size_t r = 0; r < base.theta.rows(); ++r) {
      for (std::size_t c = 0; c < base.theta.cols(); ++c) {
        EnvelopingActionData m = base;
        m.theta(r, c) += Scalar::one(Q);
        CHECK_FALSE(verify_enveloping(m).passed());
      }
    }
    for (std::size_t n = 0; n < base.global.twist.size(); ++n) {
      EnvelopingActionData m = base;
      m.global.twist.flat(n) += Scalar::one(Q);
      CHECK_FALSE(verify_enveloping(m).passed());
    }
  }

  TEST_CASE("partial equivalences") {
    const TwistedPartialAction t = fixtures::c3_partial();
    CHECK(verify_partial_equivalence(t, t, Matrix::identity(Q, 2)).passed());
    CHECK_FALSE(verify_partial_equivalence(t, t, Matrix(Q, {{0, 1}, {1, 0}})).passed());
    CHECK_FALSE(verify_partial_equivalence(t, t, Matrix(Q, {{1, 0}, {0, 0}})).passed());
  }

  TEST_CASE("globalizing F_C3") {
    const EnvelopingActionData env = globalize_group_partial(fixtures::c3_partial());
    CHECK(env.global.B.dim() == 3);
    CHECK(verify_enveloping(env).passed());
    CHECK(verify_globalization_round_trip(env).passed());
    CHECK(rank(env.theta) == 2);

    // g acts on B like the cyclic shift on k^3: order 3 with a one-dimensional fixed space.
    const Matrix L = matrix_of(Q, 3, 3, [&](const Vector& b) { return env.global.act(1, b); });
    CHECK(L * L * L == Matrix::identity(Q, 3));
    CHECK_FALSE(L == Matrix::identity(Q, 3));
    CHECK(kernel_basis(L - Matrix::identity(Q, 3)).dim() == 1);
    CHECK(verify_algebra(env.global.B).passed());
  }

  TEST_CASE("globalizing a global action changes nothing") {
    const TwistedPartialAction t = fixtures::c3_shift().as_partial();
    const EnvelopingActionData env = globalize_group_partial(t);
    CHECK(env.global.B.dim() == 3);
    CHECK(rank(env.theta) == 3);
    CHECK(verify_globalization_round_trip(env).passed());
  }

  TEST_CASE("globalizing the degenerate swap") {
    const EnvelopingActionData env = globalize_group_partial(fixtures::degenerate_swap());
    CHECK(env.global.B.dim() == 2);
    CHECK(verify_enveloping(env).passed());
    const Matrix L = matrix_of(Q, 2, 2, [&](const Vector& b) { return env.global.act(1, b); });
    CHECK_FALSE(L == Matrix::identity(Q, 2));
    CHECK(L * L == Matrix::identity(Q, 2));
  }

  TEST_CASE("globalization preconditions") {
    CHECK(code_of([] { (void)globalize_group_partial(fixtures::cocycle_c2(2)); }) == ErrorCode::PreconditionFailed);
    const TwistedPartialAction dual =
        fixtures::trivial_global(dual_group_algebra(Q, cyclic_group(2)), componentwise_algebra(Q, 1)).as_partial();
    CHECK(code_of([&] { (void)globalize_group_partial(dual); }) == ErrorCode::NonGroup);
    CHECK(code_of([] { (void)globalize_group_partial(fixtures::triangular_corner()); }) ==
          ErrorCode::PreconditionFailed);
  }
}
