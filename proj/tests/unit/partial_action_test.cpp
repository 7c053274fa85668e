#include "doctest.h"
#include "helpers.hpp"
#include "pcross/error.hpp"
#include "pcross/fixtures.hpp"
#include "pcross/partial_action.hpp"

using namespace pcross;
using testing::has_witness;
using testing::q;
using testing::qvec;
using testing::sub_passed;

namespace {

const Field Q = Field::rational();

bool all_pass(const TwistedPartialAction& t) {
  return verify_twisted_partial(t).passed() && verify_cocycle_absorption(t).passed() &&
         verify_crossed_conditions(t).passed();
}

}  // namespace

TEST_SUITE("partial_action") {
  TEST_CASE("partial module algebra") {
    const TwistedPartialAction c3 = fixtures::c3_partial();
    CHECK(verify_partial_module_algebra(c3.H, c3.A, c3.action).passed());
    const GlobalTwistedAction triv = fixtures::trivial_global(fixtures::cyclic(Q, 3), matrix_algebra(Q, 2));
    CHECK(verify_partial_module_algebra(triv.H, triv.B, triv.action).passed());

    // g . a = E11 a E11 on upper triangular matrices: g . (g . E12) = 0 but
    // (g . 1)(g^2 . E12) = E11 E12 = E12.
    const TwistedPartialAction corner = fixtures::triangular_corner();
    const CheckReport r = verify_partial_module_algebra(corner.H, corner.A, corner.action);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {1, 1, 1}));
    CHECK(sub_passed(r, "measuring"));
  }

  TEST_CASE("twisted partial action verifier") {
    CHECK(verify_twisted_partial(fixtures::c3_partial()).passed());
    CHECK(verify_twisted_partial(fixtures::trivial_global(fixtures::cyclic(Q, 2), upper_triangular2(Q)).as_partial())
              .passed());
    for (const auto& [name, fx] : fixtures::shipped()) {
      INFO(name);
      CHECK(all_pass(fx));
    }

    TwistedPartialAction bad = fixtures::c3_partial();
    bad.action(1, 0, 1) = Scalar(Q, 2);  // g.(1,0) = (0,2) breaks multiplicativity
    CHECK_FALSE(verify_twisted_partial(bad).passed());
  }

  TEST_CASE("cocycle absorption") {
    CHECK(verify_cocycle_absorption(fixtures::c3_partial()).passed());
    CHECK(verify_cocycle_absorption(fixtures::trivial_global(fixtures::cyclic(Q, 2), componentwise_algebra(Q, 2))
                                        .as_partial())
              .passed());

    // w = eps (x) eps 1_A is not absorbed: w(g, g^2) would have to be (0,1).
    TwistedPartialAction flat = fixtures::c3_partial();
    for (std::size_t h = 0; h < 3; ++h)
      for (std::size_t l = 0; l < 3; ++l) flat.cocycle.set_fiber(h, l, flat.A.unit);
    const CheckReport r = verify_cocycle_absorption(flat);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {1, 2}));

    TwistedPartialAction corrupt = fixtures::c3_partial();
    corrupt.cocycle(2, 2, 1) = Scalar(Q, 5);
    CHECK(has_witness(verify_cocycle_absorption(corrupt), {2, 2}));
  }

  TEST_CASE("crossed product conditions") {
    for (long lambda : {1L, 2L, -3L}) CHECK(verify_crossed_conditions(fixtures::cocycle_c2(lambda)).passed());
    CHECK(verify_crossed_conditions(fixtures::c3_partial()).passed());

    TwistedPartialAction bad = fixtures::cocycle_c2(2);
    bad.cocycle(0, 1, 0) = Scalar(Q, 3);  // w(1, g) != g . 1_A
    const CheckReport r = verify_crossed_conditions(bad);
    CHECK_FALSE(sub_passed(r, "normalization"));
  }

  TEST_CASE("trivial cocycle detection") {
    CHECK(is_trivial_cocycle(fixtures::c3_partial()));
    CHECK(is_trivial_cocycle(fixtures::cocycle_c2(1)));
    CHECK_FALSE(is_trivial_cocycle(fixtures::cocycle_c2(2)));
    CHECK(is_trivial_cocycle(fixtures::c3_shift().as_partial()));
  }

  TEST_CASE("global twisted actions") {
    CHECK(verify_global(fixtures::c3_shift()).passed());
    CHECK(verify_global(fixtures::c2_swap()).passed());
    CHECK(verify_global(fixtures::c2_twisted_scalar(Q, q(5, 2))).passed());

    GlobalTwistedAction bad = fixtures::c3_shift();
    bad.twist.set_fiber(1, 1, qvec({1, 0, 0}));
    CHECK_FALSE(verify_global(bad).passed());
  }

  TEST_CASE("central idempotents") {
    const AlgebraData B = componentwise_algebra(Q, 3);
    const CentralIdempotent ci = central_idempotent(B, qvec({1, 1, 0}));
    CHECK(ci.ideal.dim() == 2);
    CHECK(verify_algebra(ci.algebra).passed());
    CHECK(ci.projection * ci.inclusion == Matrix::identity(Q, 2));

    try {
      (void)central_idempotent(B, qvec({2, 0, 0}));
      FAIL("expected NotIdempotent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotIdempotent);
    }
    try {
      (void)central_idempotent(upper_triangular2(Q), qvec({1, 0, 0}));
      FAIL("expected NotCentral");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCentral);
    }
  }

  TEST_CASE("induced partial actions") {
    const InducedPartialAction c3 = induce_partial(fixtures::c3_shift(), qvec({1, 1, 0}));
    const TwistedPartialAction expected = fixtures::c3_partial();
    CHECK(c3.tpa.action == expected.action);
    CHECK(c3.tpa.cocycle == expected.cocycle);
    CHECK(c3.tpa.omega(1, 1).is_zero());
    CHECK(c3.tpa.omega(1, 2) == qvec({0, 1}));
    CHECK(verify_twisted_partial(c3.tpa).passed());

    const InducedPartialAction swap = induce_partial(fixtures::c2_swap(), qvec({1, 0}));
    CHECK(swap.tpa.act(1, swap.tpa.A.unit).is_zero());
    CHECK(swap.tpa.action == fixtures::degenerate_swap().action);

    // Cutting by the unit gives the global action back.
    const GlobalTwistedAction g = fixtures::c2_twisted_scalar(Q, q(3));
    const InducedPartialAction whole = induce_partial(g, g.B.unit);
    CHECK(whole.tpa.action == g.action);
    CHECK(whole.tpa.cocycle == g.twist);
  }

  TEST_CASE("symmetric partial actions") {
    const SymmetricResult coc = verify_symmetric(fixtures::cocycle_c2(Q, q(4)));
    CHECK(coc.report.passed());
    REQUIRE(coc.omega_inverse.has_value());
    CHECK(coc.omega_inverse->at(3) == qvec({q(1, 4)}));  // w'(g, g)

    const SymmetricResult c3 = verify_symmetric(fixtures::c3_partial());
    CHECK(c3.report.passed());
    REQUIRE(c3.omega_inverse.has_value());
    // Oracle: pointwise w w' = f1 * f2 on group-likes, with w' supported on the ideal.
    const TwistedPartialAction t = fixtures::c3_partial();
    for (std::size_t h = 0; h < 3; ++h) {
      for (std::size_t l = 0; l < 3; ++l) {
        const Vector w = t.omega(h, l);
        const Vector wp = c3.omega_inverse->at(h * 3 + l);
        const Vector f12 = t.A.multiply(t.e(h), t.e(t.H.algebra.mult.fiber(h, l)));
        CHECK(t.A.multiply(w, wp) == f12);
        CHECK(t.A.multiply(wp, f12) == wp);
      }
    }

    // Breaking h . (k . 1_A) = (h1 . 1_A)(h2 k . 1_A).
    TwistedPartialAction bad = fixtures::c3_partial();
    bad.action(2, 1, 1) = Scalar(Q, 1);
    const SymmetricResult r = verify_symmetric(bad);
    CHECK_FALSE(sub_passed(r.report, "partial_composition_of_unit"));
  }

  TEST_CASE("e map") {
    const EMapResult triv =
        e_map(fixtures::trivial_global(fixtures::cyclic(Q, 2), componentwise_algebra(Q, 2)).as_partial());
    CHECK(triv.e.matrix == Matrix(Q, {{1, 1}, {1, 1}}));
    CHECK(triv.central);

    const EMapResult c3 = e_map(fixtures::c3_partial());
    CHECK(c3.e.at(1) == qvec({0, 1}));
    CHECK(c3.e.at(2) == qvec({1, 0}));
    CHECK(c3.central);

    CHECK_FALSE(e_map(fixtures::triangular_corner()).central);
  }

  TEST_CASE("f1 and f2 against direct evaluation") {
    const TwistedPartialAction t = fixtures::c3_partial();
    const LinMapHom f1 = f1_map(t);
    const LinMapHom f2 = f2_map(t);
    for (std::size_t h = 0; h < 3; ++h) {
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(f1.at(h * 3 + k) == t.e(h));  // eps(k) = 1 on group-likes
        CHECK(f2.at(h * 3 + k) == t.e(t.H.algebra.mult.fiber(h, k)));
      }
    }
    CHECK(cocycle_map(t).at(1 * 3 + 2) == qvec({0, 1}));
  }

  TEST_CASE("shape errors") {
    TwistedPartialAction bad = fixtures::c3_partial();
    bad.cocycle = Tensor3(Q, 3, 2, 2);
    CHECK_THROWS_AS(verify_twisted_partial(bad), Error);
  }
}
