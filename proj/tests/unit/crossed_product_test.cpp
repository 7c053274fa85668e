#include "doctest.h"
#include "helpers.hpp"
#include "pcross/crossed_product.hpp"
#include "pcross/error.hpp"
#include "pcross/fixtures.hpp"

using namespace pcross;
using testing::q;
using testing::qvec;

namespace {

const Field Q = Field::rational();

Vector hbasis(std::size_t n, std::size_t i) { return Vector::unit(Q, n, i); }

// kC3 acting trivially on k with w(g, g) = 2: normalized but not a 2-cocycle.
TwistedPartialAction broken_cocycle() {
  TwistedPartialAction t = fixtures::trivial_global(fixtures::cyclic(Q, 3), componentwise_algebra(Q, 1)).as_partial();
  t.cocycle(1, 1, 0) = Scalar(Q, 2);
  return t;
}

}  // namespace

TEST_SUITE("crossed_product") {
  TEST_CASE("F_C3 basis and dimension") {
    const CrossedProductAlgebra cp = build_partial_crossed(fixtures::c3_partial());
    CHECK(cp.dim() == 4);
    CHECK(cp.ambient_dim() == 6);
    // (1,0)#1, (0,1)#1, (0,1)#g, (1,0)#g^2 at ambient index a * 3 + h.
    const std::vector<Vector> expected{Vector::unit(Q, 6, 0), Vector::unit(Q, 6, 3), Vector::unit(Q, 6, 4),
                                       Vector::unit(Q, 6, 2)};
    CHECK(cp.basis == span(Q, 6, expected));
    CHECK(verify_assoc_unital(cp).passed());
  }

  TEST_CASE("F_C3 products") {
    const CrossedProductAlgebra cp = build_partial_crossed(fixtures::c3_partial());
    const Vector x = cp.element(qvec({0, 1}), hbasis(3, 1));
    const Vector y = cp.element(qvec({1, 0}), hbasis(3, 2));
    CHECK(multiply(cp, x, y) == cp.element(qvec({0, 1}), hbasis(3, 0)));
    CHECK(multiply(cp, x, x).is_zero());
    for (std::size_t i = 0; i < cp.dim(); ++i) {
      const Vector b = Vector::unit(Q, cp.dim(), i);
      CHECK(multiply(cp, cp.unit(), b) == b);
      CHECK(multiply(cp, b, cp.unit()) == b);
    }
    // a # h vanishes where h . 1_A does not meet a.
    CHECK(cp.element(qvec({1, 0}), hbasis(3, 1)).is_zero());
    CHECK(cp.iota(qvec({1, 1})) == cp.unit());
    CHECK(cp.from_ambient(cp.to_ambient(x)) == x);
    CHECK_FALSE(cp.from_ambient(Vector::unit(Q, 6, 1)).has_value());
  }

  TEST_CASE("F_coc squares the generator to lambda") {
    for (long lambda : {1L, 2L, 7L}) {
      const CrossedProductAlgebra cp = build_partial_crossed(fixtures::cocycle_c2(lambda));
      CHECK(cp.dim() == 2);
      const Vector g = cp.element(qvec({1}), hbasis(2, 1));
      CHECK(multiply(cp, g, g) == Scalar(Q, lambda) * cp.unit());
      CHECK(verify_assoc_unital(cp).passed());
    }
  }

  TEST_CASE("degenerate swap collapses to A") {
    const CrossedProductAlgebra cp = build_partial_crossed(fixtures::degenerate_swap());
    CHECK(cp.dim() == 1);
    CHECK(verify_assoc_unital(cp).passed());
  }

  TEST_CASE("preconditions") {
    try {
      (void)build_partial_crossed(broken_cocycle());
      FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionFailed);
    }
    const CrossedProductAlgebra cp = build_partial_crossed(broken_cocycle(), {.require_axioms = false});
    CHECK(cp.dim() == 3);
    CHECK_FALSE(verify_assoc_unital(cp).passed());
  }

  TEST_CASE("ambient table against the defining formula") {
    // Group-likes and a commutative A: (a # h)(b # l) = a (h . b) w(h, l) # hl.
    const TwistedPartialAction t = fixtures::c3_partial();
    const Tensor3 table = ambient_crossed_table(t.H, t.A, t.action, t.cocycle);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t h = 0; h < 3; ++h)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t l = 0; l < 3; ++l) {
            const Vector coeff = t.A.multiply(t.A.basis(a), t.act(h, t.A.basis(b)), t.omega(h, l));
            const Vector expected = kron(coeff, t.H.multiply(t.H.basis(h), t.H.basis(l)));
            CHECK(table.fiber(a * 3 + h, b * 3 + l) == expected);
          }
  }

  TEST_CASE("global crossed products") {
    const GlobalCrossedProduct c3 = build_global_crossed(fixtures::c3_shift());
    CHECK(c3.dim() == 9);
    CHECK(verify_assoc_unital(c3).passed());

    // Trivial action and twist: the tensor product algebra B (x) H.
    const HopfAlgebraData H = fixtures::cyclic(Q, 2);
    const AlgebraData B = upper_triangular2(Q);
    const GlobalCrossedProduct tp = build_global_crossed(fixtures::trivial_global(H, B));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 2; ++l)
            CHECK(tp.algebra.mult.fiber(i * 2 + j, k * 2 + l) ==
                  kron(B.mult.fiber(i, k), H.algebra.mult.fiber(j, l)));

    const GlobalCrossedProduct tw = build_global_crossed(fixtures::c2_twisted_scalar(Q, q(-5)));
    CHECK(tw.multiply(Vector::unit(Q, 2, 1), Vector::unit(Q, 2, 1)) == qvec({-5, 0}));
  }

  TEST_CASE("comodule coaction and coinvariants") {
    const CrossedProductAlgebra coc = build_partial_crossed(fixtures::cocycle_c2(3));
    const Coaction cc = comodule_coaction(coc);
    CHECK(verify_coaction(coc, cc).passed());
    CHECK(cc.coinvariants.dim() == 1);
    CHECK(cc.coinvariants_equal_A);

    const CrossedProductAlgebra c3 = build_partial_crossed(fixtures::c3_partial());
    const Coaction c3c = comodule_coaction(c3);
    CHECK(verify_coaction(c3, c3c).passed());
    CHECK(c3c.coinvariants.dim() == 2);
    CHECK(c3c.coinvariants == c3c.iota_image);

    const CrossedProductAlgebra dg = build_partial_crossed(fixtures::degenerate_swap());
    const Coaction dc = comodule_coaction(dg);
    CHECK(dc.coinvariants.dim() == 1);
    CHECK(dc.coinvariants_equal_A);

    Coaction broken = cc;
    broken.rho(0, 0) = Scalar(Q, 2);
    CHECK_FALSE(verify_coaction(coc, broken).passed());
  }

  TEST_CASE("canonical map") {
    const CanonicalMap coc = canonical_map(build_partial_crossed(fixtures::cocycle_c2(1)));
    CHECK(coc.balanced.dim() == 4);
    CHECK(coc.well_defined);
    CHECK(coc.injective);
    CHECK(coc.bijective);
    CHECK(coc.rank == 4);

    const CanonicalMap c3 = canonical_map(build_partial_crossed(fixtures::c3_partial()));
    // Injective, but (A#H) (x)_A (A#H) has dimension 8 against 12 for (A#H) (x) H.
    CHECK(c3.well_defined);
    CHECK(c3.injective);
    CHECK(c3.balanced.dim() == 8);
    CHECK(c3.rank == 8);
    CHECK_FALSE(c3.bijective);

    const CanonicalMap dg = canonical_map(build_partial_crossed(fixtures::degenerate_swap()));
    CHECK(dg.balanced.dim() == 1);
    CHECK(dg.on_quotient.rows() == 2);
    CHECK_FALSE(dg.bijective);
  }
}
