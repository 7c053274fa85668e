#include "doctest.h"
#include "helpers.hpp"
#include "pcross/error.hpp"
#include "pcross/hopf.hpp"

using namespace pcross;
using testing::q;
using testing::qvec;

namespace {

const Field Q = Field::rational();

HopfAlgebraData qc(std::size_t n) { return group_algebra(Q, cyclic_group(n)); }

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("algebra verifier") {
    CHECK(verify_algebra(qc(2).algebra).passed());
    CHECK(verify_algebra(componentwise_algebra(Q, 2)).passed());
    CHECK(verify_algebra(matrix_algebra(Q, 2)).passed());
    CHECK(verify_algebra(upper_triangular2(Q)).passed());

    // Doubling any entry of the kC2 table is caught, except on g g: both
    // g g = 2 and g g = 1 + 2g still define associative unital algebras.
    const AlgebraData base = qc(2).algebra;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          AlgebraData bad = base;
          bad.mult(i, j, k) = bad.mult(i, j, k).is_zero() ? Scalar(Q, 2) : Scalar(Q, 2) * bad.mult(i, j, k);
          const CheckReport r = verify_algebra(bad);
          if (i == 1 && j == 1) {
            CHECK(r.passed());
          } else {
            CHECK_FALSE(r.passed());
            CHECK(r.violation_count() > 0);
          }
        }
      }
    }
    AlgebraData nonassoc = componentwise_algebra(Q, 2);
    nonassoc.mult(0, 0, 1) = Scalar(Q, 1);
    CHECK_FALSE(verify_algebra(nonassoc).passed());
  }

  TEST_CASE("coalgebra verifier") {
    CHECK(verify_coalgebra(qc(2).coalgebra).passed());
    CHECK(verify_coalgebra(dual_coalgebra(qc(2).algebra)).passed());
    CoalgebraData bad = qc(2).coalgebra;
    bad.counit[1] = Scalar(Q, 0);
    CHECK_FALSE(verify_coalgebra(bad).passed());
  }

  TEST_CASE("antipode") {
    CHECK(verify_hopf(qc(2)).passed());
    const HopfAlgebraData c3 = qc(3);
    CHECK(verify_hopf(c3).passed());
    CHECK(c3.S(c3.basis(1)) == c3.basis(2));

    HopfAlgebraData bad = c3;
    bad.antipode = Matrix::identity(Q, 3);
    const CheckReport r = verify_hopf(bad);
    CHECK_FALSE(r.passed());

    CHECK(verify_hopf(trivial_hopf(Q)).passed());
    CHECK(verify_hopf(dual_group_algebra(Q, symmetric_group3())).passed());
    CHECK(verify_hopf(group_algebra(Field::prime(3), symmetric_group3())).passed());
  }

  TEST_CASE("cocommutativity") {
    CHECK(is_cocommutative(qc(2)));
    CHECK(is_cocommutative(qc(3)));
    CHECK(is_cocommutative(group_algebra(Q, symmetric_group3())));
    CHECK_FALSE(is_cocommutative(dual_group_algebra(Q, symmetric_group3())));
    CHECK(is_cocommutative(dual_group_algebra(Q, cyclic_group(3))));
  }

  TEST_CASE("iterated coproduct of group-likes") {
    const HopfAlgebraData h = qc(3);
    const auto terms = h.coproduct(2, 3);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].idx == std::vector<std::size_t>{2, 2, 2});
    CHECK(terms[0].coef.is_one());
  }

  TEST_CASE("integrals") {
    const SubspaceBasis c2 = left_integrals(qc(2));
    CHECK(c2.dim() == 1);
    CHECK(c2.contains(qvec({1, 1})));
    const SubspaceBasis c3 = left_integrals(qc(3));
    CHECK(c3.dim() == 1);
    CHECK(c3.contains(qvec({1, 1, 1})));
    CHECK(right_integrals(qc(3)) == c3);
    const SubspaceBasis k = left_integrals(trivial_hopf(Q));
    CHECK(k.dim() == 1);
    CHECK(k.contains(qvec({1})));
    // In k^G the integral is the delta function at the identity.
    const HopfAlgebraData dual = dual_group_algebra(Q, symmetric_group3());
    const SubspaceBasis di = left_integrals(dual);
    REQUIRE(di.dim() == 1);
    CHECK(di.contains(Vector::unit(Q, 6, symmetric_group3().identity())));
  }

  TEST_CASE("convolution unit and products") {
    const HopfAlgebraData h = qc(2);
    const AlgebraData a = componentwise_algebra(Q, 2);
    const LinMapHom unit = convolution_unit(h.coalgebra, a);
    const LinMapHom g{Matrix(Q, {{1, 5}, {2, -1}})};
    CHECK(convolution(unit, g, h.coalgebra, a) == g);
    CHECK(convolution(g, unit, h.coalgebra, a) == g);

    // Trivial action on k: e(h) = eps(h) 1 is idempotent.
    const AlgebraData k = componentwise_algebra(Q, 1);
    const LinMapHom e{Matrix(Q, {{1, 1}})};
    CHECK(convolution(e, e, h.coalgebra, k) == e);
  }

  TEST_CASE("convolution on a dual coalgebra matches direct contraction") {
    // Hom(k^C2, k^2): (f * g)(d_x) = sum_{yz = x} f(d_y) g(d_z) pointwise.
    const HopfAlgebraData h = dual_group_algebra(Q, cyclic_group(2));
    const AlgebraData a = componentwise_algebra(Q, 2);
    const LinMapHom f{Matrix(Q, {{1, 2}, {3, 4}})};
    const LinMapHom g{Matrix(Q, {{5, 6}, {7, 8}})};
    const LinMapHom fg = convolution(f, g, h.coalgebra, a);
    for (std::size_t r = 0; r < 2; ++r) {
      CHECK(fg.matrix(r, 0) == f.matrix(r, 0) * g.matrix(r, 0) + f.matrix(r, 1) * g.matrix(r, 1));
      CHECK(fg.matrix(r, 1) == f.matrix(r, 0) * g.matrix(r, 1) + f.matrix(r, 1) * g.matrix(r, 0));
    }
  }

  TEST_CASE("convolution inverse") {
    const HopfAlgebraData h = qc(2);
    const AlgebraData k = componentwise_algebra(Q, 1);
    const LinMapHom unit = convolution_unit(h.coalgebra, k);
    CHECK(convolution_inverse(unit, h.coalgebra, k) == unit);
    const auto inv = convolution_inverse(LinMapHom{Matrix(Q, {{1, 3}})}, h.coalgebra, k);
    REQUIRE(inv.has_value());
    CHECK(inv->at(1) == qvec({q(1, 3)}));
    CHECK_FALSE(convolution_inverse(LinMapHom{Matrix(Q, {{1, 0}})}, h.coalgebra, k).has_value());
  }

  TEST_CASE("centrality in the convolution algebra") {
    const HopfAlgebraData h = qc(2);
    const AlgebraData m2 = matrix_algebra(Q, 2);
    CHECK(is_central_in_convolution(convolution_unit(h.coalgebra, m2), h.coalgebra, m2));
    const LinMapHom e11{Matrix(Q, {{1, 1}, {0, 0}, {0, 0}, {0, 0}})};
    CHECK_FALSE(is_central_in_convolution(e11, h.coalgebra, m2));
    const LinMapHom f = elementary_map(1, 2, h.coalgebra, m2);
    CHECK(unflatten(flatten(f), 4, 2) == f);
  }

  TEST_CASE("group tables") {
    CHECK(as_group(qc(2)).has_value());
    const auto g3 = as_group(qc(3));
    REQUIRE(g3.has_value());
    CHECK(g3->order() == 3);
    CHECK_FALSE(as_group(dual_group_algebra(Q, cyclic_group(2))).has_value());

    GroupTable bad = cyclic_group(3);
    bad.table[1][1] = 1;
    CHECK_THROWS_AS(validate_group(bad), Error);
    for (const GroupTable& g : groups_up_to_order6()) CHECK_NOTHROW(validate_group(g));
    CHECK(groups_up_to_order6().size() == 8);
    CHECK(direct_product(cyclic_group(2), cyclic_group(2)).order() == 4);
  }
}
