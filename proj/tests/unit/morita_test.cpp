#include "doctest.h"
#include "helpers.hpp"
#include "pcross/fixtures.hpp"
#include "pcross/morita.hpp"

using namespace pcross;
using testing::sub_passed;

namespace {

const Field Q = Field::rational();

// Generators (h |> theta(a)) (x) h of N for group-like bases, S index b * dim H + h.
SubspaceBasis n_by_hand(const EnvelopingActionData& env) {
  const std::size_t nh = env.global.H.dim();
  std::vector<Vector> gens;
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < env.theta.cols(); ++a)
      gens.push_back(kron(env.global.act(h, env.theta.column(a)), Vector::unit(Q, nh, h)));
  return span(Q, env.global.B.dim() * nh, gens);
}

}  // namespace

TEST_SUITE("morita") {
  TEST_CASE("F_C3 context") {
    const EnvelopingActionData env = globalize_group_partial(fixtures::c3_partial());
    const MoritaContext ctx = build_morita_context(env);
    CHECK(ctx.R.dim() == 4);
    CHECK(ctx.S.dim() == 9);

    const PhiEmbedding phi = phi_embed(env, ctx.R);
    CHECK(phi.report.passed());
    CHECK(rank(phi.phi) == 4);
    CHECK(ctx.phi_image.dim() == 4);

    // M = theta(A) (x) H, which strictly contains Phi(R).
    CHECK(ctx.M.dim() == 6);
    CHECK(ctx.M.contains(ctx.phi_image));
    CHECK(ctx.N == n_by_hand(env));

    const CheckReport mods = verify_module_structures(ctx);
    for (const char* s : {"M_right_S", "N_left_S", "M_left_R", "N_right_R"}) CHECK_MESSAGE(sub_passed(mods, s), s);

    const MoritaPairings p = verify_morita_pairings(ctx);
    CHECK(p.report.passed());
    CHECK(p.sigma_surjective);
    CHECK(p.tau_surjective);
    CHECK(p.sigma_rank == 9);
    CHECK(p.tau_rank == 4);
  }

  TEST_CASE("shipped enveloping fixture gives the same context") {
    const MoritaContext ctx = build_morita_context(fixtures::c3_enveloping());
    CHECK(ctx.M.dim() == 6);
    CHECK(verify_module_structures(ctx).passed());
    CHECK(verify_morita_pairings(ctx).report.passed());
  }

  TEST_CASE("degenerate swap context") {
    const EnvelopingActionData env = fixtures::swap_enveloping();
    const MoritaContext ctx = build_morita_context(env);
    CHECK(ctx.M.dim() == 2);
    CHECK(ctx.N == n_by_hand(env));
    CHECK(verify_module_structures(ctx).passed());
    const MoritaPairings p = verify_morita_pairings(ctx);
    CHECK(sub_passed(p.report, "balanced"));
    CHECK(sub_passed(p.report, "mixed_associativity"));
    // k is Morita equivalent to k^2 # kC2 = M_2(k), so sigma does reach all of S.
    CHECK(p.sigma_rank == 4);
  }

  TEST_CASE("identity enveloping action") {
    const GlobalTwistedAction g = fixtures::c3_shift();
    const EnvelopingActionData env{g.as_partial(), g, Matrix::identity(Q, 3)};
    const MoritaContext ctx = build_morita_context(env);
    const PhiEmbedding phi = phi_embed(env, ctx.R);
    CHECK(phi.report.passed());
    CHECK(rank(phi.phi) == 9);
    CHECK(ctx.M.dim() == 9);
    CHECK(ctx.N.dim() == 9);
    CHECK(verify_module_structures(ctx).passed());
    const MoritaPairings p = verify_morita_pairings(ctx);
    CHECK(p.report.passed());
    CHECK(p.sigma_surjective);
    CHECK(p.tau_surjective);
  }

  TEST_CASE("non-ideal M breaks right S closure") {
    MoritaContext ctx = build_morita_context(globalize_group_partial(fixtures::c3_partial()));
    const std::vector<Vector> one{ctx.M[0]};
    ctx.M = span(Q, ctx.S.dim(), one);
    const CheckReport r = verify_module_structures(ctx);
    CHECK_FALSE(sub_passed(r, "M_right_S"));
  }

  TEST_CASE("corrupted theta breaks Phi") {
    EnvelopingActionData env = globalize_group_partial(fixtures::c3_partial());
    const CrossedProductAlgebra R = build_partial_crossed(env.tpa);
    env.theta(0, 0) += Scalar(Q, 1);
    CHECK_FALSE(phi_embed(env, R).report.passed());
  }
}
