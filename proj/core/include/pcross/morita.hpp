#pragma once

#include "pcross/crossed_product.hpp"
#include "pcross/globalization.hpp"

namespace pcross {

/// R = A#H, S = B#_u H, Phi: R -> S, and the bimodules M, N inside S
/// (S coordinates b * dim(H) + h).
struct MoritaContext {
  EnvelopingActionData env;
  CrossedProductAlgebra R;
  GlobalCrossedProduct S;
  Matrix phi;               // dim S x dim R
  SubspaceBasis phi_image;  // Phi(R) inside S
  SubspaceBasis M;
  SubspaceBasis N;
};

struct PhiEmbedding {
  Matrix phi;
  CheckReport report;  // multiplicative, injective
};

/// a # h -> theta(a) (x) h on the computed basis of R.
PhiEmbedding phi_embed(const EnvelopingActionData& env, const CrossedProductAlgebra& R);
/// M = Phi(A (x) H) = theta(A) (x) H.
SubspaceBasis build_M(const EnvelopingActionData& env);
/// N = span{(h1 |> theta(a)) (x) h2}.
SubspaceBasis build_N(const EnvelopingActionData& env);
/// Builds both crossed products, Phi, M and N. Requires a passing enveloping action.
MoritaContext build_morita_context(const EnvelopingActionData& env);

/// M S in M, S N in N, Phi(R) M in M, N Phi(R) in N, with associativity
/// and unit of each action.
CheckReport verify_module_structures(const MoritaContext& ctx);

struct MoritaPairings {
  CheckReport report;  // balanced, tau_image, mixed_associativity; strictness is informational
  std::size_t sigma_rank = 0;
  std::size_t tau_rank = 0;
  bool sigma_surjective = false;
  bool tau_surjective = false;
};
/// sigma(n (x) m) = n m and tau(m (x) n) = m n, both multiplication in S.
MoritaPairings verify_morita_pairings(const MoritaContext& ctx);

}  // namespace pcross
