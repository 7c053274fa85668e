#include "pcross/fixtures.hpp"

namespace pcross::fixtures {
namespace {

// w(h, l) = h . (l . 1_A), the trivial cocycle for group algebras.
Tensor3 trivial_cocycle(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action) {
  Tensor3 w(A.field(), H.dim(), H.dim(), A.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t l = 0; l < H.dim(); ++l) {
      w.set_fiber(h, l, action.apply(H.basis(h), action.apply(H.basis(l), A.unit)));
    }
  }
  return w;
}

Tensor3 identity_action(const HopfAlgebraData& H, const AlgebraData& A) {
  Tensor3 t(A.field(), H.dim(), A.dim(), A.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t a = 0; a < A.dim(); ++a) t.set_fiber(h, a, H.coalgebra.counit[h] * A.basis(a));
  }
  return t;
}

Tensor3 unit_twist(const HopfAlgebraData& H, const AlgebraData& B) {
  Tensor3 u(B.field(), H.dim(), H.dim(), B.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t l = 0; l < H.dim(); ++l) {
      u.set_fiber(h, l, (H.coalgebra.counit[h] * H.coalgebra.counit[l]) * B.unit);
    }
  }
  return u;
}

// Action of kC_n on k^k by g^s |> e_i = e_{perm^s(i)}.
Tensor3 permutation_action(const HopfAlgebraData& H, const AlgebraData& B, const std::vector<std::size_t>& perm) {
  Tensor3 t(B.field(), H.dim(), B.dim(), B.dim());
  for (std::size_t i = 0; i < B.dim(); ++i) {
    std::size_t j = i;
    for (std::size_t s = 0; s < H.dim(); ++s) {
      t(s, i, j) = Scalar::one(B.field());
      j = perm[j];
    }
  }
  return t;
}

}  // namespace

HopfAlgebraData cyclic(const Field& f, std::size_t n) { return group_algebra(f, cyclic_group(n)); }

TwistedPartialAction c3_partial(const Field& f) {
  const HopfAlgebraData H = cyclic(f, 3);
  const AlgebraData A = componentwise_algebra(f, 2);
  Tensor3 act(f, 3, 2, 2);
  const Scalar one = Scalar::one(f);
  act(0, 0, 0) = one;
  act(0, 1, 1) = one;
  act(1, 0, 1) = one;  // g.e1 = e2
  act(2, 1, 0) = one;  // g^2.e2 = e1
  return {H, A, act, trivial_cocycle(H, A, act)};
}

TwistedPartialAction cocycle_c2(const Field& f, const Scalar& lambda) {
  const HopfAlgebraData H = cyclic(f, 2);
  const AlgebraData A = componentwise_algebra(f, 1);
  Tensor3 w(f, 2, 2, 1);
  w(0, 0, 0) = w(0, 1, 0) = w(1, 0, 0) = Scalar::one(f);
  w(1, 1, 0) = lambda;
  return {H, A, identity_action(H, A), w};
}

TwistedPartialAction cocycle_c2(long lambda) {
  const Field q = Field::rational();
  return cocycle_c2(q, Scalar(q, lambda));
}

TwistedPartialAction degenerate_swap(const Field& f) {
  const HopfAlgebraData H = cyclic(f, 2);
  const AlgebraData A = componentwise_algebra(f, 1);
  Tensor3 act(f, 2, 1, 1);
  act(0, 0, 0) = Scalar::one(f);
  return {H, A, act, trivial_cocycle(H, A, act)};
}

TwistedPartialAction trivial_hopf_action(const Field& f) {
  const HopfAlgebraData H = trivial_hopf(f);
  const AlgebraData A = componentwise_algebra(f, 2);
  const Tensor3 act = identity_action(H, A);
  return {H, A, act, trivial_cocycle(H, A, act)};
}

TwistedPartialAction triangular_corner(const Field& f) {
  const HopfAlgebraData H = cyclic(f, 2);
  const AlgebraData A = upper_triangular2(f);
  Tensor3 act(f, 2, 3, 3);
  const Scalar one = Scalar::one(f);
  for (std::size_t a = 0; a < 3; ++a) act(0, a, a) = one;
  act(1, 0, 0) = one;  // E11 a E11 keeps only the E11 entry
  return {H, A, act, trivial_cocycle(H, A, act)};
}

GlobalTwistedAction c3_shift(const Field& f) {
  const HopfAlgebraData H = cyclic(f, 3);
  const AlgebraData B = componentwise_algebra(f, 3);
  return {H, B, permutation_action(H, B, {1, 2, 0}), unit_twist(H, B)};
}

GlobalTwistedAction c2_swap(const Field& f) {
  const HopfAlgebraData H = cyclic(f, 2);
  const AlgebraData B = componentwise_algebra(f, 2);
  return {H, B, permutation_action(H, B, {1, 0}), unit_twist(H, B)};
}

GlobalTwistedAction c2_twisted_scalar(const Field& f, const Scalar& lambda) {
  const TwistedPartialAction t = cocycle_c2(f, lambda);
  return {t.H, t.A, t.action, t.cocycle};
}

GlobalTwistedAction trivial_global(const HopfAlgebraData& H, const AlgebraData& B) {
  return {H, B, identity_action(H, B), unit_twist(H, B)};
}

EnvelopingActionData c3_enveloping(const Field& f) {
  Matrix theta(f, 3, 2);
  theta(0, 0) = theta(1, 1) = Scalar::one(f);
  return {c3_partial(f), c3_shift(f), theta};
}

EnvelopingActionData swap_enveloping(const Field& f) {
  Matrix theta(f, 2, 1);
  theta(0, 0) = Scalar::one(f);
  return {degenerate_swap(f), c2_swap(f), theta};
}

std::vector<std::pair<std::string, TwistedPartialAction>> shipped() {
  return {{"c3", c3_partial()},
          {"coc1", cocycle_c2(1)},
          {"coc2", cocycle_c2(2)},
          {"degenerate_swap", degenerate_swap()},
          {"trivial_hopf", trivial_hopf_action()}};
}

GaugeCase random_gauge_case(std::mt19937_64& rng) {
  const Field q = Field::rational();
  std::uniform_int_distribution<int> order(2, 3);
  const std::size_t n = static_cast<std::size_t>(order(rng));
  const HopfAlgebraData H = cyclic(q, n);

  // Permutation action of C_n on k^k (k <= 3): a random cyclic relabelling
  // when k = n, trivial otherwise.
  std::uniform_int_distribution<int> kdist(1, 3);
  const std::size_t k = static_cast<std::size_t>(kdist(rng));
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = (k == n) ? (i + 1) % k : i;
  const AlgebraData B = componentwise_algebra(q, k);
  const GlobalTwistedAction g{H, B, permutation_action(H, B, perm), unit_twist(H, B)};

  // Nonempty coordinate idempotent.
  Vector one_A(q, k);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < k; ++i) one_A[i] = Scalar(q, coin(rng) ? 1L : 0L);
  if (one_A.is_zero()) one_A[rng() % k] = Scalar::one(q);

  GaugeCase out{induce_partial(g, one_A).tpa, {}, false};
  auto& tpa = out.tpa;
  const std::size_t m = tpa.A.dim();
  std::uniform_int_distribution<long> num(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  const auto random_unit = [&]() {
    const long v = num(rng) * (sign(rng) ? 1 : -1);
    return Scalar(q, mpq_class(v, num(rng)));
  };

  // Rescale w(h, l) for h, l != 1 coordinatewise on its support.
  out.cocycle_rescaled = coin(rng);
  if (out.cocycle_rescaled) {
    for (std::size_t h = 1; h < n; ++h) {
      for (std::size_t l = 1; l < n; ++l) {
        for (std::size_t a = 0; a < m; ++a) {
          if (!tpa.cocycle(h, l, a).is_zero()) tpa.cocycle(h, l, a) *= random_unit();
        }
      }
    }
  }

  Matrix v(q, m, n);
  for (std::size_t h = 0; h < n; ++h) {
    const Vector e = tpa.e(h);
    Vector vh(q, m);
    for (std::size_t a = 0; a < m; ++a) {
      if (!e[a].is_zero()) vh[a] = h == 0 ? e[a] : e[a] * random_unit();
    }
    v.set_column(h, vh);
  }
  out.v = LinMapHom{v};
  return out;
}

}  // namespace pcross::fixtures
