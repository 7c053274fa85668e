#include "pcross/separability.hpp"

#include "pcross/error.hpp"

namespace pcross {
namespace {

// Coordinates in R (x) H (index k * dim H + m) of x (x) h.
Vector tensor_RH(const Vector& x, const Vector& h) { return kron(x, h); }

Vector apply_rho(const Coaction& co, const Vector& x) { return co.rho.apply(x); }

// sum_pq lift[pq] (x e_p) (x) e_q
Vector left_translate(const CrossedProductAlgebra& cp, const Vector& x, const Vector& lift) {
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  Vector out(f, d * d);
  for (std::size_t p = 0; p < d; ++p) {
    const Vector xp = cp.multiply(x, Vector::unit(f, d, p));
    for (std::size_t q = 0; q < d; ++q) {
      const Scalar& c = lift[p * d + q];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (!xp[k].is_zero()) out[k * d + q] += c * xp[k];
      }
    }
  }
  return out;
}

// sum_pq lift[pq] e_p (x) (e_q x)
Vector right_translate(const CrossedProductAlgebra& cp, const Vector& lift, const Vector& x) {
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  Vector out(f, d * d);
  for (std::size_t q = 0; q < d; ++q) {
    const Vector qx = cp.multiply(Vector::unit(f, d, q), x);
    for (std::size_t p = 0; p < d; ++p) {
      const Scalar& c = lift[p * d + q];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (!qx[k].is_zero()) out[p * d + k] += c * qx[k];
      }
    }
  }
  return out;
}

Vector collapse(const CrossedProductAlgebra& cp, const Vector& lift) {
  const std::size_t d = cp.dim();
  Vector out(cp.basis.field(), d);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      const Scalar& c = lift[p * d + q];
      if (!c.is_zero()) out.axpy(c, cp.algebra.mult.fiber(p, q));
    }
  }
  return out;
}

Vector gamma_at(const LinMapHom& g, const Vector& h) { return g.matrix.apply(h); }

}  // namespace

CleftData make_cleft_data(const CrossedProductAlgebra& cp, LinMapHom gamma, LinMapHom gamma_prime) {
  require_dims(gamma.codomain_dim(), cp.dim(), "gamma codomain");
  require_dims(gamma.domain_dim(), cp.tpa.H.dim(), "gamma domain");
  require_dims(gamma_prime.codomain_dim(), cp.dim(), "gamma' codomain");
  require_dims(gamma_prime.domain_dim(), cp.tpa.H.dim(), "gamma' domain");
  return {cp, comodule_coaction(cp), std::move(gamma), std::move(gamma_prime)};
}

CleftData default_cleft_data(const CrossedProductAlgebra& cp) {
  if (!is_trivial_cocycle(cp.tpa)) {
    throw Error(ErrorCode::PreconditionFailed, "no default gamma for a nontrivial cocycle; supply gamma and gamma'");
  }
  const auto& H = cp.tpa.H;
  const Field& f = cp.basis.field();
  Matrix g(f, cp.dim(), H.dim());
  Matrix gp(f, cp.dim(), H.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    g.set_column(h, cp.element(cp.tpa.A.unit, H.basis(h)));
    gp.set_column(h, cp.element(cp.tpa.A.unit, H.S(H.basis(h))));
  }
  return make_cleft_data(cp, {g}, {gp});
}

CheckReport verify_partially_cleft(const CleftData& cd) {
  if (!cd.coaction.coinvariants_equal_A) {
    throw Error(ErrorCode::CoinvariantsMismatch, "coinvariants of A#H differ from iota_A(A)");
  }
  const auto& cp = cd.cp;
  const auto& H = cp.tpa.H;
  const auto& A = cp.tpa.A;
  const Field& f = cp.basis.field();
  const std::size_t nh = H.dim();
  CheckReport report("partially_cleft");

  CheckReport unit("unit");
  unit.expect_equal("gamma(1_H) = 1", {}, gamma_at(cd.gamma, H.one()), cp.unit());
  report.add(std::move(unit));

  CheckReport colinear("colinearity");
  for (std::size_t h = 0; h < nh; ++h) {
    Vector rhs(f, cp.dim() * nh);
    Vector rhs_prime(f, cp.dim() * nh);
    for (const auto& t : H.coproduct(h, 2)) {
      rhs.axpy(t.coef, tensor_RH(cd.gamma.at(t.idx[0]), H.basis(t.idx[1])));
      // Delta^cop(h) = h2 (x) h1, then gamma' (x) S.
      rhs_prime.axpy(t.coef, tensor_RH(cd.gamma_prime.at(t.idx[1]), H.S(H.basis(t.idx[0]))));
    }
    colinear.expect_equal("rho gamma(h) = gamma(h1) (x) h2", {h}, apply_rho(cd.coaction, cd.gamma.at(h)), rhs);
    colinear.expect_equal("rho gamma'(h) = gamma'(h2) (x) S(h1)", {h}, apply_rho(cd.coaction, cd.gamma_prime.at(h)),
                          rhs_prime);
  }
  report.add(std::move(colinear));

  CheckReport central("central_product");
  // (gamma * gamma')(h) in R.
  std::vector<Vector> gg(nh);
  for (std::size_t h = 0; h < nh; ++h) {
    gg[h] = Vector(f, cp.dim());
    for (const auto& t : H.coproduct(h, 2)) {
      gg[h].axpy(t.coef, cp.multiply(cd.gamma.at(t.idx[0]), cd.gamma_prime.at(t.idx[1])));
    }
  }
  bool in_A = true;
  Matrix values(f, A.dim(), nh);
  for (std::size_t h = 0; h < nh; ++h) {
    const auto c = coords_in(cd.coaction.iota_image, gg[h]);
    ++central.checked;
    if (!c) {
      central.fail("(gamma * gamma')(h) in iota(A)", {h}, gg[h]);
      in_A = false;
      continue;
    }
    // iota_image is an echelon basis of the image; pull back to A coordinates.
    const auto a = solve(cp.embedding, gg[h]);
    values.set_column(h, *a);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      const Vector ia = cp.embedding.column(i);
      central.expect_equal("(gamma * gamma')(h) a = a (gamma * gamma')(h)", {h, i}, cp.multiply(gg[h], ia),
                           cp.multiply(ia, gg[h]));
    }
  }
  if (in_A) {
    // (gamma * gamma') o m as an element of Hom(H (x) H, A).
    Matrix composed(f, A.dim(), nh * nh);
    for (std::size_t h = 0; h < nh; ++h) {
      for (std::size_t l = 0; l < nh; ++l) composed.set_column(h * nh + l, values.apply(H.algebra.mult.fiber(h, l)));
    }
    const LinMapHom m{composed};
    const CoalgebraData HH = tensor_square(H.coalgebra);
    for (std::size_t i = 0; i < HH.dim(); ++i) {
      for (std::size_t j = 0; j < A.dim(); ++j) {
        const LinMapHom e = elementary_map(i, j, HH, A);
        central.expect_equal("((gamma * gamma') o m) * E = E * ((gamma * gamma') o m)", {i, j},
                             flatten(convolution(m, e, HH, A)), flatten(convolution(e, m, HH, A)));
      }
    }
  }
  report.add(std::move(central));
  return report;
}

SubspaceBasis centralizer(const CrossedProductAlgebra& cp) {
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  Matrix sys(f, 0, d);
  for (std::size_t a = 0; a < cp.tpa.A.dim(); ++a) {
    const Vector ia = cp.embedding.column(a);
    sys = sys.vstack(matrix_of(f, d, d, [&](const Vector& x) { return cp.multiply(x, ia) - cp.multiply(ia, x); }));
  }
  return kernel_basis(sys);
}

CheckReport verify_centralizer_identity(const CleftData& cd, const Vector& c) {
  const auto& cp = cd.cp;
  const auto& H = cp.tpa.H;
  const auto& tpa = cp.tpa;
  require_dims(c.size(), cp.dim(), "c length");
  if (!is_cocommutative(H)) throw Error(ErrorCode::NonCocommutative, "H is not cocommutative");
  if (!centralizer(cp).contains(c)) throw Error(ErrorCode::NotInCentralizer, c.to_string());
  const Field& f = cp.basis.field();
  const auto a_of_c = solve(cp.embedding, c);

  CheckReport report("centralizer_identity");
  CheckReport first("first_equals_middle");
  CheckReport second("middle_equals_action");
  if (!a_of_c) {
    second.informational = true;
    second.note = "c is not in iota(A); S(h) . c is not evaluable";
  }
  for (std::size_t h = 0; h < H.dim(); ++h) {
    Vector lhs(f, cp.dim());
    Vector mid(f, cp.dim());
    for (const auto& t : H.coproduct(h, 3)) {
      const Vector s2 = H.S(H.basis(t.idx[1]));
      const Vector unit_part = cp.iota(tpa.e(s2));
      lhs.axpy(t.coef, cp.multiply(cp.multiply(cd.gamma_prime.at(t.idx[0]), c),
                                   cp.multiply(unit_part, cd.gamma.at(t.idx[2]))));
    }
    for (const auto& t : H.coproduct(h, 2)) {
      const Vector gs2 = gamma_at(cd.gamma, H.S(H.basis(t.idx[1])));
      const Vector gps1 = gamma_at(cd.gamma_prime, H.S(H.basis(t.idx[0])));
      mid.axpy(t.coef, cp.multiply(cp.multiply(gs2, c), gps1));
    }
    first.expect_equal("gamma'(h1) c (S(h2) . 1_A) gamma(h3) = gamma(S(h2)) c gamma'(S(h1))", {h}, lhs, mid);
    if (a_of_c) {
      const Vector rhs = cp.iota(tpa.act(H.S(H.basis(h)), *a_of_c));
      second.expect_equal("gamma(S(h2)) c gamma'(S(h1)) = S(h) . c", {h}, mid, rhs);
    }
  }
  report.add(std::move(first));
  report.add(std::move(second));
  return report;
}

BalancedTensorElement balanced_from_lift(const QuotientSpace& q, const Vector& lift) {
  require_dims(lift.size(), q.ambient_dim, "tensor lift length");
  return {q.project(lift), lift};
}

std::optional<Vector> find_normalizing_center(const TwistedPartialAction& tpa, const Vector& t) {
  const auto& A = tpa.A;
  const Field& f = tpa.field();
  const std::size_t n = A.dim();
  Matrix sys = matrix_of(f, n, n, [&](const Vector& c) { return tpa.act(t, c); });
  Vector rhs = A.unit;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ai = A.basis(i);
    sys = sys.vstack(matrix_of(f, n, n, [&](const Vector& c) { return A.multiply(c, ai) - A.multiply(ai, c); }));
  }
  Vector full(f, sys.rows());
  for (std::size_t i = 0; i < n; ++i) full[i] = rhs[i];
  return solve(sys, full);
}

CheckReport check_separable_extension(const CrossedProductAlgebra& cp, const QuotientSpace& balanced,
                                      const BalancedTensorElement& e) {
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  require_dims(e.lift.size(), d * d, "tensor lift length");
  CheckReport report("separable_extension");

  CheckReport lift("lift_consistent");
  lift.expect_equal("projection(lift) = coordinates", {}, balanced.project(e.lift), e.coords);
  report.add(std::move(lift));

  CheckReport one("condition_1");
  for (std::size_t p = 0; p < d; ++p) {
    const Vector x = Vector::unit(f, d, p);
    one.expect_equal("(x (x) 1) e = e (1 (x) x)", {p}, balanced.project(left_translate(cp, x, e.lift)),
                     balanced.project(right_translate(cp, e.lift, x)));
  }
  report.add(std::move(one));

  CheckReport two("condition_2");
  two.expect_equal("m(e) = 1 # 1", {}, collapse(cp, e.lift), cp.unit());
  report.add(std::move(two));

  CheckReport idem("idempotence");
  Vector ee(f, d * d);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      const Scalar& c = e.lift[p * d + q];
      if (c.is_zero()) continue;
      const Vector l = left_translate(cp, Vector::unit(f, d, p), e.lift);
      ee.axpy(c, right_translate(cp, l, Vector::unit(f, d, q)));
    }
  }
  idem.expect_equal("sum (l_i (x) 1) e (1 (x) r_i) = e", {}, balanced.project(ee), balanced.project(e.lift));
  report.add(std::move(idem));
  return report;
}

SeparabilityResult separability_idempotent(const CleftData& cd, const Vector& t, const Vector& c) {
  const auto& cp = cd.cp;
  const auto& tpa = cp.tpa;
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  const Field& f = cp.basis.field();
  require_dims(t.size(), H.dim(), "integral length");
  require_dims(c.size(), A.dim(), "center element length");
  if (!is_cocommutative(H)) throw Error(ErrorCode::NonCocommutative, "H is not cocommutative");
  if (t.is_zero() || !left_integrals(H).contains(t)) {
    throw Error(ErrorCode::NotIntegral, t.to_string() + " is not a nonzero left integral");
  }
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!(A.multiply(c, A.basis(i)) == A.multiply(A.basis(i), c))) {
      throw Error(ErrorCode::NotCentral, c.to_string() + " is not central in A");
    }
  }
  if (!(tpa.act(t, c) == A.unit)) {
    throw Error(ErrorCode::NormalizationFailed, "t . c = " + tpa.act(t, c).to_string() + " differs from 1_A");
  }
  const CheckReport cleft = verify_partially_cleft(cd);
  if (!cleft.passed()) throw Error(ErrorCode::PreconditionFailed, "cleft data fails:\n" + cleft.summary());

  const std::size_t d = cp.dim();
  const Vector u = H.S(t);
  const Vector ic = cp.iota(c);
  Vector e_lift(f, d * d);
  Vector f_lift(f, d * d);
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (const auto& x : H.coproduct(i, 3)) {
      const Vector unit_part = cp.iota(tpa.e(H.S(H.basis(x.idx[1]))));
      const Vector left = cp.multiply(cp.multiply(cd.gamma_prime.at(x.idx[0]), ic), unit_part);
      e_lift.axpy(u[i] * x.coef, kron(left, cd.gamma.at(x.idx[2])));
    }
    for (const auto& x : H.coproduct(i, 2)) {
      f_lift.axpy(u[i] * x.coef, kron(cd.gamma_prime.at(x.idx[0]), cd.gamma.at(x.idx[1])));
    }
  }

  SeparabilityResult out;
  out.balanced = balanced_tensor_square(cp);
  out.e = balanced_from_lift(out.balanced, e_lift);
  out.f = balanced_from_lift(out.balanced, f_lift);
  out.report = check_separable_extension(cp, out.balanced, out.e);
  out.report.name = "separability";

  CheckReport f_check("intermediate_condition_1");
  for (std::size_t p = 0; p < d; ++p) {
    const Vector x = Vector::unit(f, d, p);
    f_check.expect_equal("(x (x) 1) f = f (1 (x) x)", {p}, out.balanced.project(left_translate(cp, x, f_lift)),
                         out.balanced.project(right_translate(cp, f_lift, x)));
  }
  out.report.add(std::move(f_check));

  const CanonicalMap can = canonical_map(cp);
  out.can_rank = can.rank;
  out.can_bijective = can.bijective;
  CheckReport galois("canonical_map");
  ++galois.checked;
  if (!can.bijective) {
    galois.fail("can bijective", {can.rank, d * H.dim()}, Vector(f, {static_cast<long>(can.rank)}),
                Vector(f, {static_cast<long>(d * H.dim())}));
  }
  out.report.add(std::move(galois));
  return out;
}

}  // namespace pcross
