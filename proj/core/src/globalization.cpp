#include "pcross/globalization.hpp"

#include "pcross/error.hpp"

namespace pcross {
namespace {

// w_u(g, h) = (g1 |> t1) u(g2, h1) (g3 h2 |> t1) with t1 = theta(1_A).
Vector induced_twist(const GlobalTwistedAction& g, const Vector& t1, std::size_t h, std::size_t l) {
  const auto& H = g.H;
  Vector w = g.B.zero();
  for (const auto& x : H.coproduct(h, 3)) {
    for (const auto& y : H.coproduct(l, 2)) {
      const Vector left = g.B.multiply(t1, g.act(x.idx[0], t1));
      const Vector mid = g.u(H.basis(x.idx[1]), H.basis(y.idx[0]));
      const Vector right = g.B.multiply(t1, g.act(H.algebra.mult.fiber(x.idx[2], y.idx[1]), t1));
      w.axpy(x.coef * y.coef, g.B.multiply(left, mid, right));
    }
  }
  return w;
}

}  // namespace

CheckReport verify_enveloping(const EnvelopingActionData& e) {
  const auto& A = e.tpa.A;
  const auto& B = e.global.B;
  const auto& H = e.global.H;
  require_dims(e.theta.rows(), B.dim(), "theta rows (B)");
  require_dims(e.theta.cols(), A.dim(), "theta cols (A)");
  require_dims(e.tpa.H.dim(), H.dim(), "H of partial and global actions");
  const Field& f = B.field();
  const auto theta = [&](const Vector& a) { return e.theta.apply(a); };

  CheckReport report("enveloping_action");
  CheckReport global = verify_global(e.global);
  global.name = "global";
  report.add(std::move(global));
  CheckReport partial = verify_twisted_partial(e.tpa);
  partial.name = "partial";
  report.add(std::move(partial));

  CheckReport mono("monomorphism");
  const std::size_t r = rank(e.theta);
  if (r != A.dim()) {
    mono.fail("theta injective", {r, A.dim()}, Vector(f, {static_cast<long>(r)}),
              Vector(f, {static_cast<long>(A.dim())}));
  }
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      mono.expect_equal("theta(a b) = theta(a) theta(b)", {i, j}, theta(A.mult.fiber(i, j)),
                        B.multiply(e.theta.column(i), e.theta.column(j)));
    }
  }
  report.add(std::move(mono));

  CheckReport ideal("ideal");
  const SubspaceBasis img = image(e.theta);
  for (std::size_t b = 0; b < B.dim(); ++b) {
    for (std::size_t a = 0; a < A.dim(); ++a) {
      const Vector left = B.multiply(B.basis(b), e.theta.column(a));
      const Vector right = B.multiply(e.theta.column(a), B.basis(b));
      if (!img.contains(left)) ideal.fail("b theta(a) in theta(A)", {b, a}, left);
      if (!img.contains(right)) ideal.fail("theta(a) b in theta(A)", {b, a}, right);
      ++ideal.checked;
    }
  }
  report.add(std::move(ideal));

  CheckReport equiv("equivalence");
  const Vector t1 = theta(A.unit);
  equiv.expect_equal("theta(1_A)^2 = theta(1_A)", {}, B.multiply(t1, t1), t1);
  for (std::size_t b = 0; b < B.dim(); ++b) {
    equiv.expect_equal("theta(1_A) b = b theta(1_A)", {b}, B.multiply(t1, B.basis(b)), B.multiply(B.basis(b), t1));
  }
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t a = 0; a < A.dim(); ++a) {
      equiv.expect_equal("theta(h . a) = theta(1_A)(h |> theta(a))", {h, a}, theta(e.tpa.act(h, A.basis(a))),
                         B.multiply(t1, e.global.act(h, e.theta.column(a))));
    }
  }
  report.add(std::move(equiv));

  CheckReport admissible("admissible");
  std::vector<Vector> gens;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t a = 0; a < A.dim(); ++a) gens.push_back(e.global.act(h, e.theta.column(a)));
  }
  const SubspaceBasis hA = span(f, B.dim(), gens);
  ++admissible.checked;
  if (hA.dim() != B.dim()) {
    admissible.fail("B = H |> theta(A)", {hA.dim(), B.dim()}, Vector(f, {static_cast<long>(hA.dim())}),
                    Vector(f, {static_cast<long>(B.dim())}));
  }
  report.add(std::move(admissible));

  CheckReport compat("cocycle_compatibility");
  CheckReport literal("cocycle_compatibility_literal");
  literal.informational = true;
  literal.note = "theta(a w(g,h)) = theta(a) u(g,h) read verbatim";
  for (std::size_t g = 0; g < H.dim(); ++g) {
    for (std::size_t h = 0; h < H.dim(); ++h) {
      const Vector wu = induced_twist(e.global, t1, g, h);
      const Vector u = e.global.u(H.basis(g), H.basis(h));
      for (std::size_t a = 0; a < A.dim(); ++a) {
        const Vector ta = e.theta.column(a);
        const Vector aw = theta(A.multiply(A.basis(a), e.tpa.omega(g, h)));
        const Vector wa = theta(A.multiply(e.tpa.omega(g, h), A.basis(a)));
        compat.expect_equal("theta(a w(g, h)) = theta(a) w_u(g, h)", {g, h, a}, aw, B.multiply(ta, wu));
        compat.expect_equal("theta(w(g, h) a) = w_u(g, h) theta(a)", {g, h, a}, wa, B.multiply(wu, ta));
        literal.expect_equal("theta(a w(g, h)) = theta(a) u(g, h)", {g, h, a}, aw, B.multiply(ta, u));
        literal.expect_equal("theta(w(g, h) a) = u(g, h) theta(a)", {g, h, a}, wa, B.multiply(u, ta));
      }
    }
  }
  report.add(std::move(compat));
  report.add(std::move(literal));
  return report;
}

CheckReport verify_partial_equivalence(const TwistedPartialAction& from, const TwistedPartialAction& to,
                                       const Matrix& phi) {
  require_dims(phi.cols(), from.A.dim(), "phi cols");
  require_dims(phi.rows(), to.A.dim(), "phi rows");
  require_dims(from.H.dim(), to.H.dim(), "H dims");
  const Field& f = phi.field();
  CheckReport r("partial_equivalence");
  const std::size_t rk = rank(phi);
  ++r.checked;
  if (rk != from.A.dim() || rk != to.A.dim()) {
    r.fail("phi bijective", {rk}, Vector(f, {static_cast<long>(rk)}),
           Vector(f, {static_cast<long>(to.A.dim())}));
  }
  r.expect_equal("phi(1_A) = 1_A'", {}, phi.apply(from.A.unit), to.A.unit);
  for (std::size_t i = 0; i < from.A.dim(); ++i) {
    for (std::size_t j = 0; j < from.A.dim(); ++j) {
      r.expect_equal("phi(a b) = phi(a) phi(b)", {i, j}, phi.apply(from.A.mult.fiber(i, j)),
                     to.A.multiply(phi.column(i), phi.column(j)));
    }
  }
  for (std::size_t h = 0; h < from.H.dim(); ++h) {
    for (std::size_t a = 0; a < from.A.dim(); ++a) {
      r.expect_equal("phi(h . a) = h . phi(a)", {h, a}, phi.apply(from.act(h, from.A.basis(a))),
                     to.act(h, phi.column(a)));
    }
    for (std::size_t l = 0; l < from.H.dim(); ++l) {
      r.expect_equal("phi(w(h, l)) = w'(h, l)", {h, l}, phi.apply(from.omega(h, l)), to.omega(h, l));
    }
  }
  return r;
}

EnvelopingActionData globalize_group_partial(const TwistedPartialAction& tpa) {
  const auto group = as_group(tpa.H);
  if (!group) throw Error(ErrorCode::NonGroup, "globalization needs a group algebra kG");
  if (!is_trivial_cocycle(tpa)) throw Error(ErrorCode::PreconditionFailed, "cocycle is not trivial");
  if (!verify_partial_module_algebra(tpa.H, tpa.A, tpa.action).passed()) {
    throw Error(ErrorCode::PreconditionFailed, "not a partial module algebra");
  }
  const auto& A = tpa.A;
  const Field& f = A.field();
  const std::size_t na = A.dim();
  const std::size_t ng = group->order();

  for (std::size_t g = 0; g < ng; ++g) {
    const Vector eg = tpa.e(g);
    try {
      // The zero idempotent (an empty domain) is allowed.
      if (!eg.is_zero()) (void)central_idempotent(A, eg);
    } catch (const Error& err) {
      throw Error(ErrorCode::PreconditionFailed, "g . 1_A is not a central idempotent for g = " +
                                                     std::to_string(g) + ": " + err.what());
    }
    std::vector<Vector> acted;
    std::vector<Vector> ideal;
    for (std::size_t a = 0; a < na; ++a) {
      acted.push_back(tpa.act(g, A.basis(a)));
      ideal.push_back(A.multiply(eg, A.basis(a)));
    }
    if (!(span(f, na, acted) == span(f, na, ideal))) {
      throw Error(ErrorCode::PreconditionFailed, "image of a -> g . a is not (g . 1_A) A for g = " + std::to_string(g));
    }
  }

  // F(G, A): coordinate x * na + a.
  const std::size_t nf = ng * na;
  const auto fmul = [&](const Vector& p, const Vector& q) {
    Vector out(f, nf);
    for (std::size_t x = 0; x < ng; ++x) {
      Vector px(f, na), qx(f, na);
      for (std::size_t a = 0; a < na; ++a) {
        px[a] = p[x * na + a];
        qx[a] = q[x * na + a];
      }
      const Vector r = A.multiply(px, qx);
      for (std::size_t a = 0; a < na; ++a) out[x * na + a] = r[a];
    }
    return out;
  };
  const auto shift = [&](std::size_t h, const Vector& p) {
    Vector out(f, nf);
    for (std::size_t x = 0; x < ng; ++x) {
      const std::size_t xh = group->table[x][h];
      for (std::size_t a = 0; a < na; ++a) out[x * na + a] = p[xh * na + a];
    }
    return out;
  };
  const auto theta_f = [&](const Vector& a) {
    Vector out(f, nf);
    for (std::size_t x = 0; x < ng; ++x) {
      const Vector xa = tpa.act(x, a);
      for (std::size_t k = 0; k < na; ++k) out[x * na + k] = xa[k];
    }
    return out;
  };

  std::vector<Vector> gens;
  for (std::size_t h = 0; h < ng; ++h) {
    for (std::size_t a = 0; a < na; ++a) gens.push_back(shift(h, theta_f(A.basis(a))));
  }
  const SubspaceBasis Bsub = span(f, nf, gens);
  const std::size_t nb = Bsub.dim();
  const auto to_B = [&](const Vector& p, const char* what) {
    const auto c = coords_in(Bsub, p);
    if (!c) throw Error(ErrorCode::ClosureViolation, what);
    return *c;
  };

  EnvelopingActionData env;
  env.tpa = tpa;
  AlgebraData& B = env.global.B;
  B.mult = Tensor3(f, nb, nb, nb);
  B.unit = Vector(f, nb);  // placeholder so dim() is right until the unit is solved for
  for (std::size_t i = 0; i < nb; ++i) {
    B.labels.push_back("b" + std::to_string(i + 1));
    for (std::size_t j = 0; j < nb; ++j) B.mult.set_fiber(i, j, to_B(fmul(Bsub[i], Bsub[j]), "B is not a subalgebra"));
  }
  // Unit of B: solve b x_i = x_i = x_i b in B coordinates.
  Matrix sys(f, 0, nb);
  Vector rhs(f, 0);
  {
    std::vector<Vector> rows;
    std::vector<Scalar> vals;
    for (std::size_t i = 0; i < nb; ++i) {
      const Vector xi = Vector::unit(f, nb, i);
      const Matrix left = B.right_mult(xi);   // b -> b x_i
      const Matrix right = B.left_mult(xi);   // b -> x_i b
      for (std::size_t k = 0; k < nb; ++k) {
        rows.push_back(left.row(k));
        vals.push_back(xi[k]);
        rows.push_back(right.row(k));
        vals.push_back(xi[k]);
      }
    }
    sys = Matrix::from_rows(f, nb, rows);
    rhs = Vector(f, std::move(vals));
  }
  const auto unit = solve(sys, rhs);
  if (!unit) throw Error(ErrorCode::PreconditionFailed, "span{h |> theta(a)} has no unit");
  B.unit = *unit;

  GlobalTwistedAction& g = env.global;
  g.H = tpa.H;
  g.action = Tensor3(f, ng, nb, nb);
  for (std::size_t h = 0; h < ng; ++h) {
    for (std::size_t b = 0; b < nb; ++b) g.action.set_fiber(h, b, to_B(shift(h, Bsub[b]), "B is not H-stable"));
  }
  g.twist = Tensor3(f, ng, ng, nb);
  for (std::size_t h = 0; h < ng; ++h) {
    for (std::size_t l = 0; l < ng; ++l) g.twist.set_fiber(h, l, B.unit);
  }
  env.theta = Matrix(f, nb, na);
  for (std::size_t a = 0; a < na; ++a) env.theta.set_column(a, to_B(theta_f(A.basis(a)), "theta(A) outside B"));

  const CheckReport check = verify_enveloping(env);
  if (!check.passed()) {
    throw Error(ErrorCode::PreconditionFailed, "constructed globalization fails verification:\n" + check.summary());
  }
  return env;
}

CheckReport verify_globalization_round_trip(const EnvelopingActionData& e) {
  const InducedPartialAction induced = induce_partial(e.global, e.theta.apply(e.tpa.A.unit));
  CheckReport r = verify_partial_equivalence(e.tpa, induced.tpa, induced.idempotent.projection * e.theta);
  r.name = "globalization_round_trip";
  return r;
}

}  // namespace pcross
