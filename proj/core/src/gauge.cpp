#include "pcross/gauge.hpp"

#include "pcross/error.hpp"

namespace pcross {
namespace {

Vector at(const LinMapHom& f, const Vector& h) { return f.matrix.apply(h); }

// Matrix of x -> flatten(fn(x)) for fn: Hom(H, A) -> Hom(H, A).
template <class Fn>
Matrix hom_operator(const Field& f, std::size_t na, std::size_t nh, Fn&& fn) {
  return matrix_of(f, na * nh, na * nh, [&](const Vector& x) { return flatten(fn(unflatten(x, na, nh))); });
}

// x -> ((h1 . 1_A) x(h2)) or (x(h1)(h2 . 1_A)) as a map on Hom(H, A).
LinMapHom absorb(const TwistedPartialAction& tpa, const LinMapHom& x, bool left) {
  const auto& H = tpa.H;
  Matrix out(tpa.field(), tpa.A.dim(), H.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    Vector col = tpa.A.zero();
    for (const auto& t : H.coproduct(h, 2)) {
      col.axpy(t.coef, left ? tpa.A.multiply(tpa.e(t.idx[0]), x.at(t.idx[1]))
                            : tpa.A.multiply(x.at(t.idx[0]), tpa.e(t.idx[1])));
    }
    out.set_column(h, col);
  }
  return {out};
}

}  // namespace

std::optional<GaugePair> weak_conv_inverse(const LinMapHom& v, const TwistedPartialAction& tpa) {
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  const Field& f = tpa.field();
  const std::size_t na = A.dim();
  const std::size_t nh = H.dim();
  require_dims(v.codomain_dim(), na, "gauge codomain");
  require_dims(v.domain_dim(), nh, "gauge domain");
  if (!(at(v, H.one()) == A.unit)) throw Error(ErrorCode::PreconditionFailed, "v(1_H) differs from 1_A");

  const LinMapHom e = e_map(tpa).e;
  const std::size_t unknowns = na * nh;
  Matrix sys = hom_operator(f, na, nh, [&](const LinMapHom& x) { return convolution(x, v, H.coalgebra, A); });
  sys = sys.vstack(hom_operator(f, na, nh, [&](const LinMapHom& x) { return convolution(v, x, H.coalgebra, A); }));
  sys = sys.vstack(hom_operator(f, na, nh, [&](const LinMapHom& x) {
    return LinMapHom{absorb(tpa, x, false).matrix - x.matrix};
  }));
  sys = sys.vstack(hom_operator(f, na, nh, [&](const LinMapHom& x) {
    return LinMapHom{absorb(tpa, x, true).matrix - x.matrix};
  }));
  // x(1_H) = 1_A
  Matrix unit_rows(f, na, unknowns);
  const Vector one = H.one();
  for (std::size_t r = 0; r < na; ++r) {
    for (std::size_t h = 0; h < nh; ++h) unit_rows(r, r * nh + h) = one[h];
  }
  sys = sys.vstack(unit_rows);

  const Vector fe = flatten(e);
  Vector rhs(f, 4 * unknowns + na);
  for (std::size_t i = 0; i < unknowns; ++i) {
    rhs[i] = fe[i];
    rhs[unknowns + i] = fe[i];
  }
  for (std::size_t r = 0; r < na; ++r) rhs[4 * unknowns + r] = A.unit[r];
  const auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  GaugePair g{v, unflatten(*sol, na, nh), false};
  g.fully_invertible = convolution_inverse(v, H.coalgebra, A).has_value();
  return g;
}

GaugePair identity_gauge(const TwistedPartialAction& tpa) {
  const LinMapHom u = convolution_unit(tpa.H.coalgebra, tpa.A);
  return {u, u, true};
}

Tensor3 gauge_cocycle(const TwistedPartialAction& tpa, const GaugePair& g) {
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  Tensor3 out(tpa.field(), H.dim(), H.dim(), A.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const auto dh = H.coproduct(h, 4);
    for (std::size_t l = 0; l < H.dim(); ++l) {
      const auto dl = H.coproduct(l, 3);
      Vector w = A.zero();
      for (const auto& x : dh) {
        const Vector vh = g.v.at(x.idx[0]);
        for (const auto& y : dl) {
          const Vector first = A.multiply(vh, tpa.act(x.idx[1], g.v.at(y.idx[0])));
          const Vector second = A.multiply(first, tpa.omega(x.idx[2], y.idx[1]));
          const Vector last = at(g.v_inv, H.algebra.mult.fiber(x.idx[3], y.idx[2]));
          w.axpy(x.coef * y.coef, A.multiply(second, last));
        }
      }
      out.set_fiber(h, l, w);
    }
  }
  return out;
}

Tensor3 gauge_action(const TwistedPartialAction& tpa, const GaugePair& g) {
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  Tensor3 out(tpa.field(), H.dim(), A.dim(), A.dim());
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const auto dh = H.coproduct(h, 3);
    for (std::size_t a = 0; a < A.dim(); ++a) {
      Vector r = A.zero();
      for (const auto& x : dh) {
        r.axpy(x.coef, A.multiply(g.v.at(x.idx[0]), tpa.act(x.idx[1], A.basis(a)), g.v_inv.at(x.idx[2])));
      }
      out.set_fiber(h, a, r);
    }
  }
  return out;
}

TwistedPartialAction gauged(const TwistedPartialAction& tpa, const GaugePair& g) {
  return {tpa.H, tpa.A, gauge_action(tpa, g), gauge_cocycle(tpa, g)};
}

std::optional<GaugePair> compose_gauges(const TwistedPartialAction& tpa, const GaugePair& v, const GaugePair& u) {
  const LinMapHom vu = convolution(v.v, u.v, tpa.H.coalgebra, tpa.A);
  return weak_conv_inverse(vu, tpa);
}

CheckReport verify_gauge_composition(const TwistedPartialAction& tpa, const GaugePair& v, const GaugePair& u) {
  const auto composite = compose_gauges(tpa, v, u);
  if (!composite) throw Error(ErrorCode::CompositeNotGauge, "vu has no weak convolution inverse");
  const TwistedPartialAction once = gauged(tpa, u);
  const TwistedPartialAction twice = gauged(once, v);
  const Tensor3 w_vu = gauge_cocycle(tpa, *composite);
  const Tensor3 a_vu = gauge_action(tpa, *composite);
  const auto& H = tpa.H;

  CheckReport report("gauge_composition");
  CheckReport cocycle("cocycle");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t l = 0; l < H.dim(); ++l) {
      cocycle.expect_equal("w^{vu}(h, l) = (w^u)^v(h, l)", {h, l}, w_vu.fiber(h, l), twice.cocycle.fiber(h, l));
    }
  }
  CheckReport action("action");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t a = 0; a < tpa.A.dim(); ++a) {
      action.expect_equal("h .^{vu} a = h (.^u)^v a", {h, a}, a_vu.fiber(h, a), twice.action.fiber(h, a));
    }
  }
  report.add(std::move(cocycle));
  report.add(std::move(action));
  return report;
}

namespace {

// a # h -> a f(h1) # h2 on A (x) H ambient coordinates.
Matrix twist_by(const TwistedPartialAction& tpa, const LinMapHom& f) {
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  const std::size_t nh = H.dim();
  const std::size_t n = A.dim() * nh;
  return matrix_of(tpa.field(), n, n, [&](const Vector& x) {
    Vector out(tpa.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& t : H.coproduct(i % nh, 2)) {
        out.axpy(x[i] * t.coef, kron(A.multiply(A.basis(i / nh), f.at(t.idx[0])), H.basis(t.idx[1])));
      }
    }
    return out;
  });
}

// Matrix between computed bases, failing entries recorded in r.
Matrix restrict_map(const Matrix& ambient, const CrossedProductAlgebra& from, const CrossedProductAlgebra& to,
                    CheckReport& r, const std::string& identity) {
  Matrix m(ambient.field(), to.dim(), from.dim());
  for (std::size_t p = 0; p < from.dim(); ++p) {
    const Vector img = ambient.apply(from.basis[p]);
    ++r.checked;
    if (const auto c = to.from_ambient(img)) {
      m.set_column(p, *c);
    } else {
      r.fail(identity, {p}, img);
    }
  }
  return m;
}

void check_homomorphism(CheckReport& r, const Matrix& m, const CrossedProductAlgebra& from,
                        const CrossedProductAlgebra& to) {
  r.expect_equal("Phi(1) = 1", {}, m.apply(from.unit()), to.unit());
  for (std::size_t p = 0; p < from.dim(); ++p) {
    for (std::size_t q = 0; q < from.dim(); ++q) {
      r.expect_equal("Phi(x y) = Phi(x) Phi(y)", {p, q}, m.apply(from.algebra.mult.fiber(p, q)),
                     to.multiply(m.column(p), m.column(q)));
    }
  }
}

}  // namespace

GaugeIsomorphism gauge_isomorphism(const TwistedPartialAction& tpa, const GaugePair& g) {
  GaugeIsomorphism out{build_partial_crossed(tpa, {false}), build_partial_crossed(gauged(tpa, g), {false}), {}, {},
                       CheckReport("gauge_isomorphism")};
  const Field& f = tpa.field();
  CheckReport into("phi_lands");
  out.phi = restrict_map(twist_by(tpa, g.v), out.target, out.original, into, "a v(h1) # h2 in A#H");
  out.psi = restrict_map(twist_by(tpa, g.v_inv), out.original, out.target, into, "a v_inv(h1) # h2 in A#H");
  out.report.add(std::move(into));

  CheckReport hom("phi_homomorphism");
  check_homomorphism(hom, out.phi, out.target, out.original);
  out.report.add(std::move(hom));

  CheckReport bij("bijective");
  const std::size_t rk = rank(out.phi);
  ++bij.checked;
  if (rk != out.original.dim() || rk != out.target.dim()) {
    bij.fail("rank Phi = dim", {rk, out.original.dim(), out.target.dim()}, Vector(f, {static_cast<long>(rk)}),
             Vector(f, {static_cast<long>(out.original.dim())}));
  }
  if (out.phi.rows() == out.psi.cols() && out.phi.cols() == out.psi.rows()) {
    const Matrix pp = out.phi * out.psi;
    const Matrix qq = out.psi * out.phi;
    for (std::size_t i = 0; i < pp.cols(); ++i) {
      bij.expect_equal("Phi Psi = id", {i}, pp.column(i), Vector::unit(f, pp.rows(), i));
    }
    for (std::size_t i = 0; i < qq.cols(); ++i) {
      bij.expect_equal("Psi Phi = id", {i}, qq.column(i), Vector::unit(f, qq.rows(), i));
    }
  }
  out.report.add(std::move(bij));

  // Same map with the ungauged action on the target side.
  CheckReport literal("ungauged_action_reading");
  literal.informational = true;
  literal.note = "target A #_{., w^v} H with the original action";
  try {
    const TwistedPartialAction mixed{tpa.H, tpa.A, tpa.action, gauge_cocycle(tpa, g)};
    const CrossedProductAlgebra alt = build_partial_crossed(mixed, {false});
    const Matrix m = restrict_map(twist_by(tpa, g.v), alt, out.original, literal, "a v(h1) # h2 in A#H");
    if (literal.passed()) check_homomorphism(literal, m, alt, out.original);
  } catch (const Error& err) {
    literal.fail(std::string("build: ") + err.what(), {});
  }
  out.report.add(std::move(literal));
  return out;
}

CheckReport verify_equisatisfiability(const TwistedPartialAction& tpa, const GaugePair& g) {
  const TwistedPartialAction other = gauged(tpa, g);
  CheckReport before = verify_crossed_conditions(tpa);
  CheckReport after = verify_crossed_conditions(other);
  CheckReport report("equisatisfiability");
  const Field& f = tpa.field();
  const auto bit = [&](bool b) { return Vector(f, {b ? 1L : 0L}); };
  for (std::size_t i = 0; i < before.sub.size(); ++i) {
    const bool lhs = before.sub[i].passed();
    const bool rhs = after.sub[i].passed();
    report.expect_equal(before.sub[i].name + " verdict preserved", {i}, bit(lhs), bit(rhs));
  }
  before.name = "original";
  before.informational = true;
  after.name = "gauged";
  after.informational = true;
  report.add(std::move(before));
  report.add(std::move(after));
  return report;
}

}  // namespace pcross
