#include "pcross/partial_action.hpp"

#include "pcross/error.hpp"

namespace pcross {
namespace {

void require_shapes(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action, const Tensor3* cocycle) {
  require_dims(action.dim1(), H.dim(), "action dim1 (H)");
  require_dims(action.dim2(), A.dim(), "action dim2 (A)");
  require_dims(action.dim3(), A.dim(), "action dim3 (A)");
  if (cocycle) {
    require_dims(cocycle->dim1(), H.dim(), "cocycle dim1 (H)");
    require_dims(cocycle->dim2(), H.dim(), "cocycle dim2 (H)");
    require_dims(cocycle->dim3(), A.dim(), "cocycle dim3 (A)");
  }
}

CheckReport unit_action(const TwistedPartialAction& t) {
  CheckReport r("unit_action");
  for (std::size_t a = 0; a < t.A.dim(); ++a) {
    r.expect_equal("1_H . a = a", {a}, t.act(t.H.one(), t.A.basis(a)), t.A.basis(a));
  }
  return r;
}

CheckReport measuring(const TwistedPartialAction& t) {
  CheckReport r("measuring");
  sweep(t.H.dim(), r, [&](std::size_t h, CheckReport& out) {
    const auto dh = t.H.coproduct(h, 2);
    for (std::size_t a = 0; a < t.A.dim(); ++a) {
      for (std::size_t b = 0; b < t.A.dim(); ++b) {
        Vector rhs = t.A.zero();
        for (const auto& x : dh) rhs.axpy(x.coef, t.A.multiply(t.act(x.idx[0], t.A.basis(a)), t.act(x.idx[1], t.A.basis(b))));
        out.expect_equal("h . (ab) = (h1 . a)(h2 . b)", {h, a, b}, t.act(h, t.A.mult.fiber(a, b)), rhs);
      }
    }
  });
  return r;
}

CheckReport twisted_module(const TwistedPartialAction& t, const std::string& name) {
  CheckReport r(name);
  sweep(t.H.dim(), r, [&](std::size_t h, CheckReport& out) {
    const auto dh = t.H.coproduct(h, 2);
    for (std::size_t l = 0; l < t.H.dim(); ++l) {
      const auto dl = t.H.coproduct(l, 2);
      for (std::size_t a = 0; a < t.A.dim(); ++a) {
        const Vector av = t.A.basis(a);
        Vector lhs = t.A.zero();
        Vector rhs = t.A.zero();
        for (const auto& x : dh) {
          for (const auto& y : dl) {
            const Scalar c = x.coef * y.coef;
            lhs.axpy(c, t.A.multiply(t.act(x.idx[0], t.act(y.idx[0], av)), t.omega(x.idx[1], y.idx[1])));
            rhs.axpy(c, t.A.multiply(t.omega(x.idx[0], y.idx[0]),
                                     t.act(t.H.algebra.mult.fiber(x.idx[1], y.idx[1]), av)));
          }
        }
        out.expect_equal("(h1 . (l1 . a)) w(h2, l2) = w(h1, l1)(h2 l2 . a)", {h, l, a}, lhs, rhs);
      }
    }
  });
  return r;
}

CheckReport cocycle_support(const TwistedPartialAction& t) {
  CheckReport r("cocycle_support");
  for (std::size_t h = 0; h < t.H.dim(); ++h) {
    for (std::size_t l = 0; l < t.H.dim(); ++l) {
      Vector rhs = t.A.zero();
      for (const auto& x : t.H.coproduct(h, 2)) {
        for (const auto& y : t.H.coproduct(l, 2)) {
          rhs.axpy(x.coef * y.coef, t.A.multiply(t.omega(x.idx[0], y.idx[0]),
                                                 t.e(t.H.algebra.mult.fiber(x.idx[1], y.idx[1]))));
        }
      }
      r.expect_equal("w(h, l) = w(h1, l1)(h2 l2 . 1_A)", {h, l}, t.omega(h, l), rhs);
    }
  }
  return r;
}

CheckReport normalization(const TwistedPartialAction& t) {
  CheckReport r("normalization");
  for (std::size_t h = 0; h < t.H.dim(); ++h) {
    const Vector hv = t.H.basis(h);
    r.expect_equal("w(1, h) = h . 1_A", {h}, t.omega(t.H.one(), hv), t.e(hv));
    r.expect_equal("w(h, 1) = h . 1_A", {h}, t.omega(hv, t.H.one()), t.e(hv));
  }
  return r;
}

CheckReport two_cocycle(const TwistedPartialAction& t) {
  CheckReport r("cocycle");
  const std::size_t n = t.H.dim();
  sweep(n, r, [&](std::size_t h, CheckReport& out) {
    const auto dh = t.H.coproduct(h, 2);
    for (std::size_t l = 0; l < n; ++l) {
      const auto dl = t.H.coproduct(l, 2);
      for (std::size_t m = 0; m < n; ++m) {
        const auto dm = t.H.coproduct(m, 2);
        const Vector mv = t.H.basis(m);
        Vector lhs = t.A.zero();
        Vector rhs = t.A.zero();
        for (const auto& x : dh) {
          for (const auto& y : dl) {
            const Scalar c = x.coef * y.coef;
            rhs.axpy(c, t.A.multiply(t.omega(x.idx[0], y.idx[0]),
                                     t.omega(t.H.algebra.mult.fiber(x.idx[1], y.idx[1]), mv)));
            for (const auto& z : dm) {
              lhs.axpy(c * z.coef, t.A.multiply(t.act(x.idx[0], t.omega(y.idx[0], z.idx[0])),
                                                t.omega(t.H.basis(x.idx[1]),
                                                        t.H.algebra.mult.fiber(y.idx[1], z.idx[1]))));
            }
          }
        }
        out.expect_equal("(h1 . w(l1, m1)) w(h2, l2 m2) = w(h1, l1) w(h2 l2, m)", {h, l, m}, lhs, rhs);
      }
    }
  });
  return r;
}

}  // namespace

CentralIdempotent central_idempotent(const AlgebraData& B, const Vector& one_A) {
  require_dims(one_A.size(), B.dim(), "idempotent length");
  if (one_A.is_zero()) throw Error(ErrorCode::NotIdempotent, "the zero element spans no ideal");
  if (!(B.multiply(one_A, one_A) == one_A)) throw Error(ErrorCode::NotIdempotent, one_A.to_string());
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < B.dim(); ++i) {
    const Vector b = B.basis(i);
    const Vector left = B.multiply(one_A, b);
    if (!(left == B.multiply(b, one_A))) {
      throw Error(ErrorCode::NotCentral, one_A.to_string() + " does not commute with basis vector " + std::to_string(i));
    }
    gens.push_back(left);
  }
  CentralIdempotent ci;
  ci.element = one_A;
  ci.ideal = span(B.field(), B.dim(), gens);
  const std::size_t n = ci.ideal.dim();
  const Field& f = B.field();
  ci.inclusion = ci.ideal.as_columns();
  ci.projection = Matrix(f, n, B.dim());
  for (std::size_t i = 0; i < B.dim(); ++i) ci.projection.set_column(i, *coords_in(ci.ideal, gens[i]));
  ci.algebra.mult = Tensor3(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ci.algebra.labels.push_back("a" + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      ci.algebra.mult.set_fiber(i, j, *coords_in(ci.ideal, B.multiply(ci.ideal[i], ci.ideal[j])));
    }
  }
  ci.algebra.unit = *coords_in(ci.ideal, one_A);
  return ci;
}

CheckReport verify_partial_module_algebra(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action) {
  require_shapes(H, A, action, nullptr);
  // A cocycle-free view; the cocycle slot is never read here.
  const TwistedPartialAction t{H, A, action, Tensor3(A.field(), H.dim(), H.dim(), A.dim())};
  CheckReport report("partial_module_algebra");
  report.add(measuring(t));
  report.add(unit_action(t));
  CheckReport composition("partial_composition");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const auto dh = H.coproduct(h, 2);
    for (std::size_t g = 0; g < H.dim(); ++g) {
      for (std::size_t a = 0; a < A.dim(); ++a) {
        const Vector av = A.basis(a);
        Vector rhs = A.zero();
        for (const auto& x : dh) {
          rhs.axpy(x.coef, A.multiply(t.e(x.idx[0]), t.act(H.algebra.mult.fiber(x.idx[1], g), av)));
        }
        composition.expect_equal("h . (g . a) = (h1 . 1_A)(h2 g . a)", {h, g, a}, t.act(h, t.act(g, av)), rhs);
      }
    }
  }
  report.add(std::move(composition));
  return report;
}

CheckReport verify_twisted_partial(const TwistedPartialAction& tpa) {
  require_shapes(tpa.H, tpa.A, tpa.action, &tpa.cocycle);
  CheckReport report("twisted_partial_action");
  report.add(unit_action(tpa));
  report.add(measuring(tpa));
  report.add(twisted_module(tpa, "twisted_module"));
  report.add(cocycle_support(tpa));
  return report;
}

CheckReport verify_cocycle_absorption(const TwistedPartialAction& tpa) {
  require_shapes(tpa.H, tpa.A, tpa.action, &tpa.cocycle);
  CheckReport report("cocycle_absorption");
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const auto dh = H.coproduct(h, 2);
    for (std::size_t l = 0; l < H.dim(); ++l) {
      const auto dl = H.coproduct(l, 2);
      Vector middle = A.zero();
      Vector right = A.zero();
      for (const auto& x : dh) {
        right.axpy(x.coef, A.multiply(tpa.e(x.idx[0]), tpa.omega(x.idx[1], l)));
        for (const auto& y : dl) {
          middle.axpy(x.coef * y.coef,
                      A.multiply(tpa.act(x.idx[0], tpa.e(y.idx[0])), tpa.omega(x.idx[1], y.idx[1])));
        }
      }
      report.expect_equal("w(h, l) = (h1 . (l1 . 1_A)) w(h2, l2)", {h, l}, tpa.omega(h, l), middle);
      report.expect_equal("w(h, l) = (h1 . 1_A) w(h2, l)", {h, l}, tpa.omega(h, l), right);
    }
  }
  return report;
}

CheckReport verify_crossed_conditions(const TwistedPartialAction& tpa) {
  require_shapes(tpa.H, tpa.A, tpa.action, &tpa.cocycle);
  CheckReport report("crossed_conditions");
  report.add(normalization(tpa));
  report.add(twisted_module(tpa, "twisted_module"));
  report.add(two_cocycle(tpa));
  return report;
}

bool is_trivial_cocycle(const TwistedPartialAction& tpa) {
  const auto& H = tpa.H;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t l = 0; l < H.dim(); ++l) {
      const Vector w = tpa.omega(h, l);
      if (!(tpa.act(h, tpa.e(l)) == w)) return false;
      Vector rhs = tpa.A.zero();
      for (const auto& x : H.coproduct(h, 2)) {
        rhs.axpy(x.coef, tpa.A.multiply(tpa.e(x.idx[0]), tpa.e(H.algebra.mult.fiber(x.idx[1], l))));
      }
      if (!(w == rhs)) return false;
    }
  }
  return true;
}

CheckReport verify_global(const GlobalTwistedAction& g) {
  require_shapes(g.H, g.B, g.action, &g.twist);
  const TwistedPartialAction t = g.as_partial();
  const auto& H = g.H;
  const auto& B = g.B;
  CheckReport report("global_twisted_action");
  report.add(unit_action(t));
  report.add(measuring(t));
  CheckReport unital("unital_action");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    unital.expect_equal("h |> 1 = eps(h) 1", {h}, g.act(h, B.unit), H.coalgebra.counit[h] * B.unit);
  }
  report.add(std::move(unital));
  CheckReport normalized("normalized_twist");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const Vector target = H.coalgebra.counit[h] * B.unit;
    normalized.expect_equal("u(1, h) = eps(h) 1", {h}, g.u(H.one(), H.basis(h)), target);
    normalized.expect_equal("u(h, 1) = eps(h) 1", {h}, g.u(H.basis(h), H.one()), target);
  }
  report.add(std::move(normalized));
  report.add(twisted_module(t, "twisted_module"));
  report.add(two_cocycle(t));
  return report;
}

InducedPartialAction induce_partial(const GlobalTwistedAction& g, const Vector& one_A) {
  require_shapes(g.H, g.B, g.action, &g.twist);
  CentralIdempotent ci = central_idempotent(g.B, one_A);
  const auto& H = g.H;
  const auto& B = g.B;
  const Field& f = B.field();
  const std::size_t na = ci.ideal.dim();
  const auto to_A = [&](const Vector& b) {
    const auto c = coords_in(ci.ideal, B.multiply(one_A, b));
    return *c;
  };
  // h . 1_A computed inside B.
  const auto e_in_B = [&](const Vector& h) { return B.multiply(one_A, g.act(h, one_A)); };

  TwistedPartialAction tpa{H, ci.algebra, Tensor3(f, H.dim(), na, na), Tensor3(f, H.dim(), H.dim(), na)};
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t a = 0; a < na; ++a) tpa.action.set_fiber(h, a, to_A(g.act(h, ci.ideal[a])));
  }
  for (std::size_t h = 0; h < H.dim(); ++h) {
    const auto dh = H.coproduct(h, 3);
    for (std::size_t l = 0; l < H.dim(); ++l) {
      const auto dl = H.coproduct(l, 2);
      Vector w(f, B.dim());
      for (const auto& x : dh) {
        for (const auto& y : dl) {
          const Vector left = e_in_B(H.basis(x.idx[0]));
          const Vector mid = g.u(H.basis(x.idx[1]), H.basis(y.idx[0]));
          const Vector right = e_in_B(H.algebra.mult.fiber(x.idx[2], y.idx[1]));
          w.axpy(x.coef * y.coef, B.multiply(left, mid, right));
        }
      }
      tpa.cocycle.set_fiber(h, l, to_A(w));
    }
  }
  return {std::move(tpa), std::move(ci)};
}

LinMapHom f1_map(const TwistedPartialAction& tpa) {
  const std::size_t n = tpa.H.dim();
  Matrix m(tpa.field(), tpa.A.dim(), n * n);
  for (std::size_t h = 0; h < n; ++h) {
    const Vector eh = tpa.e(h);
    for (std::size_t k = 0; k < n; ++k) m.set_column(h * n + k, tpa.H.coalgebra.counit[k] * eh);
  }
  return {m};
}

LinMapHom f2_map(const TwistedPartialAction& tpa) {
  const std::size_t n = tpa.H.dim();
  Matrix m(tpa.field(), tpa.A.dim(), n * n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) m.set_column(h * n + k, tpa.e(tpa.H.algebra.mult.fiber(h, k)));
  }
  return {m};
}

LinMapHom cocycle_map(const TwistedPartialAction& tpa) {
  const std::size_t n = tpa.H.dim();
  Matrix m(tpa.field(), tpa.A.dim(), n * n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) m.set_column(h * n + k, tpa.omega(h, k));
  }
  return {m};
}

SymmetricResult verify_symmetric(const TwistedPartialAction& tpa) {
  require_shapes(tpa.H, tpa.A, tpa.action, &tpa.cocycle);
  SymmetricResult out{CheckReport("symmetric"), std::nullopt};
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  const Field& f = tpa.field();
  const CoalgebraData HH = tensor_square(H.coalgebra);
  const LinMapHom f1 = f1_map(tpa);
  const LinMapHom f2 = f2_map(tpa);

  CheckReport central("central_f1_f2");
  for (std::size_t i = 0; i < HH.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const LinMapHom e = elementary_map(i, j, HH, A);
      central.expect_equal("f1 * E = E * f1", {i, j}, flatten(convolution(f1, e, HH, A)),
                           flatten(convolution(e, f1, HH, A)));
      central.expect_equal("f2 * E = E * f2", {i, j}, flatten(convolution(f2, e, HH, A)),
                           flatten(convolution(e, f2, HH, A)));
    }
  }
  out.report.add(std::move(central));

  CheckReport inverse("cocycle_inverse");
  {
    CheckReport conditions = verify_crossed_conditions(tpa);
    for (auto& s : conditions.sub) {
      if (s.name != "normalization") inverse.add(std::move(s));
    }
  }
  const LinMapHom w = cocycle_map(tpa);
  const LinMapHom F = convolution(f1, f2, HH, A);
  const std::size_t unknowns = A.dim() * HH.dim();
  const auto op = [&](auto&& fn) {
    return matrix_of(f, unknowns, unknowns, [&](const Vector& x) {
      return flatten(fn(unflatten(x, A.dim(), HH.dim())));
    });
  };
  Matrix system = op([&](const LinMapHom& x) { return convolution(w, x, HH, A); });
  system = system.vstack(op([&](const LinMapHom& x) { return convolution(x, w, HH, A); }));
  // Ideal membership: x = F * x = x * F.
  system = system.vstack(op([&](const LinMapHom& x) {
    return LinMapHom{convolution(F, x, HH, A).matrix - x.matrix};
  }));
  system = system.vstack(op([&](const LinMapHom& x) {
    return LinMapHom{convolution(x, F, HH, A).matrix - x.matrix};
  }));
  const Vector target = flatten(F);
  Vector rhs(f, 4 * unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    rhs[i] = target[i];
    rhs[unknowns + i] = target[i];
  }
  ++inverse.checked;
  if (const auto sol = solve(system, rhs)) {
    out.omega_inverse = unflatten(*sol, A.dim(), HH.dim());
  } else {
    inverse.fail("w * w' = w' * w = f1 * f2 with w' in <f1 * f2>", {}, Vector{}, Vector{});
    inverse.note = "no inverse of the cocycle in the ideal generated by f1 * f2";
  }
  out.report.add(std::move(inverse));

  CheckReport third("partial_composition_of_unit");
  for (std::size_t h = 0; h < H.dim(); ++h) {
    for (std::size_t k = 0; k < H.dim(); ++k) {
      Vector rhs3 = A.zero();
      for (const auto& x : H.coproduct(h, 2)) {
        rhs3.axpy(x.coef, A.multiply(tpa.e(x.idx[0]), tpa.e(H.algebra.mult.fiber(x.idx[1], k))));
      }
      third.expect_equal("h . (k . 1_A) = (h1 . 1_A)(h2 k . 1_A)", {h, k}, tpa.act(h, tpa.e(k)), rhs3);
    }
  }
  out.report.add(std::move(third));
  return out;
}

EMapResult e_map(const TwistedPartialAction& tpa) {
  Matrix m(tpa.field(), tpa.A.dim(), tpa.H.dim());
  for (std::size_t h = 0; h < tpa.H.dim(); ++h) m.set_column(h, tpa.e(h));
  EMapResult r{{m}, false};
  r.central = is_central_in_convolution(r.e, tpa.H.coalgebra, tpa.A);
  return r;
}

}  // namespace pcross
