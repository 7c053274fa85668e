#include "pcross/crossed_product.hpp"

#include "pcross/error.hpp"

namespace pcross {

Tensor3 ambient_crossed_table(const HopfAlgebraData& H, const AlgebraData& A, const Tensor3& action,
                              const Tensor3& cocycle) {
  const std::size_t nh = H.dim();
  const std::size_t na = A.dim();
  const std::size_t n = na * nh;
  const Field& f = A.field();
  Tensor3 table(f, n, n, n);
  for (std::size_t h = 0; h < nh; ++h) {
    const auto dh = H.coproduct(h, 3);
    for (std::size_t l = 0; l < nh; ++l) {
      const auto dl = H.coproduct(l, 2);
      for (std::size_t b = 0; b < na; ++b) {
        // (1 (x) h)(b (x) l) = sum (h1 . b) w(h2, l1) (x) h3 l2; a on the left is a plain product.
        Vector right(f, n);
        for (const auto& x : dh) {
          const Vector hb = action.apply(H.basis(x.idx[0]), A.basis(b));
          for (const auto& y : dl) {
            const Vector coef_a = A.multiply(hb, cocycle.fiber(x.idx[1], y.idx[0]));
            const Vector hl = H.algebra.mult.fiber(x.idx[2], y.idx[1]);
            right.axpy(x.coef * y.coef, kron(coef_a, hl));
          }
        }
        for (std::size_t a = 0; a < na; ++a) {
          Vector prod(f, n);
          for (std::size_t p = 0; p < n; ++p) {
            if (right[p].is_zero()) continue;
            prod.axpy(right[p], kron(A.mult.fiber(a, p / nh), H.basis(p % nh)));
          }
          table.set_fiber(a * nh + h, b * nh + l, prod);
        }
      }
    }
  }
  return table;
}

Vector CrossedProductAlgebra::to_ambient(const Vector& coords) const {
  require_dims(coords.size(), dim(), "crossed product coordinates");
  Vector v(basis.field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) v.axpy(coords[i], basis[i]);
  return v;
}

Vector CrossedProductAlgebra::element(const Vector& a, const Vector& h) const {
  const auto& H = tpa.H;
  Vector amb(basis.field(), ambient_dim());
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (h[i].is_zero()) continue;
    for (const auto& x : H.coproduct(i, 2)) {
      amb.axpy(h[i] * x.coef, kron(tpa.A.multiply(a, tpa.e(x.idx[0])), H.basis(x.idx[1])));
    }
  }
  const auto c = from_ambient(amb);
  if (!c) throw Error(ErrorCode::ClosureViolation, "a # h outside the computed span");
  return *c;
}

CrossedProductAlgebra build_partial_crossed(const TwistedPartialAction& tpa, CrossedBuildOptions options) {
  if (options.require_axioms) {
    const CheckReport base = verify_twisted_partial(tpa);
    if (!base.passed()) throw Error(ErrorCode::PreconditionFailed, "twisted partial action axioms fail");
    const CheckReport cond = verify_crossed_conditions(tpa);
    if (!cond.passed()) throw Error(ErrorCode::PreconditionFailed, "crossed product conditions fail");
  }
  const auto& H = tpa.H;
  const auto& A = tpa.A;
  const Field& f = A.field();
  const std::size_t nh = H.dim();
  const std::size_t na = A.dim();

  std::vector<Vector> gens;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t h = 0; h < nh; ++h) {
      Vector g(f, na * nh);
      for (const auto& x : H.coproduct(h, 2)) {
        g.axpy(x.coef, kron(A.multiply(A.basis(a), tpa.e(x.idx[0])), H.basis(x.idx[1])));
      }
      gens.push_back(std::move(g));
    }
  }
  CrossedProductAlgebra cp{tpa, span(f, na * nh, gens), {}, {}};
  const std::size_t d = cp.dim();
  const Tensor3 table = ambient_crossed_table(H, A, tpa.action, tpa.cocycle);

  cp.algebra.mult = Tensor3(f, d, d, d);
  for (std::size_t p = 0; p < d; ++p) {
    cp.algebra.labels.push_back("x" + std::to_string(p));
    for (std::size_t q = 0; q < d; ++q) {
      const Vector prod = table.apply(cp.basis[p], cp.basis[q]);
      const auto c = coords_in(cp.basis, prod);
      if (!c) {
        throw Error(ErrorCode::ClosureViolation,
                    "product of basis elements " + std::to_string(p) + ", " + std::to_string(q) + " leaves A#H");
      }
      cp.algebra.mult.set_fiber(p, q, *c);
    }
  }
  const auto unit = coords_in(cp.basis, kron(A.unit, H.one()));
  if (!unit) throw Error(ErrorCode::ClosureViolation, "1_A (x) 1_H is not in A#H");
  cp.algebra.unit = *unit;
  cp.embedding = Matrix(f, d, na);
  for (std::size_t a = 0; a < na; ++a) {
    const auto c = coords_in(cp.basis, kron(A.basis(a), H.one()));
    if (!c) throw Error(ErrorCode::ClosureViolation, "a (x) 1_H is not in A#H");
    cp.embedding.set_column(a, *c);
  }
  return cp;
}

GlobalCrossedProduct build_global_crossed(const GlobalTwistedAction& g, CrossedBuildOptions options) {
  if (options.require_axioms && !verify_global(g).passed()) {
    throw Error(ErrorCode::PreconditionFailed, "global twisted action axioms fail");
  }
  GlobalCrossedProduct cp{g, {}};
  cp.algebra.mult = ambient_crossed_table(g.H, g.B, g.action, g.twist);
  cp.algebra.unit = kron(g.B.unit, g.H.one());
  for (std::size_t b = 0; b < g.B.dim(); ++b) {
    for (std::size_t h = 0; h < g.H.dim(); ++h) {
      const std::string bl = b < g.B.labels.size() ? g.B.labels[b] : "b" + std::to_string(b);
      const std::string hl = h < g.H.algebra.labels.size() ? g.H.algebra.labels[h] : "h" + std::to_string(h);
      cp.algebra.labels.push_back(bl + "#" + hl);
    }
  }
  return cp;
}

Vector multiply(const CrossedProductAlgebra& cp, const Vector& x, const Vector& y) {
  require_dims(x.size(), cp.dim(), "left factor");
  require_dims(y.size(), cp.dim(), "right factor");
  return cp.multiply(x, y);
}

CheckReport verify_assoc_unital(const CrossedProductAlgebra& cp) {
  CheckReport r = verify_algebra(cp.algebra);
  r.name = "crossed_product";
  return r;
}

CheckReport verify_assoc_unital(const GlobalCrossedProduct& cp) {
  CheckReport r = verify_algebra(cp.algebra);
  r.name = "global_crossed_product";
  return r;
}

Coaction comodule_coaction(const CrossedProductAlgebra& cp) {
  const auto& H = cp.tpa.H;
  const std::size_t nh = H.dim();
  const std::size_t na = cp.tpa.A.dim();
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  Coaction co;
  co.rho = Matrix(f, d * nh, d);
  for (std::size_t p = 0; p < d; ++p) {
    const Vector& x = cp.basis[p];
    // slices[m] holds the A (x) H component paired with h_m.
    std::vector<Vector> slices(nh, Vector(f, na * nh));
    for (std::size_t idx = 0; idx < na * nh; ++idx) {
      if (x[idx].is_zero()) continue;
      const std::size_t a = idx / nh;
      for (const auto& t : H.coproduct(idx % nh, 2)) {
        slices[t.idx[1]][a * nh + t.idx[0]] += x[idx] * t.coef;
      }
    }
    for (std::size_t m = 0; m < nh; ++m) {
      const auto c = cp.from_ambient(slices[m]);
      if (!c) throw Error(ErrorCode::ClosureViolation, "coaction leaves (A#H) (x) H");
      for (std::size_t k = 0; k < d; ++k) co.rho(k * nh + m, p) = (*c)[k];
    }
  }
  Matrix diff = co.rho;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t m = 0; m < nh; ++m) diff(p * nh + m, p) -= H.one()[m];
  }
  co.coinvariants = kernel_basis(diff);
  co.iota_image = image(cp.embedding);
  co.coinvariants_equal_A = co.coinvariants == co.iota_image;
  return co;
}

CheckReport verify_coaction(const CrossedProductAlgebra& cp, const Coaction& co) {
  CheckReport r("coaction");
  const auto& H = cp.tpa.H;
  const std::size_t nh = H.dim();
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  for (std::size_t p = 0; p < d; ++p) {
    const Vector rp = co.rho.column(p);
    Vector left(f, d * nh * nh);
    Vector right(f, d * nh * nh);
    Vector counit(f, d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t m = 0; m < nh; ++m) {
        const Scalar& c = rp[k * nh + m];
        if (c.is_zero()) continue;
        counit[k] += c * H.coalgebra.counit[m];
        const Vector rk = co.rho.column(k);
        for (std::size_t j = 0; j < d * nh; ++j) {
          if (!rk[j].is_zero()) left[j * nh + m] += c * rk[j];
        }
        for (const auto& t : H.coproduct(m, 2)) right[(k * nh + t.idx[0]) * nh + t.idx[1]] += c * t.coef;
      }
    }
    r.expect_equal("(rho (x) id) rho = (id (x) Delta) rho", {p}, left, right);
    r.expect_equal("(id (x) eps) rho = id", {p}, counit, Vector::unit(f, d, p));
  }
  return r;
}

QuotientSpace balanced_tensor_square(const CrossedProductAlgebra& cp) {
  const std::size_t d = cp.dim();
  const Field& f = cp.basis.field();
  std::vector<Vector> relations;
  for (std::size_t a = 0; a < cp.tpa.A.dim(); ++a) {
    const Vector ia = cp.embedding.column(a);
    for (std::size_t p = 0; p < d; ++p) {
      const Vector xa = cp.multiply(Vector::unit(f, d, p), ia);
      for (std::size_t q = 0; q < d; ++q) {
        const Vector ay = cp.multiply(ia, Vector::unit(f, d, q));
        relations.push_back(kron(xa, Vector::unit(f, d, q)) - kron(Vector::unit(f, d, p), ay));
      }
    }
  }
  return quotient(f, d * d, relations);
}

CanonicalMap canonical_map(const CrossedProductAlgebra& cp) {
  const Coaction co = comodule_coaction(cp);
  if (!co.coinvariants_equal_A) {
    throw Error(ErrorCode::CoinvariantsMismatch, "coinvariants of A#H differ from iota_A(A)");
  }
  const std::size_t d = cp.dim();
  const std::size_t nh = cp.tpa.H.dim();
  const Field& f = cp.basis.field();
  CanonicalMap out;
  out.balanced = balanced_tensor_square(cp);
  out.plain = Matrix(f, d * nh, d * d);
  for (std::size_t p = 0; p < d; ++p) {
    const Vector x = Vector::unit(f, d, p);
    for (std::size_t q = 0; q < d; ++q) {
      Vector col(f, d * nh);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < nh; ++m) {
          const Scalar& c = co.rho(k * nh + m, q);
          if (c.is_zero()) continue;
          const Vector xy = cp.multiply(x, Vector::unit(f, d, k));
          for (std::size_t j = 0; j < d; ++j) {
            if (!xy[j].is_zero()) col[j * nh + m] += c * xy[j];
          }
        }
      }
      out.plain.set_column(p * d + q, col);
    }
  }
  out.well_defined = true;
  for (const auto& rel : out.balanced.relations.basis()) {
    if (!out.plain.apply(rel).is_zero()) out.well_defined = false;
  }
  out.on_quotient = out.plain * out.balanced.section;
  out.rank = rank(out.on_quotient);
  out.injective = out.well_defined && out.rank == out.balanced.dim();
  out.bijective = out.injective && out.rank == d * nh;
  return out;
}

}  // namespace pcross
