#include "pcross/morita.hpp"

#include "pcross/error.hpp"

namespace pcross {
namespace {

Matrix theta_tensor_id(const EnvelopingActionData& env) {
  const std::size_t nh = env.global.H.dim();
  return matrix_of(env.theta.field(), env.theta.cols() * nh, env.theta.rows() * nh, [&](const Vector& x) {
    Vector out(env.theta.field(), env.theta.rows() * nh);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      out.axpy(x[i], kron(env.theta.column(i / nh), env.global.H.basis(i % nh)));
    }
    return out;
  });
}

// Checks x y in `target` for x over `left`, y over `right`.
void closure(CheckReport& r, const std::string& identity, const GlobalCrossedProduct& S,
             const std::vector<Vector>& left, const std::vector<Vector>& right, const SubspaceBasis& target) {
  sweep(left.size(), r, [&](std::size_t i, CheckReport& out) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Vector p = S.multiply(left[i], right[j]);
      ++out.checked;
      if (!target.contains(p)) out.fail(identity, {i, j}, p);
    }
  });
}

}  // namespace

PhiEmbedding phi_embed(const EnvelopingActionData& env, const CrossedProductAlgebra& R) {
  const Matrix full = theta_tensor_id(env);
  PhiEmbedding out{full * R.basis.as_columns(), CheckReport("phi_embedding")};
  const AlgebraData S = build_global_crossed(env.global, {false}).algebra;
  const std::size_t d = R.dim();
  const Field& f = full.field();
  const std::size_t rk = rank(out.phi);
  ++out.report.checked;
  if (rk != d) {
    out.report.fail("Phi injective", {rk, d}, Vector(f, {static_cast<long>(rk)}), Vector(f, {static_cast<long>(d)}));
  }
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      out.report.expect_equal("Phi(x y) = Phi(x) Phi(y)", {p, q}, out.phi.apply(R.algebra.mult.fiber(p, q)),
                              S.multiply(out.phi.column(p), out.phi.column(q)));
    }
  }
  return out;
}

SubspaceBasis build_M(const EnvelopingActionData& env) {
  const auto& H = env.global.H;
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < env.theta.cols(); ++a) {
    for (std::size_t h = 0; h < H.dim(); ++h) gens.push_back(kron(env.theta.column(a), H.basis(h)));
  }
  return span(env.theta.field(), env.theta.rows() * H.dim(), gens);
}

SubspaceBasis build_N(const EnvelopingActionData& env) {
  const auto& H = env.global.H;
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < env.theta.cols(); ++a) {
    for (std::size_t h = 0; h < H.dim(); ++h) {
      Vector g(env.theta.field(), env.theta.rows() * H.dim());
      for (const auto& x : H.coproduct(h, 2)) {
        g.axpy(x.coef, kron(env.global.act(x.idx[0], env.theta.column(a)), H.basis(x.idx[1])));
      }
      gens.push_back(std::move(g));
    }
  }
  return span(env.theta.field(), env.theta.rows() * H.dim(), gens);
}

MoritaContext build_morita_context(const EnvelopingActionData& env) {
  const CheckReport check = verify_enveloping(env);
  if (!check.passed()) throw Error(ErrorCode::PreconditionFailed, "enveloping action fails:\n" + check.summary());
  MoritaContext ctx{env, build_partial_crossed(env.tpa), build_global_crossed(env.global), {}, {}, {}, {}};
  ctx.phi = phi_embed(env, ctx.R).phi;
  ctx.phi_image = image(ctx.phi);
  ctx.M = build_M(env);
  ctx.N = build_N(env);
  return ctx;
}

CheckReport verify_module_structures(const MoritaContext& ctx) {
  const auto& S = ctx.S;
  const Field& f = ctx.phi.field();
  const std::size_t ns = S.dim();
  std::vector<Vector> s_basis;
  for (std::size_t i = 0; i < ns; ++i) s_basis.push_back(Vector::unit(f, ns, i));
  std::vector<Vector> phi_r;
  for (std::size_t p = 0; p < ctx.R.dim(); ++p) phi_r.push_back(ctx.phi.column(p));
  const Vector one_s = S.algebra.unit;
  const Vector phi_one = ctx.phi.apply(ctx.R.unit());

  CheckReport report("module_structures");

  CheckReport right_m("M_right_S");
  closure(right_m, "m s in M", S, ctx.M.basis(), s_basis, ctx.M);
  sweep(ctx.M.dim(), right_m, [&](std::size_t i, CheckReport& out) {
    const Vector& m = ctx.M[i];
    out.expect_equal("m 1_S = m", {i}, S.multiply(m, one_s), m);
    for (std::size_t j = 0; j < ns; ++j) {
      for (std::size_t k = 0; k < ns; ++k) {
        out.expect_equal("(m s) s' = m (s s')", {i, j, k}, S.multiply(S.multiply(m, s_basis[j]), s_basis[k]),
                         S.multiply(m, S.multiply(s_basis[j], s_basis[k])));
      }
    }
  });
  report.add(std::move(right_m));

  CheckReport left_n("N_left_S");
  closure(left_n, "s n in N", S, s_basis, ctx.N.basis(), ctx.N);
  sweep(ctx.N.dim(), left_n, [&](std::size_t i, CheckReport& out) {
    const Vector& n = ctx.N[i];
    out.expect_equal("1_S n = n", {i}, S.multiply(one_s, n), n);
    for (std::size_t j = 0; j < ns; ++j) {
      for (std::size_t k = 0; k < ns; ++k) {
        out.expect_equal("s (s' n) = (s s') n", {i, j, k}, S.multiply(s_basis[j], S.multiply(s_basis[k], n)),
                         S.multiply(S.multiply(s_basis[j], s_basis[k]), n));
      }
    }
  });
  report.add(std::move(left_n));

  CheckReport left_m("M_left_R");
  closure(left_m, "Phi(r) m in M", S, phi_r, ctx.M.basis(), ctx.M);
  sweep(ctx.M.dim(), left_m, [&](std::size_t i, CheckReport& out) {
    const Vector& m = ctx.M[i];
    out.expect_equal("Phi(1_R) m = m", {i}, S.multiply(phi_one, m), m);
    for (std::size_t p = 0; p < phi_r.size(); ++p) {
      for (std::size_t q = 0; q < phi_r.size(); ++q) {
        out.expect_equal("r (r' m) = (r r') m", {i, p, q}, S.multiply(phi_r[p], S.multiply(phi_r[q], m)),
                         S.multiply(ctx.phi.apply(ctx.R.algebra.mult.fiber(p, q)), m));
      }
    }
  });
  report.add(std::move(left_m));

  CheckReport right_n("N_right_R");
  closure(right_n, "n Phi(r) in N", S, ctx.N.basis(), phi_r, ctx.N);
  sweep(ctx.N.dim(), right_n, [&](std::size_t i, CheckReport& out) {
    const Vector& n = ctx.N[i];
    out.expect_equal("n Phi(1_R) = n", {i}, S.multiply(n, phi_one), n);
    for (std::size_t p = 0; p < phi_r.size(); ++p) {
      for (std::size_t q = 0; q < phi_r.size(); ++q) {
        out.expect_equal("(n r) r' = n (r r')", {i, p, q}, S.multiply(S.multiply(n, phi_r[p]), phi_r[q]),
                         S.multiply(n, ctx.phi.apply(ctx.R.algebra.mult.fiber(p, q))));
      }
    }
  });
  report.add(std::move(right_n));
  return report;
}

MoritaPairings verify_morita_pairings(const MoritaContext& ctx) {
  const auto& S = ctx.S;
  const Field& f = ctx.phi.field();
  const std::size_t ns = S.dim();
  const auto& M = ctx.M.basis();
  const auto& N = ctx.N.basis();
  std::vector<Vector> phi_r;
  for (std::size_t p = 0; p < ctx.R.dim(); ++p) phi_r.push_back(ctx.phi.column(p));
  const auto mul = [&](const Vector& x, const Vector& y) { return S.multiply(x, y); };

  MoritaPairings out{CheckReport("morita_pairings")};

  CheckReport balanced("balanced");
  sweep(N.size(), balanced, [&](std::size_t i, CheckReport& r) {
    for (std::size_t p = 0; p < phi_r.size(); ++p) {
      for (std::size_t j = 0; j < M.size(); ++j) {
        r.expect_equal("sigma(n r (x) m) = sigma(n (x) r m)", {i, p, j}, mul(mul(N[i], phi_r[p]), M[j]),
                       mul(N[i], mul(phi_r[p], M[j])));
      }
    }
  });
  sweep(M.size(), balanced, [&](std::size_t i, CheckReport& r) {
    for (std::size_t s = 0; s < ns; ++s) {
      const Vector sv = Vector::unit(f, ns, s);
      for (std::size_t j = 0; j < N.size(); ++j) {
        r.expect_equal("tau(m s (x) n) = tau(m (x) s n)", {i, s, j}, mul(mul(M[i], sv), N[j]),
                       mul(M[i], mul(sv, N[j])));
      }
    }
  });
  out.report.add(std::move(balanced));

  CheckReport tau_image("tau_image");
  std::vector<Vector> tau_values;
  std::vector<Vector> sigma_values;
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < N.size(); ++j) {
      Vector t = mul(M[i], N[j]);
      ++tau_image.checked;
      if (!ctx.phi_image.contains(t)) tau_image.fail("tau(m (x) n) in Phi(R)", {i, j}, t);
      tau_values.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i < N.size(); ++i) {
    for (std::size_t j = 0; j < M.size(); ++j) sigma_values.push_back(mul(N[i], M[j]));
  }
  out.report.add(std::move(tau_image));

  CheckReport mixed("mixed_associativity");
  sweep(N.size(), mixed, [&](std::size_t i, CheckReport& r) {
    for (std::size_t j = 0; j < M.size(); ++j) {
      for (std::size_t k = 0; k < N.size(); ++k) {
        r.expect_equal("sigma(n (x) m) n' = n tau(m (x) n')", {i, j, k}, mul(sigma_values[i * M.size() + j], N[k]),
                       mul(N[i], tau_values[j * N.size() + k]));
      }
    }
  });
  sweep(M.size(), mixed, [&](std::size_t i, CheckReport& r) {
    for (std::size_t j = 0; j < N.size(); ++j) {
      for (std::size_t k = 0; k < M.size(); ++k) {
        r.expect_equal("m sigma(n (x) m') = tau(m (x) n) m'", {i, j, k}, mul(M[i], sigma_values[j * M.size() + k]),
                       mul(tau_values[i * N.size() + j], M[k]));
      }
    }
  });
  out.report.add(std::move(mixed));

  out.sigma_rank = span(f, ns, sigma_values).dim();
  out.tau_rank = span(f, ns, tau_values).dim();
  out.sigma_surjective = out.sigma_rank == ns;
  out.tau_surjective = out.tau_rank == ctx.R.dim();
  CheckReport strict("strictness");
  strict.informational = true;
  strict.note = "surjectivity of sigma onto S and tau onto Phi(R)";
  strict.checked = 2;
  if (!out.sigma_surjective) {
    strict.fail("sigma surjective", {out.sigma_rank, ns}, Vector(f, {static_cast<long>(out.sigma_rank)}),
                Vector(f, {static_cast<long>(ns)}));
  }
  if (!out.tau_surjective) {
    strict.fail("tau surjective", {out.tau_rank, ctx.R.dim()}, Vector(f, {static_cast<long>(out.tau_rank)}),
                Vector(f, {static_cast<long>(ctx.R.dim())}));
  }
  out.report.add(std::move(strict));
  return out;
}

}  // namespace pcross
