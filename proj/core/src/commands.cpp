#include "pcross/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pcross/crossed_product.hpp"
#include "pcross/error.hpp"
#include "pcross/gauge.hpp"
#include "pcross/globalization.hpp"
#include "pcross/morita.hpp"
#include "pcross/separability.hpp"

namespace pcross {
namespace {

using json = nlohmann::json;  // std::map objects: keys come out sorted

constexpr std::size_t kMaxWitnesses = 20;

json vec(const Vector& v) {
  json a = json::array();
  for (const auto& s : v.entries()) a.push_back(s.to_string());
  return a;
}

json mat_rows(const Matrix& m) {
  json a = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(vec(m.column(c)));
  return a;
}

json tensor(const Tensor3& t) {
  json a = json::array();
  for (std::size_t i = 0; i < t.dim1(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.dim2(); ++j) row.push_back(vec(t.fiber(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

json report_json(const CheckReport& r) {
  json o;
  o["name"] = r.name;
  o["passed"] = r.passed();
  o["checked"] = r.checked;
  if (r.informational) o["informational"] = true;
  if (!r.note.empty()) o["note"] = r.note;
  o["violation_count"] = r.violations.size();
  json v = json::array();
  for (std::size_t i = 0; i < std::min(r.violations.size(), kMaxWitnesses); ++i) {
    const auto& w = r.violations[i];
    v.push_back({{"identity", w.identity}, {"indices", w.indices}, {"lhs", vec(w.lhs)}, {"rhs", vec(w.rhs)}});
  }
  o["violations"] = std::move(v);
  json s = json::array();
  for (const auto& c : r.sub) s.push_back(report_json(c));
  o["sub"] = std::move(s);
  return o;
}

// Collects gate and informational reports plus derived quantities.
struct Builder {
  std::string command;
  std::vector<CheckReport> checks;
  json derived = json::object();
  json errors = json::array();
  bool input_error = false;

  void check(CheckReport r, bool informational = false) {
    r.sort();
    if (informational) r.informational = true;
    checks.push_back(std::move(r));
  }
  void error(const Error& e) { errors.push_back({{"code", to_string(e.code())}, {"message", e.what()}}); }

  bool passed() const {
    if (!errors.empty()) return false;
    for (const auto& c : checks) {
      if (!c.informational && !c.passed()) return false;
    }
    return true;
  }
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::ShapeError:
    case ErrorCode::MissingObject:
    case ErrorCode::UnknownCommand:
    case ErrorCode::InvalidField:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NonGroup:
      return true;
    default:
      return false;
  }
}

// Runs `body`; structural errors become report entries.
void guarded(Builder& b, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    b.error(e);
    if (is_input_error(e.code())) b.input_error = true;
  }
}

json crossed_json(const CrossedProductAlgebra& cp) {
  json o;
  o["dim"] = cp.dim();
  json basis = json::array();
  for (const auto& v : cp.basis.basis()) basis.push_back(vec(v));
  o["basis"] = std::move(basis);
  o["mult"] = tensor(cp.algebra.mult);
  o["unit"] = vec(cp.unit());
  o["embedding"] = mat_rows(cp.embedding);
  return o;
}

void cmd_verify(const SpecFile& spec, Builder& b) {
  guarded(b, [&] {
    if (spec.hopf) b.check(verify_hopf(*spec.hopf));
    if (spec.algebra) b.check(verify_algebra(*spec.algebra));
  });
  guarded(b, [&] {
    if (!spec.action) return;
    const TwistedPartialAction tpa = spec.partial();
    b.check(verify_twisted_partial(tpa));
    b.check(verify_cocycle_absorption(tpa));
    b.check(verify_crossed_conditions(tpa));
    const bool trivial = is_trivial_cocycle(tpa);
    b.derived["trivial_cocycle"] = trivial;
    CheckReport pma = verify_partial_module_algebra(tpa.H, tpa.A, tpa.action);
    pma.note = "gates only when the cocycle is trivial";
    b.check(std::move(pma), !trivial);
    SymmetricResult sym = verify_symmetric(tpa);
    if (sym.omega_inverse) b.derived["omega_inverse"] = mat_rows(sym.omega_inverse->matrix);
    b.check(std::move(sym.report), true);
    const EMapResult e = e_map(tpa);
    b.derived["e_map"] = mat_rows(e.e.matrix);
    b.derived["e_central"] = e.central;
  });
  guarded(b, [&] {
    if (!spec.global) return;
    const GlobalTwistedAction g = spec.global_action();
    b.check(verify_global(g));
    if (spec.idempotent) {
      const InducedPartialAction ind = induce_partial(g, *spec.idempotent);
      CheckReport r = verify_twisted_partial(ind.tpa);
      r.name = "induced_twisted_partial_action";
      b.check(std::move(r));
      b.derived["induced_dim"] = ind.tpa.A.dim();
    }
    if (spec.theta) b.check(verify_enveloping(spec.enveloping()));
  });
}

void cmd_build_crossed(const SpecFile& spec, Builder& b) {
  guarded(b, [&] {
    const TwistedPartialAction tpa = spec.partial();
    const CrossedProductAlgebra cp = build_partial_crossed(tpa);
    b.derived["crossed_product"] = crossed_json(cp);
    b.check(verify_assoc_unital(cp));
    const Coaction co = comodule_coaction(cp);
    b.check(verify_coaction(cp, co));
    b.derived["coinvariants_dim"] = co.coinvariants.dim();
    b.derived["coinvariants_equal_A"] = co.coinvariants_equal_A;
    if (co.coinvariants_equal_A) {
      const CanonicalMap can = canonical_map(cp);
      b.derived["canonical_map"] = {{"balanced_dim", can.balanced.dim()},
                                    {"target_dim", cp.dim() * tpa.H.dim()},
                                    {"rank", can.rank},
                                    {"injective", can.injective},
                                    {"bijective", can.bijective}};
    }
  });
  guarded(b, [&] {
    if (!spec.global) return;
    const GlobalCrossedProduct g = build_global_crossed(spec.global_action());
    b.derived["global_crossed_product"] = {{"dim", g.dim()}, {"mult", tensor(g.algebra.mult)},
                                           {"unit", vec(g.algebra.unit)}};
    b.check(verify_assoc_unital(g));
  });
}

EnvelopingActionData enveloping_or_globalize(const SpecFile& spec) {
  if (spec.theta && spec.global) return spec.enveloping();
  return globalize_group_partial(spec.partial());
}

void cmd_globalize(const SpecFile& spec, Builder& b, RunResult& out) {
  guarded(b, [&] {
    const EnvelopingActionData env = globalize_group_partial(spec.partial());
    b.check(verify_enveloping(env));
    b.check(verify_globalization_round_trip(env));
    b.derived["B_dim"] = env.global.B.dim();
    b.derived["theta"] = mat_rows(env.theta);
    out.spec_out = serialize_spec(spec_from_enveloping(env));
  });
}

void cmd_morita(const SpecFile& spec, Builder& b) {
  guarded(b, [&] {
    const EnvelopingActionData env = enveloping_or_globalize(spec);
    const MoritaContext ctx = build_morita_context(env);
    PhiEmbedding phi = phi_embed(env, ctx.R);
    b.check(std::move(phi.report));
    b.check(verify_module_structures(ctx));
    MoritaPairings p = verify_morita_pairings(ctx);
    b.check(std::move(p.report));
    b.derived["R_dim"] = ctx.R.dim();
    b.derived["S_dim"] = ctx.S.dim();
    b.derived["phi_rank"] = ctx.phi_image.dim();
    b.derived["M_dim"] = ctx.M.dim();
    b.derived["N_dim"] = ctx.N.dim();
    b.derived["sigma_rank"] = p.sigma_rank;
    b.derived["tau_rank"] = p.tau_rank;
    b.derived["sigma_surjective"] = p.sigma_surjective;
    b.derived["tau_surjective"] = p.tau_surjective;
  });
}

void cmd_gauge(const SpecFile& spec, Builder& b) {
  if (!spec.gauge) throw Error(ErrorCode::MissingObject, "missing \"gauge\"");
  guarded(b, [&] {
    const TwistedPartialAction tpa = spec.partial();
    const auto pair = weak_conv_inverse(LinMapHom{*spec.gauge}, tpa);
    if (!pair) {
      CheckReport r("weak_inverse");
      r.fail("weak convolution inverse exists", {});
      b.check(std::move(r));
      return;
    }
    b.derived["v_inverse"] = mat_rows(pair->v_inv.matrix);
    b.derived["fully_invertible"] = pair->fully_invertible;
    b.derived["gauged_cocycle"] = tensor(gauge_cocycle(tpa, *pair));
    b.derived["gauged_action"] = tensor(gauge_action(tpa, *pair));
    GaugeIsomorphism iso = gauge_isomorphism(tpa, *pair);
    b.derived["isomorphism"] = mat_rows(iso.phi);
    b.derived["inverse_isomorphism"] = mat_rows(iso.psi);
    b.check(std::move(iso.report));
    b.check(verify_equisatisfiability(tpa, *pair));
  });
}

void cmd_separability(const SpecFile& spec, Builder& b) {
  guarded(b, [&] {
    const TwistedPartialAction tpa = spec.partial();
    const CrossedProductAlgebra cp = build_partial_crossed(tpa);
    CleftData cd = (spec.gamma && spec.gamma_prime)
                       ? [&] {
                           const auto to_R = [&](const Matrix& amb) {
                             Matrix m(tpa.field(), cp.dim(), amb.cols());
                             for (std::size_t h = 0; h < amb.cols(); ++h) {
                               const auto c = cp.from_ambient(amb.column(h));
                               if (!c) throw Error(ErrorCode::ShapeError, "gamma value outside A#H");
                               m.set_column(h, *c);
                             }
                             return LinMapHom{m};
                           };
                           return make_cleft_data(cp, to_R(*spec.gamma), to_R(*spec.gamma_prime));
                         }()
                       : default_cleft_data(cp);
    b.check(verify_partially_cleft(cd));
    Vector t = spec.integral_t ? *spec.integral_t : Vector{};
    if (!spec.integral_t) {
      const SubspaceBasis ints = left_integrals(tpa.H);
      if (ints.dim() == 0) throw Error(ErrorCode::NotIntegral, "H has no nonzero left integral");
      t = ints[0];
    }
    Vector c = spec.center_c ? *spec.center_c : Vector{};
    if (!spec.center_c) {
      const auto found = find_normalizing_center(tpa, t);
      if (!found) throw Error(ErrorCode::NormalizationFailed, "no central c with t . c = 1_A");
      c = *found;
    }
    b.derived["t"] = vec(t);
    b.derived["c"] = vec(c);
    b.check(verify_centralizer_identity(cd, cp.iota(c)));
    SeparabilityResult r = separability_idempotent(cd, t, c);
    b.derived["e_lift"] = vec(r.e.lift);
    b.derived["e_coords"] = vec(r.e.coords);
    b.derived["balanced_dim"] = r.balanced.dim();
    b.derived["can_rank"] = r.can_rank;
    b.derived["can_bijective"] = r.can_bijective;
    b.check(std::move(r.report));
  });
}

std::string render_text(const Builder& b, const json& derived, std::optional<double> seconds) {
  std::ostringstream os;
  os << b.command << ": " << (b.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& e : b.errors) {
    os << "error: " << e["message"].get<std::string>() << '\n';
  }
  for (const auto& c : b.checks) os << c.summary(1);
  for (const auto& [k, v] : derived.items()) {
    if (v.is_primitive()) os << "  " << k << " = " << v.dump() << '\n';
  }
  if (seconds) os << "  wall_time_s = " << *seconds << '\n';
  return os.str();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify", "build-crossed", "globalize", "morita",
                                              "gauge",  "separability",  "report"};
  return names;
}

RunResult run(const std::string& command, const SpecFile& spec, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  set_parallelism(options.parallel);
  RunResult out;
  Builder b;
  b.command = command;
  try {
    if (command == "verify") {
      cmd_verify(spec, b);
    } else if (command == "build-crossed") {
      cmd_build_crossed(spec, b);
    } else if (command == "globalize") {
      cmd_globalize(spec, b, out);
    } else if (command == "morita") {
      cmd_morita(spec, b);
    } else if (command == "gauge") {
      cmd_gauge(spec, b);
    } else if (command == "separability") {
      cmd_separability(spec, b);
    } else if (command == "report") {
      // Every command whose inputs are present.
      cmd_verify(spec, b);
      if (spec.action) {
        cmd_build_crossed(spec, b);
        if (spec.theta || (as_group(*spec.hopf) && is_trivial_cocycle(spec.partial()))) cmd_morita(spec, b);
        if (spec.gauge) cmd_gauge(spec, b);
        if (spec.integral_t || spec.gamma) cmd_separability(spec, b);
      }
    } else {
      throw Error(ErrorCode::UnknownCommand, "unknown command \"" + command + "\"");
    }
  } catch (const Error& e) {
    b.error(e);
    b.input_error = b.input_error || is_input_error(e.code());
  }
  out.exit_code = b.input_error ? 2 : (b.passed() ? 0 : 1);

  std::optional<double> seconds;
  if (options.timing) {
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  if (options.format == OutputFormat::Text) {
    out.output = render_text(b, b.derived, seconds);
  } else {
    json o;
    o["command"] = command;
    o["passed"] = b.passed();
    o["exit_code"] = out.exit_code;
    json checks = json::array();
    for (const auto& c : b.checks) checks.push_back(report_json(c));
    o["checks"] = std::move(checks);
    o["derived"] = b.derived;
    o["errors"] = b.errors;
    o["field"] = spec.field.to_string();
    if (seconds) o["wall_time_s"] = *seconds;
    out.output = o.dump(2) + "\n";
  }
  return out;
}

RunResult run_text(const std::string& command, std::string_view spec_text, std::optional<Field> field,
                   const RunOptions& options) {
  try {
    return run(command, parse_spec(spec_text, field), options);
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = 2;
    if (options.format == OutputFormat::Text) {
      r.output = command + ": FAIL\nerror " + to_string(e.code()) + ": " + e.what() + "\n";
    } else {
      json o;
      o["command"] = command;
      o["passed"] = false;
      o["exit_code"] = 2;
      o["errors"] = json::array({{{"code", to_string(e.code())}, {"message", e.what()}}});
      r.output = o.dump(2) + "\n";
    }
    return r;
  }
}

}  // namespace pcross
