#include "pcross/spec_io.hpp"

#include <json.hpp>

#include "pcross/error.hpp"

namespace pcross {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void shape_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ShapeError, path + ": " + msg);
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  shape_error(path, "expected a scalar string or integer");
}

Vector parse_vector(const Field& f, const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) shape_error(path, "expected an array of length " + std::to_string(n));
  if (j.size() != n) shape_error(path, "expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_scalar(f, j[i], path + "/" + std::to_string(i));
  return v;
}

// File rows are images of basis vectors: stored as columns.
Matrix parse_map(const Field& f, const json& j, std::size_t in, std::size_t out, const std::string& path) {
  if (!j.is_array() || j.size() != in) shape_error(path, "expected " + std::to_string(in) + " rows");
  Matrix m(f, out, in);
  for (std::size_t i = 0; i < in; ++i) m.set_column(i, parse_vector(f, j[i], out, path + "/" + std::to_string(i)));
  return m;
}

Tensor3 parse_tensor(const Field& f, const json& j, std::size_t d1, std::size_t d2, std::size_t d3,
                     const std::string& path) {
  if (!j.is_array() || j.size() != d1) {
    shape_error(path, "expected a rank-3 tensor of shape [" + std::to_string(d1) + "][" + std::to_string(d2) + "][" +
                          std::to_string(d3) + "]");
  }
  Tensor3 t(f, d1, d2, d3);
  for (std::size_t i = 0; i < d1; ++i) {
    const std::string pi = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != d2) shape_error(pi, "expected " + std::to_string(d2) + " entries");
    for (std::size_t k = 0; k < d2; ++k) {
      t.set_fiber(i, k, parse_vector(f, j[i][k], d3, pi + "/" + std::to_string(k)));
    }
  }
  return t;
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::ShapeError, path + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::vector<std::string> parse_labels(const json& obj, std::size_t n, const std::string& prefix,
                                      const std::string& path) {
  std::vector<std::string> labels;
  if (obj.contains("labels")) {
    const json& l = obj.at("labels");
    if (!l.is_array() || l.size() != n) shape_error(path + "/labels", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) shape_error(path + "/labels/" + std::to_string(i), "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

std::size_t dim_of(const json& obj, const char* key, const std::string& path) {
  const json& m = require(obj, key, path);
  if (!m.is_array() || m.empty()) shape_error(path + "/" + key, "expected a non-empty array");
  return m.size();
}

std::size_t positive(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 1) shape_error(path, "expected a positive integer");
  return j.get<std::size_t>();
}

GroupTable named_group(const std::string& name, const std::string& path) {
  if (name == "S3") return symmetric_group3();
  if (name == "C2xC2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() >= 2 && name[0] == 'C') {
    std::size_t n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') shape_error(path, "unknown group \"" + name + "\"");
      n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    if (n >= 1 && n <= 64) return cyclic_group(n);
  }
  shape_error(path, "unknown group \"" + name + "\" (use Cn, C2xC2, S3 or group_table)");
}

GroupTable table_group(const json& obj, const std::string& path) {
  const json& t = require(obj, "group_table", path);
  const std::string tp = path + "/group_table";
  if (!t.is_array() || t.empty()) shape_error(tp, "expected a square index table");
  const std::size_t n = t.size();
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array() || t[i].size() != n) shape_error(tp + "/" + std::to_string(i), "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& v = t[i][j];
      if (!v.is_number_integer() || v.get<long>() < 0 || v.get<std::size_t>() >= n) {
        shape_error(tp + "/" + std::to_string(i) + "/" + std::to_string(j), "expected an index below " + std::to_string(n));
      }
      g.table[i][j] = v.get<std::size_t>();
    }
  }
  g.labels = parse_labels(obj, n, "g", path);
  g.inverse.assign(n, 0);
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (g.table[a][b] == e) {
        g.inverse[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NonGroup, "element " + std::to_string(a) + " has no inverse");
  }
  validate_group(g);
  return g;
}

AlgebraData parse_algebra(const Field& f, const json& obj, const std::string& path) {
  if (!obj.is_object()) shape_error(path, "expected an object");
  if (obj.contains("componentwise")) return componentwise_algebra(f, positive(obj.at("componentwise"), path + "/componentwise"));
  if (obj.contains("matrix")) return matrix_algebra(f, positive(obj.at("matrix"), path + "/matrix"));
  if (obj.contains("upper_triangular")) {
    if (positive(obj.at("upper_triangular"), path + "/upper_triangular") != 2) {
      shape_error(path + "/upper_triangular", "only size 2 is built in");
    }
    return upper_triangular2(f);
  }
  const std::size_t n = dim_of(obj, "unit", path);
  AlgebraData a;
  a.labels = parse_labels(obj, n, "a", path);
  a.unit = parse_vector(f, obj.at("unit"), n, path + "/unit");
  a.mult = parse_tensor(f, require(obj, "mult", path), n, n, n, path + "/mult");
  return a;
}

HopfAlgebraData parse_hopf(const Field& f, const json& obj, const std::string& path) {
  if (!obj.is_object()) shape_error(path, "expected an object");
  if (obj.contains("group")) {
    if (!obj.at("group").is_string()) shape_error(path + "/group", "expected a group name");
    return group_algebra(f, named_group(obj.at("group").get<std::string>(), path + "/group"));
  }
  if (obj.contains("dual_group")) {
    if (!obj.at("dual_group").is_string()) shape_error(path + "/dual_group", "expected a group name");
    return dual_group_algebra(f, named_group(obj.at("dual_group").get<std::string>(), path + "/dual_group"));
  }
  if (obj.contains("group_table")) return group_algebra(f, table_group(obj, path));
  if (obj.contains("trivial")) return trivial_hopf(f);
  const std::size_t n = dim_of(obj, "unit", path);
  HopfAlgebraData h;
  h.algebra.labels = parse_labels(obj, n, "h", path);
  h.algebra.unit = parse_vector(f, obj.at("unit"), n, path + "/unit");
  h.algebra.mult = parse_tensor(f, require(obj, "mult", path), n, n, n, path + "/mult");
  h.coalgebra.comult = parse_tensor(f, require(obj, "comult", path), n, n, n, path + "/comult");
  h.coalgebra.counit = parse_vector(f, require(obj, "counit", path), n, path + "/counit");
  h.antipode = parse_map(f, require(obj, "antipode", path), n, n, path + "/antipode");
  return h;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v.entries()) a.push_back(scalar_json(s));
  return a;
}

json map_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(vector_json(m.column(c)));
  return a;
}

json tensor_json(const Tensor3& t) {
  json a = json::array();
  for (std::size_t i = 0; i < t.dim1(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.dim2(); ++j) row.push_back(vector_json(t.fiber(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

json algebra_json(const AlgebraData& a) {
  json o = json::object();
  o["labels"] = a.labels;
  o["mult"] = tensor_json(a.mult);
  o["unit"] = vector_json(a.unit);
  return o;
}

json hopf_json(const HopfAlgebraData& h) {
  json o = json::object();
  o["labels"] = h.algebra.labels;
  o["mult"] = tensor_json(h.algebra.mult);
  o["unit"] = vector_json(h.algebra.unit);
  o["comult"] = tensor_json(h.coalgebra.comult);
  o["counit"] = vector_json(h.coalgebra.counit);
  o["antipode"] = map_json(h.antipode);
  return o;
}

}  // namespace

TwistedPartialAction SpecFile::partial() const {
  if (!hopf) throw Error(ErrorCode::MissingObject, "missing \"hopf\"");
  if (!algebra) throw Error(ErrorCode::MissingObject, "missing \"algebra\"");
  if (!action) throw Error(ErrorCode::MissingObject, "missing \"action\"");
  TwistedPartialAction t{*hopf, *algebra, *action, {}};
  if (cocycle) {
    t.cocycle = *cocycle;
  } else {
    t.cocycle = Tensor3(field, hopf->dim(), hopf->dim(), algebra->dim());
    for (std::size_t h = 0; h < hopf->dim(); ++h) {
      for (std::size_t l = 0; l < hopf->dim(); ++l) t.cocycle.set_fiber(h, l, t.act(h, t.e(l)));
    }
  }
  return t;
}

GlobalTwistedAction SpecFile::global_action() const {
  if (!hopf) throw Error(ErrorCode::MissingObject, "missing \"hopf\"");
  if (!global) throw Error(ErrorCode::MissingObject, "missing \"global\"");
  return {*hopf, global->algebra, global->action, global->twist};
}

EnvelopingActionData SpecFile::enveloping() const {
  if (!theta) throw Error(ErrorCode::MissingObject, "missing \"theta\"");
  return {partial(), global_action(), *theta};
}

SpecFile parse_spec(std::string_view text, std::optional<Field> field_override) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           e.what());
  }
  if (!root.is_object()) shape_error("/", "expected a JSON object");

  SpecFile s;
  if (field_override) {
    s.field = *field_override;
  } else if (root.contains("field")) {
    if (!root.at("field").is_string()) shape_error("/field", "expected a field descriptor string");
    s.field = Field::parse(root.at("field").get<std::string>());
  } else {
    throw Error(ErrorCode::ShapeError, "missing field descriptor");
  }
  static const char* known[] = {"field", "hopf", "algebra", "action", "cocycle", "global", "twist", "idempotent",
                                "theta", "gauge", "gamma", "gamma_prime", "integral_t", "center_c", "comment"};
  for (const auto& [key, value] : root.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw Error(ErrorCode::ShapeError, "/" + key + ": unknown object");
  }
  const Field& f = s.field;
  if (root.contains("hopf")) s.hopf = parse_hopf(f, root.at("hopf"), "/hopf");
  if (root.contains("algebra")) s.algebra = parse_algebra(f, root.at("algebra"), "/algebra");
  const auto need_h = [&](const char* what) -> const HopfAlgebraData& {
    if (!s.hopf) throw Error(ErrorCode::MissingObject, std::string("\"") + what + "\" needs \"hopf\"");
    return *s.hopf;
  };
  const auto need_a = [&](const char* what) -> const AlgebraData& {
    if (!s.algebra) throw Error(ErrorCode::MissingObject, std::string("\"") + what + "\" needs \"algebra\"");
    return *s.algebra;
  };
  if (root.contains("action")) {
    const std::size_t nh = need_h("action").dim();
    const std::size_t na = need_a("action").dim();
    s.action = parse_tensor(f, root.at("action"), nh, na, na, "/action");
  }
  if (root.contains("cocycle")) {
    const std::size_t nh = need_h("cocycle").dim();
    s.cocycle = parse_tensor(f, root.at("cocycle"), nh, nh, need_a("cocycle").dim(), "/cocycle");
  }
  if (root.contains("global")) {
    const json& g = root.at("global");
    const std::size_t nh = need_h("global").dim();
    GlobalSpec gs;
    gs.algebra = parse_algebra(f, require(g, "algebra", "/global"), "/global/algebra");
    const std::size_t nb = gs.algebra.dim();
    gs.action = parse_tensor(f, require(g, "action", "/global"), nh, nb, nb, "/global/action");
    const json* tw = g.contains("twist") ? &g.at("twist") : (root.contains("twist") ? &root.at("twist") : nullptr);
    if (tw) {
      gs.twist = parse_tensor(f, *tw, nh, nh, nb, g.contains("twist") ? "/global/twist" : "/twist");
    } else {
      gs.twist = Tensor3(f, nh, nh, nb);
      for (std::size_t h = 0; h < nh; ++h) {
        for (std::size_t l = 0; l < nh; ++l) {
          gs.twist.set_fiber(h, l, (s.hopf->coalgebra.counit[h] * s.hopf->coalgebra.counit[l]) * gs.algebra.unit);
        }
      }
    }
    s.global = std::move(gs);
  } else if (root.contains("twist")) {
    throw Error(ErrorCode::MissingObject, "\"twist\" needs \"global\"");
  }
  if (root.contains("idempotent")) {
    if (!s.global) throw Error(ErrorCode::MissingObject, "\"idempotent\" needs \"global\"");
    s.idempotent = parse_vector(f, root.at("idempotent"), s.global->algebra.dim(), "/idempotent");
  }
  if (root.contains("theta")) {
    if (!s.global) throw Error(ErrorCode::MissingObject, "\"theta\" needs \"global\"");
    s.theta = parse_map(f, root.at("theta"), need_a("theta").dim(), s.global->algebra.dim(), "/theta");
  }
  if (root.contains("gauge")) {
    s.gauge = parse_map(f, root.at("gauge"), need_h("gauge").dim(), need_a("gauge").dim(), "/gauge");
  }
  for (const char* key : {"gamma", "gamma_prime"}) {
    if (!root.contains(key)) continue;
    const std::size_t nh = need_h(key).dim();
    Matrix m = parse_map(f, root.at(key), nh, need_a(key).dim() * nh, std::string("/") + key);
    (std::string(key) == "gamma" ? s.gamma : s.gamma_prime) = std::move(m);
  }
  if (root.contains("integral_t")) {
    s.integral_t = parse_vector(f, root.at("integral_t"), need_h("integral_t").dim(), "/integral_t");
  }
  if (root.contains("center_c")) {
    s.center_c = parse_vector(f, root.at("center_c"), need_a("center_c").dim(), "/center_c");
  }
  return s;
}

std::string serialize_spec(const SpecFile& s) {
  json o = json::object();
  o["field"] = s.field.to_string();
  if (s.hopf) o["hopf"] = hopf_json(*s.hopf);
  if (s.algebra) o["algebra"] = algebra_json(*s.algebra);
  if (s.action) o["action"] = tensor_json(*s.action);
  if (s.cocycle) o["cocycle"] = tensor_json(*s.cocycle);
  if (s.global) {
    json g = json::object();
    g["algebra"] = algebra_json(s.global->algebra);
    g["action"] = tensor_json(s.global->action);
    g["twist"] = tensor_json(s.global->twist);
    o["global"] = std::move(g);
  }
  if (s.idempotent) o["idempotent"] = vector_json(*s.idempotent);
  if (s.theta) o["theta"] = map_json(*s.theta);
  if (s.gauge) o["gauge"] = map_json(*s.gauge);
  if (s.gamma) o["gamma"] = map_json(*s.gamma);
  if (s.gamma_prime) o["gamma_prime"] = map_json(*s.gamma_prime);
  if (s.integral_t) o["integral_t"] = vector_json(*s.integral_t);
  if (s.center_c) o["center_c"] = vector_json(*s.center_c);
  return o.dump(2) + "\n";
}

SpecFile spec_from_partial(const TwistedPartialAction& tpa) {
  SpecFile s;
  s.field = tpa.field();
  s.hopf = tpa.H;
  s.algebra = tpa.A;
  s.action = tpa.action;
  s.cocycle = tpa.cocycle;
  return s;
}

SpecFile spec_from_enveloping(const EnvelopingActionData& env) {
  SpecFile s = spec_from_partial(env.tpa);
  s.global = GlobalSpec{env.global.B, env.global.action, env.global.twist};
  s.theta = env.theta;
  s.idempotent = env.theta.apply(env.tpa.A.unit);
  return s;
}

}  // namespace pcross
