#include "pcross/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "pcross/error.hpp"

namespace pcross {
namespace {

// Delta(x) as a vector of C (x) C.
Vector comultiply(const CoalgebraData& c, const Vector& x) {
  const std::size_t n = c.dim();
  Vector out(c.field(), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& t = c.comult(i, j, k);
        if (!t.is_zero()) out[j * n + k] += x[i] * t;
      }
    }
  }
  return out;
}

// Product in A (x) A: (a (x) b)(c (x) d) = ac (x) bd.
Vector tensor_product_multiply(const AlgebraData& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  Vector out(a.field(), n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (y[q].is_zero()) continue;
      const Scalar c = x[p] * y[q];
      const Vector left = a.mult.fiber(p / n, q / n);
      const Vector right = a.mult.fiber(p % n, q % n);
      out.axpy(c, kron(left, right));
    }
  }
  return out;
}

}  // namespace

Matrix AlgebraData::left_mult(const Vector& x) const {
  return matrix_of(field(), dim(), dim(), [&](const Vector& y) { return multiply(x, y); });
}

Matrix AlgebraData::right_mult(const Vector& x) const {
  return matrix_of(field(), dim(), dim(), [&](const Vector& y) { return multiply(y, x); });
}

std::vector<SweedlerTerm> CoalgebraData::coproduct(std::size_t i, std::size_t parts) const {
  std::vector<SweedlerTerm> terms{{{i}, Scalar::one(field())}};
  for (std::size_t p = 1; p < parts; ++p) {
    std::vector<SweedlerTerm> next;
    for (const auto& t : terms) {
      const std::size_t last = t.idx.back();
      for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t k = 0; k < dim(); ++k) {
          const Scalar& c = comult(last, j, k);
          if (c.is_zero()) continue;
          SweedlerTerm n{t.idx, t.coef * c};
          n.idx.back() = j;
          n.idx.push_back(k);
          next.push_back(std::move(n));
        }
      }
    }
    terms = std::move(next);
  }
  return terms;
}

Scalar CoalgebraData::epsilon(const Vector& x) const {
  Scalar s = Scalar::zero(field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i].is_zero()) s += x[i] * counit[i];
  }
  return s;
}

CheckReport verify_algebra(const AlgebraData& a) {
  CheckReport report("algebra");
  const std::size_t n = a.dim();
  require_dims(a.mult.dim1(), n, "mult dim1");
  require_dims(a.mult.dim2(), n, "mult dim2");
  require_dims(a.mult.dim3(), n, "mult dim3");
  CheckReport assoc("associativity");
  sweep(n, assoc, [&](std::size_t i, CheckReport& r) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.mult.fiber(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        r.expect_equal("(e_i e_j) e_k = e_i (e_j e_k)", {i, j, k}, a.multiply(ij, a.basis(k)),
                       a.multiply(a.basis(i), a.mult.fiber(j, k)));
      }
    }
  });
  CheckReport unit("unit");
  for (std::size_t i = 0; i < n; ++i) {
    unit.expect_equal("1 e_i = e_i", {i}, a.multiply(a.unit, a.basis(i)), a.basis(i));
    unit.expect_equal("e_i 1 = e_i", {i}, a.multiply(a.basis(i), a.unit), a.basis(i));
  }
  report.add(std::move(assoc));
  report.add(std::move(unit));
  return report;
}

CheckReport verify_coalgebra(const CoalgebraData& c) {
  CheckReport report("coalgebra");
  const std::size_t n = c.dim();
  require_dims(c.comult.dim1(), n, "comult dim1");
  require_dims(c.comult.dim2(), n, "comult dim2");
  require_dims(c.comult.dim3(), n, "comult dim3");
  CheckReport coassoc("coassociativity");
  for (std::size_t i = 0; i < n; ++i) {
    Vector left(c.field(), n * n * n);
    Vector right(c.field(), n * n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& t = c.comult(i, j, k);
        if (t.is_zero()) continue;
        left.axpy(t, kron(comultiply(c, Vector::unit(c.field(), n, j)), Vector::unit(c.field(), n, k)));
        right.axpy(t, kron(Vector::unit(c.field(), n, j), comultiply(c, Vector::unit(c.field(), n, k))));
      }
    }
    coassoc.expect_equal("(Delta (x) id) Delta = (id (x) Delta) Delta", {i}, left, right);
  }
  CheckReport counit("counit");
  for (std::size_t i = 0; i < n; ++i) {
    Vector left(c.field(), n);
    Vector right(c.field(), n);
    for (const auto& t : c.coproduct(i, 2)) {
      left[t.idx[1]] += t.coef * c.counit[t.idx[0]];
      right[t.idx[0]] += t.coef * c.counit[t.idx[1]];
    }
    const Vector ei = Vector::unit(c.field(), n, i);
    counit.expect_equal("(epsilon (x) id) Delta = id", {i}, left, ei);
    counit.expect_equal("(id (x) epsilon) Delta = id", {i}, right, ei);
  }
  report.add(std::move(coassoc));
  report.add(std::move(counit));
  return report;
}

CheckReport verify_hopf(const HopfAlgebraData& h) {
  CheckReport report("hopf");
  const std::size_t n = h.dim();
  require_dims(h.coalgebra.dim(), n, "coalgebra dimension");
  require_dims(h.antipode.rows(), n, "antipode rows");
  require_dims(h.antipode.cols(), n, "antipode cols");
  report.add(verify_algebra(h.algebra));
  report.add(verify_coalgebra(h.coalgebra));

  CheckReport bialg("bialgebra");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = h.algebra.mult.fiber(i, j);
      bialg.expect_equal("Delta(xy) = Delta(x) Delta(y)", {i, j}, comultiply(h.coalgebra, prod),
                         tensor_product_multiply(h.algebra, comultiply(h.coalgebra, h.basis(i)),
                                                 comultiply(h.coalgebra, h.basis(j))));
      const Vector lhs{h.field(), std::vector<Scalar>{h.coalgebra.epsilon(prod)}};
      const Vector rhs{h.field(), std::vector<Scalar>{h.coalgebra.counit[i] * h.coalgebra.counit[j]}};
      bialg.expect_equal("epsilon(xy) = epsilon(x) epsilon(y)", {i, j}, lhs, rhs);
    }
  }
  bialg.expect_equal("Delta(1) = 1 (x) 1", {}, comultiply(h.coalgebra, h.one()), kron(h.one(), h.one()));
  bialg.expect_equal("epsilon(1) = 1", {}, Vector(h.field(), std::vector<Scalar>{h.coalgebra.epsilon(h.one())}),
                     Vector(h.field(), std::vector<Scalar>{Scalar::one(h.field())}));

  CheckReport anti("antipode");
  for (std::size_t i = 0; i < n; ++i) {
    Vector left(h.field(), n);
    Vector right(h.field(), n);
    for (const auto& t : h.coproduct(i, 2)) {
      left.axpy(t.coef, h.multiply(h.S(h.basis(t.idx[0])), h.basis(t.idx[1])));
      right.axpy(t.coef, h.multiply(h.basis(t.idx[0]), h.S(h.basis(t.idx[1]))));
    }
    const Vector target = h.coalgebra.counit[i] * h.one();
    anti.expect_equal("S(h1) h2 = epsilon(h) 1", {i}, left, target);
    anti.expect_equal("h1 S(h2) = epsilon(h) 1", {i}, right, target);
  }
  report.add(std::move(bialg));
  report.add(std::move(anti));
  return report;
}

bool is_cocommutative(const HopfAlgebraData& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (h.coalgebra.comult(i, j, k) != h.coalgebra.comult(i, k, j)) return false;
      }
    }
  }
  return true;
}

CoalgebraData tensor_square(const CoalgebraData& c) {
  const std::size_t n = c.dim();
  const std::size_t m = n * n;
  CoalgebraData out{Tensor3(c.field(), m, m, m), Vector(c.field(), m)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out.counit[a * n + b] = c.counit[a] * c.counit[b];
      for (const auto& ta : c.coproduct(a, 2)) {
        for (const auto& tb : c.coproduct(b, 2)) {
          out.comult(a * n + b, ta.idx[0] * n + tb.idx[0], ta.idx[1] * n + tb.idx[1]) += ta.coef * tb.coef;
        }
      }
    }
  }
  return out;
}

CoalgebraData dual_coalgebra(const AlgebraData& a) {
  const std::size_t n = a.dim();
  CoalgebraData out{Tensor3(a.field(), n, n, n), a.unit};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.comult(k, i, j) = a.mult(i, j, k);
    }
  }
  return out;
}

LinMapHom convolution_unit(const CoalgebraData& c, const AlgebraData& a) {
  Matrix m(a.field(), a.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) m.set_column(i, c.counit[i] * a.unit);
  return {m};
}

LinMapHom convolution(const LinMapHom& f, const LinMapHom& g, const CoalgebraData& c, const AlgebraData& a) {
  require_dims(f.domain_dim(), c.dim(), "convolution left domain");
  require_dims(g.domain_dim(), c.dim(), "convolution right domain");
  require_dims(f.codomain_dim(), a.dim(), "convolution left codomain");
  require_dims(g.codomain_dim(), a.dim(), "convolution right codomain");
  Matrix m(a.field(), a.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Vector col(a.field(), a.dim());
    for (const auto& t : c.coproduct(i, 2)) col.axpy(t.coef, a.multiply(f.at(t.idx[0]), g.at(t.idx[1])));
    m.set_column(i, col);
  }
  return {m};
}

Vector flatten(const LinMapHom& f) {
  Vector v(f.matrix.field(), f.codomain_dim() * f.domain_dim());
  for (std::size_t r = 0; r < f.codomain_dim(); ++r) {
    for (std::size_t c = 0; c < f.domain_dim(); ++c) v[r * f.domain_dim() + c] = f.matrix(r, c);
  }
  return v;
}

LinMapHom unflatten(const Vector& v, std::size_t codomain_dim, std::size_t domain_dim) {
  require_dims(v.size(), codomain_dim * domain_dim, "flattened map");
  Matrix m(v.field(), codomain_dim, domain_dim);
  for (std::size_t r = 0; r < codomain_dim; ++r) {
    for (std::size_t c = 0; c < domain_dim; ++c) m(r, c) = v[r * domain_dim + c];
  }
  return {m};
}

std::optional<LinMapHom> convolution_inverse(const LinMapHom& f, const CoalgebraData& c, const AlgebraData& a) {
  const std::size_t na = a.dim();
  const std::size_t nc = c.dim();
  const Field& field = a.field();
  const auto left = matrix_of(field, na * nc, na * nc, [&](const Vector& g) {
    return flatten(convolution(f, unflatten(g, na, nc), c, a));
  });
  const auto right = matrix_of(field, na * nc, na * nc, [&](const Vector& g) {
    return flatten(convolution(unflatten(g, na, nc), f, c, a));
  });
  const Vector target = flatten(convolution_unit(c, a));
  Vector rhs(field, 2 * na * nc);
  for (std::size_t i = 0; i < na * nc; ++i) {
    rhs[i] = target[i];
    rhs[na * nc + i] = target[i];
  }
  const auto x = solve(left.vstack(right), rhs);
  if (!x) return std::nullopt;
  return unflatten(*x, na, nc);
}

LinMapHom elementary_map(std::size_t coalgebra_index, std::size_t algebra_index, const CoalgebraData& c,
                         const AlgebraData& a) {
  Matrix m(a.field(), a.dim(), c.dim());
  m(algebra_index, coalgebra_index) = Scalar::one(a.field());
  return {m};
}

bool is_central_in_convolution(const LinMapHom& f, const CoalgebraData& c, const AlgebraData& a) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const LinMapHom e = elementary_map(i, j, c, a);
      if (!(convolution(f, e, c, a) == convolution(e, f, c, a))) return false;
    }
  }
  return true;
}

namespace {

SubspaceBasis integrals(const HopfAlgebraData& h, bool left) {
  const std::size_t n = h.dim();
  Matrix system(h.field(), 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix block = left ? h.algebra.left_mult(h.basis(i)) : h.algebra.right_mult(h.basis(i));
    for (std::size_t d = 0; d < n; ++d) block(d, d) -= h.coalgebra.counit[i];
    system = system.vstack(block);
  }
  return kernel_basis(system);
}

}  // namespace

SubspaceBasis left_integrals(const HopfAlgebraData& h) { return integrals(h, true); }
SubspaceBasis right_integrals(const HopfAlgebraData& h) { return integrals(h, false); }

// ---------------------------------------------------------------- groups

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order() && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw Error(ErrorCode::NonGroup, "no identity element");
}

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::NonGroup, "empty table");
  for (const auto& row : g.table) {
    if (row.size() != n) throw Error(ErrorCode::NonGroup, "table is not square");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::NonGroup, "table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          throw Error(ErrorCode::NonGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  const std::size_t e = g.identity();
  if (g.inverse.size() != n) throw Error(ErrorCode::NonGroup, "inverse list has wrong length");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.inverse[a] >= n || g.table[a][g.inverse[a]] != e || g.table[g.inverse[a]][a] != e) {
      throw Error(ErrorCode::NonGroup, "bad inverse for element " + std::to_string(a));
    }
  }
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  g.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
    g.labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t m = b.order();
  const std::size_t n = a.order() * m;
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  g.inverse.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.table[x][y] = a.table[x / m][y / m] * m + b.table[x % m][y % m];
    }
    g.inverse[x] = a.inverse[x / m] * m + b.inverse[x % m];
    g.labels.push_back("(" + a.labels[x / m] + "," + b.labels[x % m] + ")");
  }
  return g;
}

GroupTable symmetric_group3() {
  // Permutations of {0,1,2} in lexicographic order; composition (p q)(x) = p(q(x)).
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto index_of = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  GroupTable g;
  g.table.assign(6, std::vector<std::size_t>(6));
  g.inverse.resize(6);
  for (std::size_t a = 0; a < 6; ++a) {
    std::array<std::size_t, 3> inv{};
    for (std::size_t x = 0; x < 3; ++x) inv[perms[a][x]] = x;
    g.inverse[a] = index_of(inv);
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      g.table[a][b] = index_of(comp);
    }
    g.labels.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                       std::to_string(perms[a][2]) + "]");
  }
  return g;
}

std::vector<GroupTable> groups_up_to_order6() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(5), cyclic_group(6),
          symmetric_group3()};
}

HopfAlgebraData group_algebra(const Field& field, const GroupTable& g) {
  validate_group(g);
  const std::size_t n = g.order();
  HopfAlgebraData h{{g.labels, Tensor3(field, n, n, n), Vector::unit(field, n, g.identity())},
                    {Tensor3(field, n, n, n), Vector(field, n)},
                    Matrix(field, n, n)};
  if (h.algebra.labels.size() != n) {
    h.algebra.labels.clear();
    for (std::size_t i = 0; i < n; ++i) h.algebra.labels.push_back("g" + std::to_string(i));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.algebra.mult(a, b, g.table[a][b]) = Scalar::one(field);
    h.coalgebra.comult(a, a, a) = Scalar::one(field);
    h.coalgebra.counit[a] = Scalar::one(field);
    h.antipode(g.inverse[a], a) = Scalar::one(field);
  }
  return h;
}

HopfAlgebraData dual_group_algebra(const Field& field, const GroupTable& g) {
  validate_group(g);
  const std::size_t n = g.order();
  HopfAlgebraData h{{{}, Tensor3(field, n, n, n), Vector(field, n)},
                    {Tensor3(field, n, n, n), Vector::unit(field, n, g.identity())},
                    Matrix(field, n, n)};
  for (std::size_t x = 0; x < n; ++x) {
    h.algebra.labels.push_back("d" + (x < g.labels.size() ? g.labels[x] : std::to_string(x)));
    h.algebra.mult(x, x, x) = Scalar::one(field);
    h.algebra.unit[x] = Scalar::one(field);
    h.antipode(g.inverse[x], x) = Scalar::one(field);
    for (std::size_t y = 0; y < n; ++y) h.coalgebra.comult(g.table[x][y], x, y) = Scalar::one(field);
  }
  return h;
}

HopfAlgebraData trivial_hopf(const Field& field) {
  HopfAlgebraData h{{{"1"}, Tensor3(field, 1, 1, 1), Vector(field, {1})},
                    {Tensor3(field, 1, 1, 1), Vector(field, {1})},
                    Matrix::identity(field, 1)};
  h.algebra.mult(0, 0, 0) = Scalar::one(field);
  h.coalgebra.comult(0, 0, 0) = Scalar::one(field);
  return h;
}

std::optional<GroupTable> as_group(const HopfAlgebraData& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!h.coalgebra.counit[i].is_one()) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& t = h.coalgebra.comult(i, j, k);
        const bool diag = (j == i && k == i);
        if (diag ? !t.is_one() : !t.is_zero()) return std::nullopt;
      }
    }
  }
  GroupTable g;
  g.labels = h.algebra.labels;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector prod = h.algebra.mult.fiber(a, b);
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < n; ++k) {
        if (prod[k].is_zero()) continue;
        if (hit || !prod[k].is_one()) return std::nullopt;
        hit = k;
      }
      if (!hit) return std::nullopt;
      g.table[a][b] = *hit;
    }
  }
  g.inverse.resize(n);
  try {
    const std::size_t e = g.identity();
    for (std::size_t a = 0; a < n; ++a) {
      const auto it = std::find_if(g.table[a].begin(), g.table[a].end(), [e](std::size_t v) { return v == e; });
      if (it == g.table[a].end()) return std::nullopt;
      g.inverse[a] = static_cast<std::size_t>(it - g.table[a].begin());
    }
    validate_group(g);
  } catch (const Error&) {
    return std::nullopt;
  }
  return g;
}

AlgebraData componentwise_algebra(const Field& field, std::size_t n) {
  AlgebraData a{{}, Tensor3(field, n, n, n), Vector(field, n)};
  for (std::size_t i = 0; i < n; ++i) {
    a.labels.push_back("e" + std::to_string(i + 1));
    a.mult(i, i, i) = Scalar::one(field);
    a.unit[i] = Scalar::one(field);
  }
  return a;
}

AlgebraData matrix_algebra(const Field& field, std::size_t n) {
  const std::size_t d = n * n;
  AlgebraData a{{}, Tensor3(field, d, d, d), Vector(field, d)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k) a.mult(i * n + j, j * n + k, i * n + k) = Scalar::one(field);
    }
    a.unit[i * n + i] = Scalar::one(field);
  }
  return a;
}

AlgebraData upper_triangular2(const Field& field) {
  // E11 = 0, E12 = 1, E22 = 2
  AlgebraData a{{"E11", "E12", "E22"}, Tensor3(field, 3, 3, 3), Vector(field, {1, 0, 1})};
  a.mult(0, 0, 0) = Scalar::one(field);
  a.mult(0, 1, 1) = Scalar::one(field);
  a.mult(1, 2, 1) = Scalar::one(field);
  a.mult(2, 2, 2) = Scalar::one(field);
  return a;
}

}  // namespace pcross
