#include <algorithm>
#include <numeric>

#include "ttg/catmod.hpp"

namespace ttg::catmod {

/* ---------------- small group tables ---------------- */

int GroupTable::inverse(int a) const {
  for (int b = 0; b < n; ++b)
    if (mult[a][b] == 0) return b;
  fail(errc::check_failed, "group element without inverse");
}

int GroupTable::order_of(int a) const {
  int r = 1, x = a;
  while (x != 0) {
    x = mult[a][x];
    ++r;
  }
  return r;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mult[a][b] != mult[b][a]) return false;
  return true;
}

GroupTable group_table_from_aut(const FiniteCategory& c,
                                const std::vector<int>& aut) {
  GroupTable t;
  t.n = static_cast<int>(aut.size());
  require(t.n >= 1 && c.is_identity(aut[0]), errc::invalid_params,
          "aut list must start with the identity");
  t.mult.assign(t.n, std::vector<int>(t.n, -1));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      int composed = c.compose_raw(aut[i], aut[j]);
      auto it = std::find(aut.begin(), aut.end(), composed);
      require(it != aut.end(), errc::check_failed, "aut set not closed");
      t.mult[i][j] = static_cast<int>(it - aut.begin());
    }
  return t;
}

/* ---------------- Friedl–Rónyai radical over F_p ----------------
 *
 * For A of dimension n over the prime field F_p, lift the regular
 * representation to integer matrices and set
 *     f_k(a) = Tr(L_a^{p^k}) / p^k  (mod p).
 * Starting from I_{-1} = A, the chain
 *     I_k = { a in I_{k-1} : f_k(ab) = 0 for all b in A },  k = 0..l,
 * with p^l <= n < p^{l+1}, is a chain of subspaces computable by exact
 * linear algebra (f_k is linear on I_{k-1}), and I_l is the Jacobson
 * radical. In characteristic zero, and when p does not divide the group
 * order, the radical of a group algebra vanishes and no computation is
 * needed. The result is certified nilpotent before it is returned.
 */

namespace {

using BigMat = std::vector<std::vector<BigInt>>;

BigMat big_mul(const BigMat& a, const BigMat& b) {
  size_t n = a.size();
  BigMat r(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

BigMat big_pow(BigMat a, long long e) {
  size_t n = a.size();
  BigMat r(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  while (e > 0) {
    if (e & 1) r = big_mul(r, a);
    a = big_mul(a, a);
    e >>= 1;
  }
  return r;
}

BigInt big_trace(const BigMat& a) {
  BigInt t = 0;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// right multiplication by basis element b on a coefficient vector
std::vector<Scalar> right_mult(const GroupTable& g, const Field& k,
                               const std::vector<Scalar>& v, int b) {
  std::vector<Scalar> w(g.n, k.zero());
  for (int h = 0; h < g.n; ++h)
    w[g.mult[h][b]] = k.add(w[g.mult[h][b]], v[h]);
  return w;
}

BigMat lift_regular(const GroupTable& g, const Field& k,
                    const std::vector<Scalar>& v) {
  BigMat m(g.n, std::vector<BigInt>(g.n, 0));
  for (int a = 0; a < g.n; ++a) {
    if (k.is_zero(v[a])) continue;
    for (int h = 0; h < g.n; ++h) m[g.mult[a][h]][h] += BigInt(v[a].ip);
  }
  return m;
}

std::vector<std::vector<Scalar>> columns_of(const Matrix& m) {
  std::vector<std::vector<Scalar>> cols;
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<Scalar> v;
    for (int i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
    cols.push_back(std::move(v));
  }
  return cols;
}

void certify_nilpotent(const GroupTable& g, const Field& k,
                       const std::vector<std::vector<Scalar>>& rad) {
  if (rad.empty()) return;
  auto mult_vec = [&](const std::vector<Scalar>& u,
                      const std::vector<Scalar>& v) {
    std::vector<Scalar> w(g.n, k.zero());
    for (int a = 0; a < g.n; ++a) {
      if (k.is_zero(u[a])) continue;
      for (int b = 0; b < g.n; ++b)
        w[g.mult[a][b]] = k.add(w[g.mult[a][b]], k.mul(u[a], v[b]));
    }
    return w;
  };
  Matrix layer(k, g.n, static_cast<int>(rad.size()));
  for (size_t j = 0; j < rad.size(); ++j)
    for (int i = 0; i < g.n; ++i) layer.at(i, (int)j) = rad[j][i];
  for (int step = 0; step < g.n + 1 && layer.cols() > 0; ++step) {
    Matrix next(k, g.n, 0);
    for (const auto& j : rad)
      for (const auto& s : columns_of(layer)) {
        auto w = mult_vec(j, s);
        Matrix wc(k, g.n, 1);
        for (int i = 0; i < g.n; ++i) wc.at(i, 0) = w[i];
        if (!wc.is_zero() && !in_column_span(next, wc))
          next = next.cols() == 0 ? wc : next.hstack(wc);
      }
    layer = next;
  }
  require(layer.cols() == 0, errc::check_failed,
          "computed radical is not nilpotent");
}

}  // namespace

std::vector<std::vector<Scalar>> group_algebra_radical(const GroupTable& g,
                                                       Field k) {
  if (!k.is_fp()) return {};          // char 0: semisimple
  long long p = k.characteristic();
  if (g.n % p != 0) return {};        // p coprime to |G|: semisimple

  Matrix basis = Matrix::identity(k, g.n);
  long long pk = 1;
  for (int step = 0; pk <= g.n && basis.cols() > 0; ++step, pk *= p) {
    auto vecs = columns_of(basis);
    Matrix constraints(k, g.n, static_cast<int>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
      for (int b = 0; b < g.n; ++b) {
        auto vb = right_mult(g, k, vecs[j], b);
        BigMat lifted = lift_regular(g, k, vb);
        BigInt tr = big_trace(big_pow(lifted, pk));
        require(tr % pk == 0, errc::check_failed,
                "radical trace divisibility failed");
        BigInt red = (tr / pk) % p;
        if (red < 0) red += p;
        constraints.at(b, (int)j) = k.from_int(red.convert_to<std::int64_t>());
      }
    basis = basis * constraints.kernel();
  }
  auto rad = columns_of(basis);
  certify_nilpotent(g, k, rad);
  return rad;
}

/* ---------------- radical of a category algebra ---------------- */

std::vector<RadicalElement> algebra_radical(
    const FiniteCategory& c, Field k, const fincat::IsoClassification& cl) {
  std::vector<RadicalElement> rad;
  for (int f = 0; f < c.n_morphisms(); ++f)
    if (cl.class_of[c.src(f)] != cl.class_of[c.tgt(f)])
      rad.push_back({c.src(f), c.tgt(f), {{f, k.one()}}});

  for (int a = 0; a < cl.n_classes(); ++a) {
    GroupTable t = group_table_from_aut(c, cl.aut[a]);
    auto jg = group_algebra_radical(t, k);
    if (jg.empty()) continue;
    int rep = cl.representative[a];
    // transport isomorphisms rep -> y, smallest morphism id
    std::vector<int> theta, theta_inv;
    for (int y : cl.classes[a]) {
      int th = c.hom(rep, y).front();
      theta.push_back(th);
      theta_inv.push_back(c.inverse_of(th));
    }
    for (size_t yi = 0; yi < cl.classes[a].size(); ++yi)
      for (size_t zi = 0; zi < cl.classes[a].size(); ++zi)
        for (const auto& j : jg) {
          RadicalElement e;
          e.src = cl.classes[a][yi];
          e.tgt = cl.classes[a][zi];
          for (int i = 0; i < t.n; ++i) {
            if (k.is_zero(j[i])) continue;
            int mor = c.compose(c.compose(theta[zi], cl.aut[a][i]),
                                theta_inv[yi]);
            e.terms.push_back({mor, j[i]});
          }
          if (!e.terms.empty()) rad.push_back(std::move(e));
        }
  }
  return rad;
}

Submodule radical_submodule(const FunctorModule& m,
                            const std::vector<RadicalElement>& rad) {
  const auto& c = *m.cat;
  Submodule s;
  for (int x = 0; x < c.n_objects(); ++x)
    s.basis.emplace_back(m.field, m.dims[x], 0);
  for (const auto& e : rad) {
    if (m.dims[e.src] == 0 || m.dims[e.tgt] == 0) continue;
    Matrix block(m.field, m.dims[e.tgt], m.dims[e.src]);
    for (const auto& [mor, coeff] : e.terms)
      block = block + m.maps[mor].scaled(coeff);
    extend_column_basis(s.basis[e.tgt], block);
  }
  return s;
}

std::vector<Generator> minimal_generators(
    const FunctorModule& m, const std::vector<RadicalElement>& rad,
    const fincat::IsoClassification& cl) {
  Submodule r = radical_submodule(m, rad);
  std::vector<Generator> gens;
  for (int a = 0; a < cl.n_classes(); ++a) {
    int x = cl.representative[a];
    Matrix base = r.basis[x];
    auto extra =
        extend_column_basis(base, Matrix::identity(m.field, m.dims[x]));
    for (int idx : extra) {
      Matrix v(m.field, m.dims[x], 1);
      v.at(idx, 0) = m.field.one();
      gens.push_back({x, std::move(v)});
    }
  }
  return gens;
}

Presentation projective_presentation(const FunctorModule& m,
                                     const std::vector<RadicalElement>& rad,
                                     const fincat::IsoClassification& cl) {
  Presentation pr;
  pr.gens = minimal_generators(m, rad, cl);
  if (pr.gens.empty()) {
    pr.projective = zero_module(m.cat, m.field);
    pr.onto = zero_map(pr.projective, m);
    return pr;
  }
  std::vector<FunctorModule> parts;
  for (const auto& g : pr.gens)
    parts.push_back(representable(m.cat, m.field, g.object));
  SumDecomposition sum = direct_sum(parts);
  pr.projective = sum.sum;

  pr.onto = zero_map(pr.projective, m);
  const auto& c = *m.cat;
  for (int y = 0; y < c.n_objects(); ++y) {
    int col = 0;
    Matrix comp(m.field, m.dims[y], pr.projective.dims[y]);
    for (const auto& g : pr.gens)
      for (int f : c.hom(g.object, y)) {
        Matrix img = m.maps[f] * g.vec;
        comp.set_block(0, col, img);
        ++col;
      }
    pr.onto.comp[y] = std::move(comp);
  }
  return pr;
}

/* ---------------- one-dimensional characters ---------------- */

std::vector<std::vector<Scalar>> group_characters(const GroupTable& g,
                                                  Field k) {
  // greedy generating set
  std::vector<int> gens;
  std::vector<char> closed(g.n, 0);
  closed[0] = 1;
  int reached = 1;
  while (reached < g.n) {
    int pick = -1;
    for (int a = 0; a < g.n; ++a)
      if (!closed[a]) {
        pick = a;
        break;
      }
    gens.push_back(pick);
    // closure under existing reachables and the new generator
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < g.n; ++a) {
        if (!closed[a]) continue;
        for (int b = 0; b < g.n; ++b) {
          if (!closed[b]) continue;
          if (!closed[g.mult[a][b]]) {
            closed[g.mult[a][b]] = 1;
            ++reached;
            grew = true;
          }
        }
        if (!closed[g.mult[a][pick]]) {
          closed[g.mult[a][pick]] = 1;
          ++reached;
          grew = true;
        }
        if (!closed[g.mult[pick][a]]) {
          closed[g.mult[pick][a]] = 1;
          ++reached;
          grew = true;
        }
      }
    }
  }

  // candidate values per generator: roots of unity of the element order
  std::vector<std::vector<Scalar>> cand;
  for (int gen : gens) {
    int d = g.order_of(gen);
    std::vector<Scalar> vals;
    if (k.is_fp()) {
      for (long long c = 1; c < k.characteristic(); ++c) {
        Scalar s = k.from_int(c);
        // s^d == 1?
        Scalar acc = k.one();
        for (int i = 0; i < d; ++i) acc = k.mul(acc, s);
        if (k.eq(acc, k.one())) vals.push_back(s);
      }
    } else {
      vals.push_back(k.one());
      if (d % 2 == 0) vals.push_back(k.from_int(-1));
    }
    cand.push_back(std::move(vals));
  }

  std::vector<std::vector<Scalar>> out;
  std::vector<size_t> pick(gens.size(), 0);
  while (true) {
    // propagate the assignment across the group
    std::vector<Scalar> val(g.n, k.zero());
    std::vector<char> has(g.n, 0);
    val[0] = k.one();
    has[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int h = 0; h < g.n; ++h) {
          if (!has[h]) continue;
          int to = g.mult[gens[gi]][h];
          if (!has[to]) {
            val[to] = k.mul(cand[gi][pick[gi]], val[h]);
            has[to] = 1;
            grew = true;
          }
        }
    }
    bool ok = std::all_of(has.begin(), has.end(), [](char c) { return c; });
    for (int a = 0; ok && a < g.n; ++a)
      for (int b = 0; ok && b < g.n; ++b)
        if (!k.eq(val[g.mult[a][b]], k.mul(val[a], val[b]))) ok = false;
    if (ok) out.push_back(val);

    // next assignment
    size_t i = 0;
    while (i < gens.size()) {
      if (++pick[i] < cand[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == gens.size()) break;
    if (gens.empty()) break;
  }
  if (gens.empty()) out = {{k.one()}};
  return out;
}

}  // namespace ttg::catmod
