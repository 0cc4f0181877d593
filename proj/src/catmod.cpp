#include "ttg/catmod.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ttg::catmod {

/* ---------------- FunctorModule and ModuleMap basics ---------------- */

FunctorModule::FunctorModule(CatPtr c, Field f, std::vector<int> d)
    : cat(std::move(c)), field(f), dims(std::move(d)) {
  maps.reserve(cat->n_morphisms());
  for (int g = 0; g < cat->n_morphisms(); ++g)
    maps.emplace_back(field, dims[cat->tgt(g)], dims[cat->src(g)]);
  for (int x = 0; x < cat->n_objects(); ++x)
    maps[cat->identity(x)] = Matrix::identity(field, dims[x]);
}

int FunctorModule::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::vector<int> FunctorModule::offsets() const {
  std::vector<int> off(dims.size() + 1, 0);
  for (size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

void FunctorModule::validate() const {
  require(static_cast<int>(dims.size()) == cat->n_objects() &&
              static_cast<int>(maps.size()) == cat->n_morphisms(),
          errc::invalid_params, "module tables have wrong size");
  for (int f = 0; f < cat->n_morphisms(); ++f)
    require(maps[f].rows() == dims[cat->tgt(f)] &&
                maps[f].cols() == dims[cat->src(f)],
            errc::invalid_params,
            "matrix shape mismatch at " + cat->morphism(f).name);
  for (int x = 0; x < cat->n_objects(); ++x)
    require(maps[cat->identity(x)] == Matrix::identity(field, dims[x]),
            errc::check_failed,
            "identity of " + cat->object_name(x) + " does not act as 1");
  for (int f = 0; f < cat->n_morphisms(); ++f)
    for (int g = 0; g < cat->n_morphisms(); ++g) {
      if (cat->src(f) != cat->tgt(g)) continue;
      require(maps[cat->compose_raw(f, g)] == maps[f] * maps[g],
              errc::check_failed,
              "functoriality fails on " + cat->morphism(f).name + " ∘ " +
                  cat->morphism(g).name);
    }
}

bool FunctorModule::operator==(const FunctorModule& o) const {
  return fincat::same_category(cat, o.cat) && field == o.field &&
         dims == o.dims && maps == o.maps;
}

FunctorModule zero_module(CatPtr c, Field k) {
  return FunctorModule(std::move(c), k,
                       std::vector<int>(c ? c->n_objects() : 0, 0));
}

FunctorModule trivial_module(CatPtr c, Field k) {
  FunctorModule m(c, k, std::vector<int>(c->n_objects(), 1));
  for (auto& mat : m.maps) mat = Matrix::identity(k, 1);
  return m;
}

FunctorModule representable(CatPtr c, Field k, int x) {
  std::vector<int> dims(c->n_objects());
  for (int y = 0; y < c->n_objects(); ++y)
    dims[y] = static_cast<int>(c->hom(x, y).size());
  FunctorModule m(c, k, dims);
  for (int a = 0; a < c->n_morphisms(); ++a) {
    int y = c->src(a), y2 = c->tgt(a);
    Matrix mat(k, dims[y2], dims[y]);
    const auto& from = c->hom(x, y);
    const auto& to = c->hom(x, y2);
    for (size_t j = 0; j < from.size(); ++j) {
      int composed = c->compose_raw(a, from[j]);
      auto it = std::find(to.begin(), to.end(), composed);
      require(it != to.end(), errc::check_failed, "hom index out of sync");
      mat.at(static_cast<int>(it - to.begin()), static_cast<int>(j)) = k.one();
    }
    m.maps[a] = std::move(mat);
  }
  return m;
}

FunctorModule regular_module(CatPtr c, Field k) {
  std::vector<FunctorModule> parts;
  for (int x = 0; x < c->n_objects(); ++x)
    parts.push_back(representable(c, k, x));
  return direct_sum(parts).sum;
}

void ModuleMap::validate() const {
  require(fincat::same_category(src.cat, tgt.cat), errc::category_mismatch,
          "module map between different categories");
  require(src.field == tgt.field, errc::field_mismatch,
          "module map between different fields");
  const auto& c = *src.cat;
  for (int x = 0; x < c.n_objects(); ++x)
    require(comp[x].rows() == tgt.dims[x] && comp[x].cols() == src.dims[x],
            errc::invalid_params, "component shape mismatch");
  for (int f = 0; f < c.n_morphisms(); ++f) {
    require(comp[c.tgt(f)] * src.maps[f] == tgt.maps[f] * comp[c.src(f)],
            errc::check_failed,
            "naturality fails at " + c.morphism(f).name);
  }
}

bool ModuleMap::is_zero() const {
  for (const auto& m : comp)
    if (!m.is_zero()) return false;
  return true;
}

ModuleMap zero_map(FunctorModule s, FunctorModule t) {
  ModuleMap f;
  f.comp.reserve(s.cat->n_objects());
  for (int x = 0; x < s.cat->n_objects(); ++x)
    f.comp.emplace_back(s.field, t.dims[x], s.dims[x]);
  f.src = std::move(s);
  f.tgt = std::move(t);
  return f;
}

ModuleMap identity_map(const FunctorModule& m) {
  ModuleMap f;
  f.src = m;
  f.tgt = m;
  for (int x = 0; x < m.cat->n_objects(); ++x)
    f.comp.push_back(Matrix::identity(m.field, m.dims[x]));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (size_t x = 0; x < f.comp.size(); ++x)
    h.comp.push_back(g.comp[x] * f.comp[x]);
  return h;
}

ModuleMap add(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap h = a;
  for (size_t x = 0; x < h.comp.size(); ++x)
    h.comp[x] = h.comp[x] + b.comp[x];
  return h;
}

ModuleMap scale(const ModuleMap& a, const Scalar& c) {
  ModuleMap h = a;
  for (auto& m : h.comp) m = m.scaled(c);
  return h;
}

/* ---------------- category algebra table ---------------- */

AlgebraTable algebra(CatPtr c, Field k) {
  AlgebraTable t;
  t.cat = c;
  t.field = k;
  t.dim = c->n_morphisms();
  t.prod.assign(t.dim, std::vector<int>(t.dim, -1));
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) t.prod[i][j] = c->compose_raw(i, j);
  for (int x = 0; x < c->n_objects(); ++x) t.unit.push_back(c->identity(x));
  return t;
}

void AlgebraTable::check_associative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      int ij = prod[i][j];
      for (int l = 0; l < dim; ++l) {
        int jl = prod[j][l];
        int left = ij < 0 ? -1 : prod[ij][l];
        int right = jl < 0 ? -1 : prod[i][jl];
        require(left == right, errc::non_associative,
                "structure constants not associative");
      }
    }
}

/* ---------------- tensor structure ---------------- */

FunctorModule tensor(const FunctorModule& m, const FunctorModule& n) {
  require(fincat::same_category(m.cat, n.cat), errc::category_mismatch,
          "tensor of modules over different categories");
  require(m.field == n.field, errc::field_mismatch,
          "tensor of modules over different fields");
  FunctorModule r;
  r.cat = m.cat;
  r.field = m.field;
  r.dims.resize(m.dims.size());
  for (size_t x = 0; x < m.dims.size(); ++x) r.dims[x] = m.dims[x] * n.dims[x];
  for (int f = 0; f < m.cat->n_morphisms(); ++f)
    r.maps.push_back(m.maps[f].kron(n.maps[f]));
  return r;
}

ModuleMap tensor_map(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap h;
  h.src = tensor(a.src, b.src);
  h.tgt = tensor(a.tgt, b.tgt);
  for (size_t x = 0; x < a.comp.size(); ++x)
    h.comp.push_back(a.comp[x].kron(b.comp[x]));
  return h;
}

SumDecomposition direct_sum(const std::vector<FunctorModule>& parts) {
  require(!parts.empty(), errc::invalid_params, "empty direct sum");
  const auto& c = *parts[0].cat;
  Field k = parts[0].field;
  SumDecomposition d;
  FunctorModule s;
  s.cat = parts[0].cat;
  s.field = k;
  s.dims.assign(c.n_objects(), 0);
  std::vector<std::vector<int>> start(parts.size(),
                                      std::vector<int>(c.n_objects(), 0));
  for (size_t i = 0; i < parts.size(); ++i) {
    require(fincat::same_category(parts[i].cat, s.cat),
            errc::category_mismatch, "direct sum across categories");
    require(parts[i].field == k, errc::field_mismatch,
            "direct sum across fields");
    for (int x = 0; x < c.n_objects(); ++x) {
      start[i][x] = s.dims[x];
      s.dims[x] += parts[i].dims[x];
    }
  }
  for (int f = 0; f < c.n_morphisms(); ++f) {
    Matrix blk(k, s.dims[c.tgt(f)], s.dims[c.src(f)]);
    for (size_t i = 0; i < parts.size(); ++i)
      blk.set_block(start[i][c.tgt(f)], start[i][c.src(f)], parts[i].maps[f]);
    s.maps.push_back(std::move(blk));
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    ModuleMap in = zero_map(parts[i], s);
    ModuleMap pr = zero_map(s, parts[i]);
    for (int x = 0; x < c.n_objects(); ++x)
      for (int j = 0; j < parts[i].dims[x]; ++j) {
        in.comp[x].at(start[i][x] + j, j) = k.one();
        pr.comp[x].at(j, start[i][x] + j) = k.one();
      }
    d.inject.push_back(std::move(in));
    d.project.push_back(std::move(pr));
  }
  d.sum = std::move(s);
  return d;
}

/* ---------------- restriction / inclusion / filtration ---------------- */

FunctorModule restrict_to(const FunctorModule& m,
                          const fincat::Subcategory& e) {
  FunctorModule r;
  r.cat = fincat::share(e.cat);
  r.field = m.field;
  for (int x : e.obj_to_parent) r.dims.push_back(m.dims[x]);
  for (int f : e.mor_to_parent) r.maps.push_back(m.maps[f]);
  return r;
}

FunctorModule include_from(const FunctorModule& m,
                           const fincat::Subcategory& e, CatPtr parent) {
  require(fincat::is_convex(*parent, e.obj_to_parent), errc::not_convex,
          "extension by zero requires a convex subcategory");
  FunctorModule r;
  r.cat = parent;
  r.field = m.field;
  r.dims.assign(parent->n_objects(), 0);
  for (size_t i = 0; i < e.obj_to_parent.size(); ++i)
    r.dims[e.obj_to_parent[i]] = m.dims[i];
  for (int f = 0; f < parent->n_morphisms(); ++f) {
    int sf = e.mor_from_parent[f];
    if (sf >= 0)
      r.maps.push_back(m.maps[sf]);
    else
      r.maps.emplace_back(m.field, r.dims[parent->tgt(f)],
                          r.dims[parent->src(f)]);
  }
  return r;
}

FunctorModule filtration_component(const FunctorModule& m,
                                   const std::vector<int>& class_objects) {
  std::vector<char> in(m.cat->n_objects(), 0);
  for (int x : class_objects) in[x] = 1;
  FunctorModule r;
  r.cat = m.cat;
  r.field = m.field;
  r.dims.assign(m.cat->n_objects(), 0);
  for (int x = 0; x < m.cat->n_objects(); ++x)
    if (in[x]) r.dims[x] = m.dims[x];
  for (int f = 0; f < m.cat->n_morphisms(); ++f) {
    if (in[m.cat->src(f)] && in[m.cat->tgt(f)])
      r.maps.push_back(m.maps[f]);
    else
      r.maps.emplace_back(m.field, r.dims[m.cat->tgt(f)],
                          r.dims[m.cat->src(f)]);
  }
  return r;
}

std::vector<FiltrationStep> filtration(const FunctorModule& m,
                                       const fincat::IsoClassification& cl) {
  std::vector<FiltrationStep> steps;
  FunctorModule cur = m;
  while (cur.total_dim() > 0) {
    std::vector<int> support;
    for (int a = 0; a < cl.n_classes(); ++a)
      for (int y : cl.classes[a])
        if (cur.dims[y] > 0) {
          support.push_back(a);
          break;
        }
    int chosen = -1;
    for (int a : support) {
      bool maximal = true;
      for (int b : support)
        if (b != a && cl.leq[a][b]) maximal = false;
      if (maximal) {
        chosen = a;
        break;
      }
    }
    require(chosen >= 0, errc::check_failed, "no maximal support class");

    FiltrationStep st;
    st.class_id = chosen;
    st.sub = filtration_component(cur, cl.classes[chosen]);
    st.inclusion = zero_map(st.sub, cur);
    for (int y : cl.classes[chosen])
      st.inclusion.comp[y] = Matrix::identity(cur.field, cur.dims[y]);
    st.inclusion.validate();  // this is where maximality matters

    st.quotient = cur;
    for (int y : cl.classes[chosen]) {
      st.quotient.dims[y] = 0;
      for (int f = 0; f < cur.cat->n_morphisms(); ++f)
        if (cur.cat->src(f) == y || cur.cat->tgt(f) == y)
          st.quotient.maps[f] = Matrix(
              cur.field, st.quotient.dims[cur.cat->tgt(f)],
              st.quotient.dims[cur.cat->src(f)]);
    }
    st.projection = zero_map(cur, st.quotient);
    for (int y = 0; y < cur.cat->n_objects(); ++y)
      if (st.quotient.dims[y] > 0)
        st.projection.comp[y] = Matrix::identity(cur.field, cur.dims[y]);
    st.projection.validate();
    require(st.sub.total_dim() + st.quotient.total_dim() == cur.total_dim(),
            errc::check_failed, "filtration step is not exact");

    cur = st.quotient;
    steps.push_back(std::move(st));
  }
  return steps;
}

/* ---------------- submodules, kernels, quotients ---------------- */

Submodule kernel_submodule(const ModuleMap& f) {
  Submodule s;
  for (const auto& c : f.comp) s.basis.push_back(c.kernel());
  return s;
}

Submodule image_submodule(const ModuleMap& f) {
  Submodule s;
  for (const auto& c : f.comp) s.basis.push_back(c.column_space());
  return s;
}

Submodule spin(const FunctorModule& m, const std::vector<Matrix>& seeds) {
  const auto& c = *m.cat;
  Submodule s;
  for (int x = 0; x < c.n_objects(); ++x) {
    Matrix b(m.field, m.dims[x], 0);
    extend_column_basis(b, seeds[x]);
    s.basis.push_back(std::move(b));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < c.n_morphisms(); ++f) {
      if (s.basis[c.src(f)].cols() == 0) continue;
      Matrix img = m.maps[f] * s.basis[c.src(f)];
      if (!extend_column_basis(s.basis[c.tgt(f)], img).empty()) grew = true;
    }
  }
  return s;
}

SubQuotient submodule_to_module(const FunctorModule& m, const Submodule& s) {
  const auto& c = *m.cat;
  SubQuotient q;
  q.module.cat = m.cat;
  q.module.field = m.field;
  for (int x = 0; x < c.n_objects(); ++x)
    q.module.dims.push_back(s.basis[x].cols());
  for (int f = 0; f < c.n_morphisms(); ++f) {
    // express the action on the basis in basis coordinates
    Matrix rhs = m.maps[f] * s.basis[c.src(f)];
    auto a = s.basis[c.tgt(f)].solve(rhs);
    require(a.has_value(), errc::check_failed,
            "subspace family is not action-closed");
    q.module.maps.push_back(std::move(*a));
  }
  q.map.src = q.module;
  q.map.tgt = m;
  q.map.comp = s.basis;
  return q;
}

SubQuotient quotient_by(const FunctorModule& m, const Submodule& s) {
  const auto& c = *m.cat;
  std::vector<Matrix> lift, proj;
  std::vector<int> qdims;
  for (int x = 0; x < c.n_objects(); ++x) {
    Matrix base = s.basis[x];
    std::vector<int> extra =
        extend_column_basis(base, Matrix::identity(m.field, m.dims[x]));
    int r = static_cast<int>(extra.size());
    qdims.push_back(r);
    Matrix cmpl(m.field, m.dims[x], r);
    for (int j = 0; j < r; ++j) cmpl.at(extra[j], j) = m.field.one();
    lift.push_back(cmpl);
    // projection = last r coordinate rows of base^{-1}
    if (m.dims[x] == 0) {
      proj.emplace_back(m.field, 0, 0);
      continue;
    }
    auto inv = base.inverse();
    require(inv.has_value(), errc::check_failed, "basis completion failed");
    proj.push_back(inv->block(s.basis[x].cols(), 0, r, m.dims[x]));
  }
  SubQuotient q;
  q.module.cat = m.cat;
  q.module.field = m.field;
  q.module.dims = qdims;
  for (int f = 0; f < c.n_morphisms(); ++f)
    q.module.maps.push_back(proj[c.tgt(f)] * m.maps[f] * lift[c.src(f)]);
  q.map.src = m;
  q.map.tgt = q.module;
  q.map.comp = proj;
  q.section = lift;
  return q;
}

/* ---------------- hom spaces and factorizations ---------------- */

namespace {

// Unknowns: the stacked row-major entries of one matrix per object.
struct UnknownLayout {
  std::vector<int> offset;
  int total = 0;
  UnknownLayout(const FunctorModule& a, const FunctorModule& b) {
    offset.resize(a.dims.size());
    for (size_t x = 0; x < a.dims.size(); ++x) {
      offset[x] = total;
      total += a.dims[x] * b.dims[x];
    }
  }
};

// Add coefficient block for L * s_x * R into rows `row0..` of sys.
void add_sandwich(Matrix& sys, int row0, int col0, const Matrix& l,
                  const Matrix& r, bool negate) {
  Matrix block = l.kron(r.transposed());
  if (negate) block = block.negated();
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j)
      sys.at(row0 + i, col0 + j) =
          sys.field().add(sys.at(row0 + i, col0 + j), block.at(i, j));
}

std::vector<ModuleMap> maps_from_vectors(const FunctorModule& m,
                                         const FunctorModule& n,
                                         const UnknownLayout& lay,
                                         const Matrix& vectors) {
  std::vector<ModuleMap> out;
  for (int col = 0; col < vectors.cols(); ++col) {
    ModuleMap h = zero_map(m, n);
    for (size_t x = 0; x < m.dims.size(); ++x)
      for (int i = 0; i < n.dims[x]; ++i)
        for (int j = 0; j < m.dims[x]; ++j)
          h.comp[x].at(i, j) =
              vectors.at(lay.offset[x] + i * m.dims[x] + j, col);
    out.push_back(std::move(h));
  }
  return out;
}

Matrix naturality_system(const FunctorModule& m, const FunctorModule& n,
                         const UnknownLayout& lay) {
  const auto& c = *m.cat;
  int rows = 0;
  for (int f = 0; f < c.n_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    rows += n.dims[c.tgt(f)] * m.dims[c.src(f)];
  }
  Matrix sys(m.field, rows, lay.total);
  int row = 0;
  for (int f = 0; f < c.n_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    int x = c.src(f), y = c.tgt(f);
    int nr = n.dims[y] * m.dims[x];
    if (nr > 0) {
      // s_y * m(f) - n(f) * s_x = 0
      add_sandwich(sys, row, lay.offset[y],
                   Matrix::identity(m.field, n.dims[y]), m.maps[f], false);
      add_sandwich(sys, row, lay.offset[x], n.maps[f],
                   Matrix::identity(m.field, m.dims[x]), true);
    }
    row += nr;
  }
  return sys;
}

}  // namespace

std::vector<ModuleMap> hom_space(const FunctorModule& m,
                                 const FunctorModule& n) {
  require(fincat::same_category(m.cat, n.cat), errc::category_mismatch,
          "hom between modules over different categories");
  require(m.field == n.field, errc::field_mismatch,
          "hom between modules over different fields");
  UnknownLayout lay(m, n);
  if (lay.total == 0) return {};
  Matrix sys = naturality_system(m, n, lay);
  return maps_from_vectors(m, n, lay, sys.kernel());
}

std::optional<ModuleMap> lift_through(const ModuleMap& pi, const ModuleMap& f) {
  const FunctorModule& a = pi.src;  // lift lands here
  const FunctorModule& b = pi.tgt;
  const FunctorModule& x = f.src;
  require(b == f.tgt, errc::invalid_params,
          "lift_through endpoints do not line up");
  UnknownLayout lay(x, a);  // unknowns s_y : x(y) -> a(y)
  Matrix nat = naturality_system(x, a, lay);
  // constraint rows: pi_y * s_y = f_y
  int crows = 0;
  for (size_t y = 0; y < x.dims.size(); ++y) crows += b.dims[y] * x.dims[y];
  Matrix sys(x.field, nat.rows() + crows, lay.total);
  sys.set_block(0, 0, nat);
  Matrix rhs(x.field, nat.rows() + crows, 1);
  int row = nat.rows();
  for (size_t y = 0; y < x.dims.size(); ++y) {
    int nr = b.dims[y] * x.dims[y];
    if (nr > 0) {
      add_sandwich(sys, row, lay.offset[y], pi.comp[y],
                   Matrix::identity(x.field, x.dims[y]), false);
      for (int i = 0; i < b.dims[y]; ++i)
        for (int j = 0; j < x.dims[y]; ++j)
          rhs.at(row + i * x.dims[y] + j, 0) = f.comp[y].at(i, j);
    }
    row += nr;
  }
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  auto maps = maps_from_vectors(x, a, lay, *sol);
  if (maps.empty()) {
    // zero unknowns: the zero map works iff f itself is zero
    if (f.is_zero()) return zero_map(x, a);
    return std::nullopt;
  }
  return maps[0];
}

std::optional<ModuleMap> section_of(const ModuleMap& pi) {
  return lift_through(pi, identity_map(pi.tgt));
}

/* ---------------- isomorphism testing ---------------- */

namespace {

bool combo_is_invertible(const std::vector<ModuleMap>& basis,
                         const std::vector<Scalar>& coeff, ModuleMap& out) {
  ModuleMap h = zero_map(basis[0].src, basis[0].tgt);
  for (size_t i = 0; i < basis.size(); ++i)
    h = add(h, scale(basis[i], coeff[i]));
  for (const auto& c : h.comp)
    if (!(c.rows() == c.cols() && c.is_invertible())) return false;
  out = std::move(h);
  return true;
}

constexpr long long kSweepBudget = 1000000;

}  // namespace

std::optional<ModuleMap> find_isomorphism(const FunctorModule& m,
                                          const FunctorModule& n,
                                          std::uint64_t seed) {
  if (!fincat::same_category(m.cat, n.cat) || m.field != n.field ||
      m.dims != n.dims)
    return std::nullopt;
  if (m.total_dim() == 0) return zero_map(m, n);
  auto basis = hom_space(m, n);
  const size_t t = basis.size();
  if (t == 0) return std::nullopt;
  const Field k = m.field;
  ModuleMap out;

  // cheap shots first: single basis elements, then seeded random combos
  for (const auto& b : basis) {
    std::vector<Scalar> c(t, k.zero());
    c[&b - basis.data()] = k.one();
    if (combo_is_invertible(basis, c, out)) return out;
  }
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 64; ++tries) {
    std::vector<Scalar> c;
    for (size_t i = 0; i < t; ++i)
      c.push_back(k.is_fp() ? k.from_int((std::int64_t)(rng() % (std::uint64_t)k.characteristic()))
                            : k.from_int((std::int64_t)(rng() % 19) - 9));
    if (combo_is_invertible(basis, c, out)) return out;
  }

  // exact settlement
  if (k.is_fp()) {
    long long p = k.characteristic(), count = 1;
    for (size_t i = 0; i < t; ++i) {
      count *= p;
      require(count <= kSweepBudget, errc::unsupported_scale,
              "isomorphism sweep beyond budget");
    }
    std::vector<Scalar> c(t, k.zero());
    std::vector<long long> digits(t, 0);
    for (long long v = 1; v < count; ++v) {
      int i = 0;
      while (i < (int)t) {
        digits[i]++;
        if (digits[i] < p) break;
        digits[i] = 0;
        ++i;
      }
      for (size_t j = 0; j < t; ++j) c[j] = k.from_int(digits[j]);
      if (combo_is_invertible(basis, c, out)) return out;
    }
    return std::nullopt;
  }

  // Q: the product of component determinants is a polynomial of degree
  // <= total_dim in the coefficients; a full grid of size (deg+1)^t decides
  // whether it vanishes identically.
  long long deg = m.total_dim();
  long long count = 1;
  for (size_t i = 0; i < t; ++i) {
    count *= (deg + 1);
    require(count <= kSweepBudget, errc::unsupported_scale,
            "isomorphism grid beyond budget");
  }
  std::vector<long long> digits(t, 0);
  std::vector<Scalar> c(t, k.zero());
  for (long long v = 0; v < count; ++v) {
    for (size_t j = 0; j < t; ++j) c[j] = k.from_int(digits[j]);
    if (combo_is_invertible(basis, c, out)) return out;
    int i = 0;
    while (i < (int)t) {
      digits[i]++;
      if (digits[i] <= deg) break;
      digits[i] = 0;
      ++i;
    }
  }
  return std::nullopt;
}

bool modules_isomorphic(const FunctorModule& m, const FunctorModule& n,
                        std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

/* ---------------- internal hom ---------------- */

namespace {

Matrix vectorize(const ModuleMap& h) {
  int total = 0;
  for (const auto& c : h.comp) total += c.rows() * c.cols();
  Matrix v(h.src.field, total, 1);
  int row = 0;
  for (const auto& c : h.comp)
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) v.at(row++, 0) = c.at(i, j);
  return v;
}

}  // namespace

FunctorModule internal_hom(const FunctorModule& m, const FunctorModule& n) {
  require(fincat::same_category(m.cat, n.cat), errc::category_mismatch,
          "internal hom across categories");
  require(m.field == n.field, errc::field_mismatch,
          "internal hom across fields");
  const auto& c = *m.cat;
  const Field k = m.field;

  std::vector<FunctorModule> pm;            // (kC·1_x) ⊗ M per object
  std::vector<std::vector<ModuleMap>> hb;   // hom basis per object
  std::vector<Matrix> hb_mat;               // vectorized basis, by columns
  for (int x = 0; x < c.n_objects(); ++x) {
    pm.push_back(tensor(representable(m.cat, k, x), m));
    hb.push_back(hom_space(pm[x], n));
    int vlen = 0;
    for (int y = 0; y < c.n_objects(); ++y)
      vlen += n.dims[y] * pm[x].dims[y];
    Matrix bm(k, vlen, static_cast<int>(hb[x].size()));
    for (size_t i = 0; i < hb[x].size(); ++i)
      bm.set_block(0, static_cast<int>(i), vectorize(hb[x][i]));
    hb_mat.push_back(std::move(bm));
  }

  FunctorModule r;
  r.cat = m.cat;
  r.field = k;
  for (int x = 0; x < c.n_objects(); ++x)
    r.dims.push_back(static_cast<int>(hb[x].size()));

  for (int a = 0; a < c.n_morphisms(); ++a) {
    int x = c.src(a), x2 = c.tgt(a);
    Matrix mat(k, r.dims[x2], r.dims[x]);
    if (r.dims[x2] > 0 && r.dims[x] > 0) {
      // precomposition with (- ∘ a) ⊗ id : P_{x2} ⊗ M -> P_x ⊗ M
      ModuleMap rho = zero_map(pm[x2], pm[x]);
      for (int y = 0; y < c.n_objects(); ++y) {
        const auto& from = c.hom(x2, y);
        const auto& to = c.hom(x, y);
        Matrix rr(k, static_cast<int>(to.size()),
                  static_cast<int>(from.size()));
        for (size_t j = 0; j < from.size(); ++j) {
          int composed = c.compose_raw(from[j], a);
          auto it = std::find(to.begin(), to.end(), composed);
          rr.at(static_cast<int>(it - to.begin()), static_cast<int>(j)) =
              k.one();
        }
        rho.comp[y] = rr.kron(Matrix::identity(k, m.dims[y]));
      }
      for (int i = 0; i < r.dims[x]; ++i) {
        ModuleMap img = compose(hb[x][i], rho);
        auto coords = hb_mat[x2].solve(vectorize(img));
        require(coords.has_value(), errc::check_failed,
                "internal hom image not in basis span");
        for (int row = 0; row < r.dims[x2]; ++row)
          mat.at(row, i) = coords->at(row, 0);
      }
    }
    r.maps.push_back(std::move(mat));
  }
  r.validate();
  return r;
}

/* ---------------- projectivity ---------------- */

bool is_projective(const FunctorModule& m) {
  if (m.total_dim() == 0) return true;
  auto cl = fincat::classify(*m.cat);
  auto rad = algebra_radical(*m.cat, m.field, cl);
  Presentation pr = projective_presentation(m, rad, cl);
  return section_of(pr.onto).has_value();
}

/* ---------------- duals over the opposite category ---------------- */

FunctorModule dual_module(const FunctorModule& m, CatPtr op) {
  FunctorModule d;
  d.cat = op;
  d.field = m.field;
  d.dims = m.dims;
  for (const auto& mat : m.maps) d.maps.push_back(mat.transposed());
  return d;
}

ModuleMap dual_map(const ModuleMap& f, CatPtr op) {
  ModuleMap d;
  d.src = dual_module(f.tgt, op);
  d.tgt = dual_module(f.src, op);
  for (const auto& c : f.comp) d.comp.push_back(c.transposed());
  return d;
}

FunctorModule pullback(const fincat::Functor& f, const FunctorModule& m) {
  require(fincat::same_category(f.tgt, m.cat), errc::category_mismatch,
          "pullback along a functor into a different category");
  FunctorModule r;
  r.cat = f.src;
  r.field = m.field;
  for (int x = 0; x < f.src->n_objects(); ++x)
    r.dims.push_back(m.dims[f.obj_map[x]]);
  for (int g = 0; g < f.src->n_morphisms(); ++g)
    r.maps.push_back(m.maps[f.mor_map[g]]);
  return r;
}

}  // namespace ttg::catmod
