#include "ttg/gorcm.hpp"

#include <algorithm>
#include <numeric>

#include "ttg/io.hpp"

namespace ttg::gorcm {

using catmod::ModuleMap;

SkewAlgebra skew_algebra(const TransporterCategory& t) {
  const auto& p = *t.base.poset;
  const auto& g = t.base.group;
  SkewAlgebra a;
  std::vector<std::vector<int>> pair_id(
      p.n_morphisms(), std::vector<int>(g.order(), -1));
  for (int al = 0; al < p.n_morphisms(); ++al)
    for (int e = 0; e < g.order(); ++e) {
      pair_id[al][e] = a.dim++;
      a.basis.push_back({al, e});
    }
  // g·beta for beta = (u <= v): the unique morphism gu <= gv
  auto act_mor = [&](int e, int beta) {
    int u = t.base.act(e, p.src(beta));
    int v = t.base.act(e, p.tgt(beta));
    return p.hom(u, v).front();
  };
  a.prod.assign(a.dim, std::vector<int>(a.dim, -1));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto [alpha, e1] = a.basis[i];
      auto [beta, e2] = a.basis[j];
      int moved = act_mor(e1, beta);
      if (p.tgt(moved) != p.src(alpha)) continue;  // zero product
      a.prod[i][j] = pair_id[p.compose(alpha, moved)][g.mult(e1, e2)];
    }
  return a;
}

bool skew_iso_check(const TransporterCategory& t, Field k) {
  const auto& c = *t.cat;
  const auto& p = *t.base.poset;
  auto cat_alg = catmod::algebra(t.cat, k);
  cat_alg.check_associative();
  SkewAlgebra skew = skew_algebra(t);

  // the bijection (g, gx<=y) -> ((gx<=y), g)
  std::vector<int> phi(c.n_morphisms(), -1);
  std::vector<int> seen(skew.dim, 0);
  for (int m = 0; m < c.n_morphisms(); ++m) {
    int e = t.mor_elem[m];
    int gx = t.base.act(e, c.src(m));
    int alpha = p.hom(gx, c.tgt(m)).front();
    for (int i = 0; i < skew.dim; ++i)
      if (skew.basis[i] == std::pair{alpha, e}) {
        phi[m] = i;
        ++seen[i];
        break;
      }
    if (phi[m] < 0) return false;
  }
  if (std::count(seen.begin(), seen.end(), 1) != skew.dim) return false;

  // multiplicativity on every pair, zeros included
  for (int m1 = 0; m1 < c.n_morphisms(); ++m1)
    for (int m2 = 0; m2 < c.n_morphisms(); ++m2) {
      int cat_prod = cat_alg.prod[m1][m2];
      int skew_prod = skew.prod[phi[m1]][phi[m2]];
      if (cat_prod < 0 && skew_prod < 0) continue;
      if ((cat_prod < 0) != (skew_prod < 0)) return false;
      if (phi[cat_prod] != skew_prod) return false;
    }
  return true;
}

std::optional<int> projective_dimension(const FunctorModule& m, int cutoff) {
  auto cl = fincat::classify(*m.cat);
  auto rad = catmod::algebra_radical(*m.cat, m.field, cl);
  FunctorModule cur = m;
  for (int depth = 0; depth <= cutoff; ++depth) {
    auto pres = catmod::projective_presentation(cur, rad, cl);
    if (catmod::section_of(pres.onto).has_value()) return depth;
    cur = catmod::kernel_of(pres.onto).module;
  }
  return std::nullopt;
}

InjDimResult injective_dimension_regular(CatPtr c, Field k, int bound) {
  require(bound >= c->n_objects(), errc::invalid_params,
          "injective dimension bound must be at least |Ob C|");
  auto op = fincat::share(fincat::opposite(*c));
  FunctorModule reg = catmod::regular_module(c, k);
  FunctorModule dualreg = catmod::dual_module(reg, op);
  InjDimResult r;
  r.bound = bound;
  auto d = projective_dimension(dualreg, bound);
  r.finite = d.has_value();
  if (d) r.value = *d;
  return r;
}

GorensteinReport gorenstein_check(CatPtr c, Field k, int bound) {
  if (bound < 0) bound = c->n_objects() + 2;
  GorensteinReport rep;
  rep.left = injective_dimension_regular(c, k, bound);
  auto op = fincat::share(fincat::opposite(*c));
  rep.right = injective_dimension_regular(op, k, bound);
  rep.gorenstein = rep.left.finite && rep.right.finite;
  return rep;
}

ProjdimReport finite_projdim(const TransporterCategory& t,
                             const FunctorModule& m) {
  require(fincat::same_category(m.cat, t.cat), errc::category_mismatch,
          "module does not live over the transporter category");
  const auto& c = *t.cat;
  ProjdimReport rep;
  rep.finite = true;
  for (size_t o = 0; o < t.orbits.size(); ++o) {
    int x = t.orbits[o].front();
    OrbitVerdict v;
    v.orbit = static_cast<int>(o);
    v.representative = x;
    v.stabilizer = groupact::subgroup_info(t.base.group, t.isotropy[x]);

    // the value M(x) as a module over the stabilizer group algebra
    auto subcat = fincat::share(
        groupact::subgroup_as_category(t.base.group, t.isotropy[x]));
    FunctorModule value(subcat, m.field, {m.dims[x]});
    for (size_t i = 0; i < t.isotropy[x].size(); ++i) {
      int g = t.isotropy[x][i];
      int mor = -1;
      for (int f : c.hom(x, x))
        if (t.mor_elem[f] == g) {
          mor = f;
          break;
        }
      require(mor >= 0, errc::check_failed, "stabilizer morphism missing");
      value.maps[i] = m.maps[mor];
    }
    value.validate();
    v.value_projective = catmod::is_projective(value);
    if (!v.value_projective) {
      rep.finite = false;
      rep.failing_orbits.push_back(static_cast<int>(o));
    }
    rep.orbits.push_back(std::move(v));
  }
  return rep;
}

bool finite_projdim_oracle(const FunctorModule& m, int cutoff) {
  return projective_dimension(m, cutoff).has_value();
}

CMSpectrumDescriptor cm_spectrum(const TransporterCategory& t, Field k) {
  CMSpectrumDescriptor out;
  out.ambient = ttspec::spc_ei(t.cat, k);
  out.localization =
      "D^b(proj) -> D^b(mod) -> CM, CM components keep the primes "
      "containing D^b(proj)";
  require(out.ambient.components.size() == t.orbits.size(),
          errc::check_failed,
          "spectrum components do not match orbits");
  for (size_t o = 0; o < t.orbits.size(); ++o) {
    int x = t.orbits[o].front();
    CMComponent comp;
    comp.orbit = static_cast<int>(o);
    comp.orbit_name = t.cat->object_name(x);
    comp.stabilizer = groupact::subgroup_info(t.base.group, t.isotropy[x]);
    bool semisimple =
        k.characteristic() == 0 ||
        comp.stabilizer.order % k.characteristic() != 0;
    if (semisimple) {
      comp.kind = CMKind::Empty;
      comp.label = "(empty)";
    } else {
      comp.kind = CMKind::SymbolicProjH;
      comp.label = "Proj H(" + comp.stabilizer.name + "; " + k.name() + ")";
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace ttg::gorcm
