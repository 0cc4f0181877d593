#include "ttg/cohom.hpp"

#include <algorithm>
#include <map>

#include "ttg/io.hpp"

namespace ttg::cohom {

using catmod::FunctorModule;
using catmod::ModuleMap;

OrderComplex order_complex(const FiniteCategory& poset, int max_dim) {
  auto leq = io::poset_leq(poset);
  OrderComplex oc;
  std::vector<std::vector<int>> cur;
  for (int x = 0; x < poset.n_objects(); ++x) cur.push_back({x});
  int d = 0;
  while (!cur.empty() && d <= max_dim) {
    oc.simplices.push_back(cur);
    std::vector<std::vector<int>> next;
    for (const auto& chain : cur)
      for (int y = 0; y < poset.n_objects(); ++y)
        if (y != chain.back() && leq[chain.back()][y]) {
          auto longer = chain;
          longer.push_back(y);
          next.push_back(std::move(longer));
        }
    cur = std::move(next);
    ++d;
  }
  return oc;
}

/* ---- shared linear cochain-complex machinery ----
 * Both engines reduce to a cochain complex of plain vector spaces; this
 * keeps chosen cocycle representatives so products can be reduced to
 * coordinates later. */

namespace {

struct VecCohomology {
  std::vector<int> dims;            // per degree 0..cutoff
  std::vector<Matrix> reps;         // cochain representatives, by columns
  std::vector<Matrix> ker_basis;    // kernel of delta^d
  std::vector<Matrix> cls_of_ker;   // kernel coords -> class coords

  // class coordinates of a cocycle given as a cochain column vector
  Matrix reduce(int d, const Matrix& cocycle) const {
    auto coords = ker_basis[d].solve(cocycle);
    require(coords.has_value(), errc::check_failed,
            "not a cocycle in degree " + std::to_string(d));
    return cls_of_ker[d] * *coords;
  }
};

// deltas[d] : C^d -> C^{d+1} for d = 0..cutoff (one past for the top kernel)
VecCohomology cochain_cohomology(const std::vector<Matrix>& deltas,
                                 const Field& k, int cutoff) {
  VecCohomology v;
  for (int d = 0; d <= cutoff; ++d) {
    Matrix ker = deltas[d].kernel();
    Matrix img = d == 0 ? Matrix(k, deltas[0].cols(), 0)
                        : deltas[d - 1].column_space();
    auto img_in_ker = ker.solve(img);
    require(img_in_ker.has_value(), errc::check_failed,
            "coboundaries are not cocycles");
    Matrix b = img_in_ker->column_space();
    // complement of b inside the kernel coordinates
    Matrix base = b;
    auto extra = extend_column_basis(
        base, Matrix::identity(k, ker.cols()));
    v.dims.push_back(static_cast<int>(extra.size()));
    Matrix lift(k, ker.cols(), static_cast<int>(extra.size()));
    for (size_t j = 0; j < extra.size(); ++j)
      lift.at(extra[j], (int)j) = k.one();
    v.reps.push_back(ker * lift);
    v.ker_basis.push_back(ker);
    if (ker.cols() == 0) {
      v.cls_of_ker.push_back(Matrix(k, 0, 0));
    } else {
      auto inv = base.inverse();
      require(inv.has_value(), errc::check_failed, "basis completion failed");
      v.cls_of_ker.push_back(
          inv->block(b.cols(), 0, static_cast<int>(extra.size()), ker.cols()));
    }
  }
  return v;
}

}  // namespace

bool graded_commutative(const GradedRingDescription& r) {
  for (const auto& [pq, table] : r.products) {
    auto [p, q] = pq;
    auto it = r.products.find({q, p});
    if (it == r.products.end()) return false;
    const auto& other = it->second;
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table[i].size(); ++j) {
        const auto& ab = table[i][j];
        const auto& ba = other[j][i];
        for (size_t t = 0; t < ab.size(); ++t) {
          Scalar want = (p * q) % 2 == 0 ? ba[t] : r.field.neg(ba[t]);
          if (!r.field.eq(ab[t], want)) return false;
        }
      }
  }
  return true;
}

GradedRingDescription simplicial_cohomology(const FiniteCategory& poset,
                                            Field k, int cutoff) {
  require(cutoff >= 0, errc::invalid_params, "cutoff must be nonnegative");
  OrderComplex oc = order_complex(poset, cutoff + 1);

  // index simplices for fast face lookup
  std::vector<std::map<std::vector<int>, int>> index(oc.simplices.size());
  for (size_t d = 0; d < oc.simplices.size(); ++d)
    for (size_t i = 0; i < oc.simplices[d].size(); ++i)
      index[d][oc.simplices[d][i]] = static_cast<int>(i);

  std::vector<Matrix> deltas;
  for (int d = 0; d <= cutoff; ++d) {
    Matrix delta(k, oc.count(d + 1), oc.count(d));
    for (int s = 0; s < oc.count(d + 1); ++s) {
      const auto& simplex = oc.simplices[d + 1][s];
      Scalar sign = k.one();
      for (size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < simplex.size(); ++i)
          if (i != drop) face.push_back(simplex[i]);
        delta.at(s, index[d].at(face)) =
            k.add(delta.at(s, index[d].at(face)), sign);
        sign = k.neg(sign);
      }
    }
    deltas.push_back(std::move(delta));
  }

  VecCohomology v = cochain_cohomology(deltas, k, cutoff);
  GradedRingDescription r;
  r.field = k;
  r.cutoff = cutoff;
  r.dims = v.dims;
  r.engine = "simplicial";

  // front/back cup product on representatives
  for (int p = 0; p <= cutoff; ++p)
    for (int q = 0; p + q <= cutoff; ++q) {
      if (v.dims[p] == 0 || v.dims[q] == 0) continue;
      std::vector<std::vector<std::vector<Scalar>>> table(
          v.dims[p],
          std::vector<std::vector<Scalar>>(v.dims[q]));
      for (int i = 0; i < v.dims[p]; ++i)
        for (int j = 0; j < v.dims[q]; ++j) {
          Matrix cup(k, oc.count(p + q), 1);
          for (int s = 0; s < oc.count(p + q); ++s) {
            const auto& simplex = oc.simplices[p + q][s];
            std::vector<int> front(simplex.begin(), simplex.begin() + p + 1);
            std::vector<int> back(simplex.begin() + p, simplex.end());
            cup.at(s, 0) = k.mul(v.reps[p].at(index[p].at(front), i),
                                 v.reps[q].at(index[q].at(back), j));
          }
          Matrix cls = v.reduce(p + q, cup);
          std::vector<Scalar> coords;
          for (int t = 0; t < cls.rows(); ++t) coords.push_back(cls.at(t, 0));
          table[i][j] = std::move(coords);
        }
      r.products[{p, q}] = std::move(table);
    }
  return r;
}

/* ---- the Ext engine ---- */

namespace {

Matrix vectorize_map(const ModuleMap& h) {
  int total = 0;
  for (const auto& c : h.comp) total += c.rows() * c.cols();
  Matrix v(h.src.field, total, 1);
  int row = 0;
  for (const auto& c : h.comp)
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) v.at(row++, 0) = c.at(i, j);
  return v;
}

ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coords,
                  const FunctorModule& src, const FunctorModule& tgt) {
  ModuleMap out = catmod::zero_map(src, tgt);
  for (size_t i = 0; i < basis.size(); ++i)
    out = catmod::add(out, catmod::scale(basis[i], coords.at((int)i, 0)));
  return out;
}

}  // namespace

GradedRingDescription ext_ring(CatPtr c, Field k, int cutoff, int dim_limit) {
  require(cutoff >= 0, errc::invalid_params, "cutoff must be nonnegative");
  auto cl = fincat::classify(*c);
  auto rad = catmod::algebra_radical(*c, k, cl);
  FunctorModule triv = catmod::trivial_module(c, k);

  // resolution P_{cutoff+1} -> ... -> P_0 ->> k
  std::vector<FunctorModule> proj;    // P_i
  std::vector<ModuleMap> d;           // d_i : P_i -> P_{i-1}, i >= 1
  std::vector<catmod::Submodule> syzygy;  // ker(P_i -> previous) inside P_i
  bool minimal = true;

  auto pres0 = catmod::projective_presentation(triv, rad, cl);
  proj.push_back(pres0.projective);
  ModuleMap onto = pres0.onto;  // P_0 ->> k
  syzygy.push_back(catmod::kernel_submodule(onto));

  for (int i = 1; i <= cutoff + 1; ++i) {
    auto sq = catmod::submodule_to_module(proj[i - 1], syzygy[i - 1]);
    auto pres = catmod::projective_presentation(sq.module, rad, cl);
    require(pres.projective.total_dim() <= dim_limit, errc::cutoff_too_large,
            "resolution exceeds the dimension limit at step " +
                std::to_string(i));
    proj.push_back(pres.projective);
    // d_i = (inclusion of syzygy) ∘ (presentation onto the syzygy)
    d.push_back(catmod::compose(sq.map, pres.onto));
    syzygy.push_back(catmod::kernel_submodule(pres.onto));
  }

  // minimality certificate: every differential lands in the radical
  for (size_t i = 0; i < d.size() && minimal; ++i) {
    auto radp = catmod::radical_submodule(proj[i], rad);
    for (int x = 0; x < c->n_objects() && minimal; ++x)
      for (int j = 0; j < d[i].comp[x].cols() && minimal; ++j)
        if (!in_column_span(radp.basis[x], d[i].comp[x].column(j)))
          minimal = false;
  }

  // Hom complex Hom(P_i, k) with delta = (- ∘ d_{i+1})
  std::vector<std::vector<ModuleMap>> hom_basis;
  std::vector<Matrix> hom_mat;  // vectorized bases
  for (int i = 0; i <= cutoff + 1; ++i) {
    hom_basis.push_back(catmod::hom_space(proj[i], triv));
    int vlen = 0;
    for (int x = 0; x < c->n_objects(); ++x)
      vlen += triv.dims[x] * proj[i].dims[x];
    Matrix bm(k, vlen, static_cast<int>(hom_basis[i].size()));
    for (size_t j = 0; j < hom_basis[i].size(); ++j)
      bm.set_block(0, (int)j, vectorize_map(hom_basis[i][j]));
    hom_mat.push_back(std::move(bm));
  }
  std::vector<Matrix> deltas;
  for (int i = 0; i <= cutoff; ++i) {
    Matrix delta(k, static_cast<int>(hom_basis[i + 1].size()),
                 static_cast<int>(hom_basis[i].size()));
    for (size_t j = 0; j < hom_basis[i].size(); ++j) {
      ModuleMap composed = catmod::compose(hom_basis[i][j], d[i]);
      auto coords = hom_mat[i + 1].solve(vectorize_map(composed));
      require(coords.has_value(), errc::check_failed,
              "hom-complex differential failed to resolve");
      for (int t = 0; t < delta.rows(); ++t)
        delta.at(t, (int)j) = coords->at(t, 0);
    }
    deltas.push_back(std::move(delta));
  }

  VecCohomology v = cochain_cohomology(deltas, k, cutoff);
  GradedRingDescription r;
  r.field = k;
  r.cutoff = cutoff;
  r.dims = v.dims;
  r.engine = "ext";
  r.minimal_certified = minimal;
  if (!minimal)
    r.notes.push_back(
        "resolution not certified minimal (non-local class group algebra); "
        "dimensions remain exact");

  // Yoneda products: lift each degree-p class to a chain map and compose
  for (int p = 0; p <= cutoff; ++p)
    for (int q = 0; p + q <= cutoff; ++q) {
      if (v.dims[p] == 0 || v.dims[q] == 0) continue;
      std::vector<std::vector<std::vector<Scalar>>> table(
          v.dims[p], std::vector<std::vector<Scalar>>(v.dims[q]));
      for (int i = 0; i < v.dims[p]; ++i) {
        // phi : P_p -> k as a module map
        ModuleMap phi = combine(hom_basis[p], v.reps[p].column(i), proj[p], triv);
        // lift to Phi_t : P_{p+t} -> P_t
        std::vector<ModuleMap> lifts;
        auto l0 = catmod::lift_through(onto, phi);
        require(l0.has_value(), errc::check_failed, "cocycle lift failed");
        lifts.push_back(*l0);
        for (int t = 1; t <= q; ++t) {
          ModuleMap rhs = catmod::compose(lifts[t - 1], d[p + t - 1]);
          auto lt = catmod::lift_through(d[t - 1], rhs);
          require(lt.has_value(), errc::check_failed, "chain lift failed");
          lifts.push_back(*lt);
        }
        for (int j = 0; j < v.dims[q]; ++j) {
          ModuleMap psi =
              combine(hom_basis[q], v.reps[q].column(j), proj[q], triv);
          ModuleMap prod = catmod::compose(psi, lifts[q]);
          auto coords = hom_mat[p + q].solve(vectorize_map(prod));
          require(coords.has_value(), errc::check_failed,
                  "product failed to land in the hom space");
          Matrix cls = v.reduce(p + q, *coords);
          std::vector<Scalar> cv;
          for (int t = 0; t < cls.rows(); ++t) cv.push_back(cls.at(t, 0));
          table[i][j] = std::move(cv);
        }
      }
      r.products[{p, q}] = std::move(table);
    }
  return r;
}

GradedRingDescription section_ring(const FiniteCategory& poset,
                                   const std::vector<int>& removed, Field k,
                                   int cutoff) {
  std::vector<char> drop(poset.n_objects(), 0);
  for (int x : removed) {
    require(x >= 0 && x < poset.n_objects(), errc::invalid_params,
            "removed object out of range");
    drop[x] = 1;
  }
  std::vector<int> keep;
  for (int x = 0; x < poset.n_objects(); ++x)
    if (!drop[x]) keep.push_back(x);
  auto sub = fincat::induced_subcategory(poset, keep);
  auto r = simplicial_cohomology(sub.cat, k, cutoff);
  std::string names;
  for (int x : keep) names += (names.empty() ? "" : ",") +
                              poset.object_name(x);
  r.notes.push_back("section over U = complement of {P^x : x removed}; "
                    "surviving objects: " + (names.empty() ? "(none)" : names));
  return r;
}

}  // namespace ttg::cohom
