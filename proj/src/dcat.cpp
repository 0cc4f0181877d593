#include "ttg/dcat.hpp"

#include <algorithm>

namespace ttg::dcat {

using catmod::direct_sum;
using catmod::zero_map;
using catmod::zero_module;

int BoundedComplex::total_dim() const {
  int t = 0;
  for (const auto& m : terms) t += m.total_dim();
  return t;
}

void BoundedComplex::validate() const {
  require(lo >= kMinDegree && (empty() || hi() <= kMaxDegree),
          errc::unsupported_scale, "complex leaves the degree window");
  for (const auto& t : terms) t.validate();
  require(diffs.size() == (terms.size() > 1 ? terms.size() - 1 : 0),
          errc::invalid_params, "differential count mismatch");
  for (size_t i = 0; i < diffs.size(); ++i) {
    require(diffs[i].src == terms[i] && diffs[i].tgt == terms[i + 1],
            errc::invalid_params, "differential endpoints mismatch");
    diffs[i].validate();
  }
  for (size_t i = 0; i + 1 < diffs.size(); ++i)
    require(catmod::compose(diffs[i + 1], diffs[i]).is_zero(),
            errc::check_failed, "d∘d is nonzero");
}

void BoundedComplex::normalize() {
  while (!terms.empty() && terms.front().total_dim() == 0) {
    terms.erase(terms.begin());
    if (!diffs.empty()) diffs.erase(diffs.begin());
    ++lo;
  }
  while (!terms.empty() && terms.back().total_dim() == 0) {
    terms.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  if (terms.empty()) lo = 0;
}

BoundedComplex zero_complex(CatPtr c, Field k) {
  BoundedComplex z;
  z.cat = std::move(c);
  z.field = k;
  return z;
}

BoundedComplex stalk_complex(FunctorModule m, int degree) {
  BoundedComplex c;
  c.cat = m.cat;
  c.field = m.field;
  c.lo = degree;
  c.terms.push_back(std::move(m));
  c.normalize();
  return c;
}

BoundedComplex two_term_complex(const ModuleMap& d, int degree) {
  BoundedComplex c;
  c.cat = d.src.cat;
  c.field = d.src.field;
  c.lo = degree;
  c.terms = {d.src, d.tgt};
  c.diffs = {d};
  c.normalize();
  return c;
}

BoundedComplex shift(const BoundedComplex& c, int s) {
  BoundedComplex r = c;
  r.lo = c.lo - s;
  if (s % 2 != 0)
    for (auto& d : r.diffs)
      d = catmod::scale(d, c.field.from_int(-1));
  require(r.empty() || (r.lo >= kMinDegree && r.hi() <= kMaxDegree),
          errc::unsupported_scale, "shift leaves the degree window");
  return r;
}

BoundedComplex direct_sum_complex(const std::vector<BoundedComplex>& parts) {
  require(!parts.empty(), errc::invalid_params, "empty complex sum");
  BoundedComplex r = zero_complex(parts[0].cat, parts[0].field);
  int lo = kMaxDegree + 1, hi = kMinDegree - 1;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    lo = std::min(lo, p.lo);
    hi = std::max(hi, p.hi());
  }
  if (lo > hi) return r;
  r.lo = lo;
  // per-degree, per-part offsets inside the summed term, per object
  auto dims_at = [&](const BoundedComplex& p, int d, int x) {
    return p.has_term(d) ? p.term(d).dims[x] : 0;
  };
  for (int d = lo; d <= hi; ++d) {
    std::vector<FunctorModule> ts;
    for (const auto& p : parts)
      ts.push_back(p.has_term(d) ? p.term(d) : zero_module(r.cat, r.field));
    r.terms.push_back(direct_sum(ts).sum);
  }
  for (int d = lo; d < hi; ++d) {
    ModuleMap blk = zero_map(r.term(d), r.term(d + 1));
    for (int x = 0; x < r.cat->n_objects(); ++x) {
      int row0 = 0, col0 = 0;
      for (const auto& p : parts) {
        if (p.has_term(d) && p.has_term(d + 1))
          blk.comp[x].set_block(row0, col0, p.diffs[d - p.lo].comp[x]);
        row0 += dims_at(p, d + 1, x);
        col0 += dims_at(p, d, x);
      }
    }
    r.diffs.push_back(std::move(blk));
  }
  r.normalize();
  return r;
}

int GradedModule::total_dim() const {
  int t = 0;
  for (const auto& p : pieces) t += p.total_dim();
  return t;
}

void GradedModule::normalize(CatPtr, Field) {
  while (!pieces.empty() && pieces.front().total_dim() == 0) {
    pieces.erase(pieces.begin());
    ++lo;
  }
  while (!pieces.empty() && pieces.back().total_dim() == 0) pieces.pop_back();
}

CohomologyData cohomology_with_lifts(const BoundedComplex& c) {
  CohomologyData out;
  out.h.lo = c.lo;
  for (int d = c.lo; !c.empty() && d <= c.hi(); ++d) {
    // kernel of the outgoing differential
    catmod::SubQuotient ker;
    if (d < c.hi()) {
      ker = catmod::kernel_of(c.diffs[d - c.lo]);
    } else {
      ker.module = c.term(d);
      ker.map = catmod::identity_map(ker.module);
    }
    // image of the incoming differential, in kernel coordinates
    catmod::Submodule img_in_ker;
    for (int x = 0; x < c.cat->n_objects(); ++x) {
      if (d > c.lo) {
        Matrix img = c.diffs[d - 1 - c.lo].comp[x].column_space();
        auto coords = ker.map.comp[x].solve(img);
        require(coords.has_value(), errc::check_failed,
                "image does not land in the kernel");
        img_in_ker.basis.push_back(coords->column_space());
      } else {
        img_in_ker.basis.emplace_back(c.field, ker.module.dims[x], 0);
      }
    }
    auto q = catmod::quotient_by(ker.module, img_in_ker);
    std::vector<Matrix> lifts, kers, projs;
    for (int x = 0; x < c.cat->n_objects(); ++x) {
      lifts.push_back(ker.map.comp[x] * q.section[x]);
      kers.push_back(ker.map.comp[x]);
      projs.push_back(q.map.comp[x]);
    }
    out.h.pieces.push_back(std::move(q.module));
    out.lift.push_back(std::move(lifts));
    out.ker_incl.push_back(std::move(kers));
    out.cls_proj.push_back(std::move(projs));
  }
  // strip zero outer pieces, keeping the tables aligned
  while (!out.h.pieces.empty() && out.h.pieces.front().total_dim() == 0) {
    out.h.pieces.erase(out.h.pieces.begin());
    out.lift.erase(out.lift.begin());
    out.ker_incl.erase(out.ker_incl.begin());
    out.cls_proj.erase(out.cls_proj.begin());
    ++out.h.lo;
  }
  while (!out.h.pieces.empty() && out.h.pieces.back().total_dim() == 0) {
    out.h.pieces.pop_back();
    out.lift.pop_back();
    out.ker_incl.pop_back();
    out.cls_proj.pop_back();
  }
  return out;
}

Matrix CohomologyData::reduce(int degree, int object,
                              const Matrix& cocycle) const {
  int i = degree - h.lo;
  auto coords = ker_incl[i][object].solve(cocycle);
  require(coords.has_value(), errc::check_failed,
          "vector to reduce is not a cocycle");
  return cls_proj[i][object] * *coords;
}

GradedModule cohomology(const BoundedComplex& c) {
  return cohomology_with_lifts(c).h;
}

BoundedComplex tensor_complex(const BoundedComplex& a,
                              const BoundedComplex& b) {
  require(fincat::same_category(a.cat, b.cat), errc::category_mismatch,
          "tensor of complexes over different categories");
  require(a.field == b.field, errc::field_mismatch,
          "tensor of complexes over different fields");
  BoundedComplex r = zero_complex(a.cat, a.field);
  if (a.empty() || b.empty()) return r;
  int lo = a.lo + b.lo, hi = a.hi() + b.hi();
  require(lo >= kMinDegree && hi <= kMaxDegree, errc::unsupported_scale,
          "tensor complex leaves the degree window");
  r.lo = lo;

  // blocks (i, j) with i+j = n, ordered by ascending i
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::vector<catmod::SumDecomposition> sums;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::pair<int, int>> blk;
    std::vector<FunctorModule> parts;
    for (int i = a.lo; i <= a.hi(); ++i) {
      int j = n - i;
      if (!b.has_term(j)) continue;
      blk.push_back({i, j});
      parts.push_back(catmod::tensor(a.term(i), b.term(j)));
    }
    if (parts.empty()) parts.push_back(zero_module(r.cat, r.field));
    sums.push_back(direct_sum(parts));
    blocks.push_back(std::move(blk));
    r.terms.push_back(sums.back().sum);
  }

  for (int n = lo; n < hi; ++n) {
    ModuleMap dmap = zero_map(r.term(n), r.term(n + 1));
    const auto& from = blocks[n - lo];
    const auto& to = blocks[n + 1 - lo];
    for (size_t bi = 0; bi < from.size(); ++bi) {
      auto [i, j] = from[bi];
      // d_a ⊗ id : (i,j) -> (i+1,j)
      if (a.has_term(i + 1)) {
        auto it = std::find(to.begin(), to.end(), std::pair{i + 1, j});
        if (it != to.end()) {
          size_t ti = static_cast<size_t>(it - to.begin());
          ModuleMap part = catmod::tensor_map(
              a.diffs[i - a.lo], catmod::identity_map(b.term(j)));
          dmap = catmod::add(
              dmap, catmod::compose(
                        sums[n + 1 - lo].inject[ti],
                        catmod::compose(part, sums[n - lo].project[bi])));
        }
      }
      // (-1)^i id ⊗ d_b : (i,j) -> (i,j+1)
      if (b.has_term(j + 1)) {
        auto it = std::find(to.begin(), to.end(), std::pair{i, j + 1});
        if (it != to.end()) {
          size_t ti = static_cast<size_t>(it - to.begin());
          ModuleMap part = catmod::tensor_map(catmod::identity_map(a.term(i)),
                                              b.diffs[j - b.lo]);
          if (i % 2 != 0) part = catmod::scale(part, r.field.from_int(-1));
          dmap = catmod::add(
              dmap, catmod::compose(
                        sums[n + 1 - lo].inject[ti],
                        catmod::compose(part, sums[n - lo].project[bi])));
        }
      }
    }
    r.diffs.push_back(std::move(dmap));
  }
  r.normalize();
  return r;
}

BoundedComplex tensor_power(const BoundedComplex& a, int n) {
  require(n >= 1, errc::invalid_params, "tensor power needs n >= 1");
  BoundedComplex r = a;
  for (int i = 1; i < n; ++i) r = tensor_complex(r, a);
  return r;
}

/*
 * The canonical map H*(a) ⊗ H*(b) -> H*(a ⊗ b) sends a pair of classes to
 * the class of the tensor of their representing cocycles. Over a field it
 * is an isomorphism degreewise; we construct the map explicitly, verify it
 * is a module map, and check componentwise invertibility. No search.
 */
bool kunneth_check(const BoundedComplex& a, const BoundedComplex& b,
                   std::uint64_t) {
  auto t = tensor_complex(a, b);
  CohomologyData ha = cohomology_with_lifts(a), hb = cohomology_with_lifts(b);
  CohomologyData ht = cohomology_with_lifts(t);
  const auto& c = *a.cat;
  const Field k = a.field;

  int lo = ht.h.lo, hi = ht.h.lo + (int)ht.h.pieces.size() - 1;
  if (!ha.h.pieces.empty() && !hb.h.pieces.empty()) {
    lo = std::min(lo, ha.h.lo + hb.h.lo);
    hi = std::max(hi, ha.h.lo + (int)ha.h.pieces.size() + hb.h.lo +
                          (int)hb.h.pieces.size() - 2);
  }
  for (int n = lo; n <= hi; ++n) {
    std::vector<FunctorModule> parts;
    std::vector<std::pair<int, int>> blocks;
    for (int i = ha.h.lo; i < ha.h.lo + (int)ha.h.pieces.size(); ++i) {
      int j = n - i;
      if (!hb.h.has(j)) continue;
      parts.push_back(catmod::tensor(ha.h.at(i), hb.h.at(j)));
      blocks.push_back({i, j});
    }
    FunctorModule rhs =
        parts.empty() ? zero_module(a.cat, k) : direct_sum(parts).sum;
    FunctorModule lhs = ht.h.has(n) ? ht.h.at(n) : zero_module(a.cat, k);
    if (lhs.dims != rhs.dims) return false;
    if (rhs.total_dim() == 0) continue;

    // term(n) of the tensor complex is ⊕_{i+j=n} a_i ⊗ b_j in ascending i;
    // recover each block's offset to place lifted cocycles
    ModuleMap kappa = zero_map(rhs, lhs);
    for (int x = 0; x < c.n_objects(); ++x) {
      int col = 0;
      for (auto [i, j] : blocks) {
        int da = ha.h.at(i).dims[x], db = hb.h.at(j).dims[x];
        if (da * db == 0) continue;
        int block_off = 0;  // offset of block (i,j) inside t.term(n)(x)
        for (int i2 = a.lo; i2 <= a.hi(); ++i2) {
          int j2 = n - i2;
          if (!b.has_term(j2)) continue;
          if (i2 == i) break;
          block_off += a.term(i2).dims[x] * b.term(j2).dims[x];
        }
        const Matrix& la = ha.lift[i - ha.h.lo][x];
        const Matrix& lb = hb.lift[j - hb.h.lo][x];
        for (int u = 0; u < da; ++u)
          for (int v = 0; v < db; ++v) {
            Matrix vec(k, t.has_term(n) ? t.term(n).dims[x] : 0, 1);
            if (vec.rows() == 0) return false;
            Matrix kcol = la.column(u).kron(lb.column(v));
            for (int r = 0; r < kcol.rows(); ++r)
              vec.at(block_off + r, 0) = kcol.at(r, 0);
            Matrix cls = ht.reduce(n, x, vec);
            for (int r = 0; r < cls.rows(); ++r)
              kappa.comp[x].at(r, col) = cls.at(r, 0);
            ++col;
          }
      }
    }
    kappa.validate();  // the canonical map is natural
    for (int x = 0; x < c.n_objects(); ++x)
      if (!(kappa.comp[x].rows() == kappa.comp[x].cols() &&
            kappa.comp[x].is_invertible()))
        return false;
  }
  return true;
}

ModuleMap ChainMap::component(int d) const {
  if (d >= lo && d < lo + static_cast<int>(comps.size())) return comps[d - lo];
  return zero_map(src.has_term(d) ? src.term(d) : zero_module(src.cat, src.field),
                  tgt.has_term(d) ? tgt.term(d) : zero_module(src.cat, src.field));
}

void ChainMap::validate() const {
  for (size_t i = 0; i < comps.size(); ++i) {
    int d = lo + static_cast<int>(i);
    require(src.has_term(d) && tgt.has_term(d), errc::not_chain_map,
            "chain map component outside both complexes");
    require(comps[i].src == src.term(d) && comps[i].tgt == tgt.term(d),
            errc::not_chain_map, "chain map component endpoints mismatch");
    comps[i].validate();
  }
  int lo_all = std::min(src.lo, tgt.lo) - 1;
  int hi_all = std::max(src.empty() ? src.lo : src.hi(),
                        tgt.empty() ? tgt.lo : tgt.hi()) +
               1;
  for (int d = lo_all; d < hi_all; ++d) {
    // f_{d+1} ∘ d_src = d_tgt ∘ f_d
    auto dsrc = (src.has_term(d) && src.has_term(d + 1))
                    ? src.diffs[d - src.lo]
                    : zero_map(src.has_term(d) ? src.term(d)
                                               : zero_module(src.cat, src.field),
                               src.has_term(d + 1)
                                   ? src.term(d + 1)
                                   : zero_module(src.cat, src.field));
    auto dtgt = (tgt.has_term(d) && tgt.has_term(d + 1))
                    ? tgt.diffs[d - tgt.lo]
                    : zero_map(tgt.has_term(d) ? tgt.term(d)
                                               : zero_module(src.cat, src.field),
                               tgt.has_term(d + 1)
                                   ? tgt.term(d + 1)
                                   : zero_module(src.cat, src.field));
    auto left = catmod::compose(component(d + 1), dsrc);
    auto right = catmod::compose(dtgt, component(d));
    for (size_t x = 0; x < left.comp.size(); ++x)
      require(left.comp[x] == right.comp[x], errc::not_chain_map,
              "chain map does not commute with differentials at degree " +
                  std::to_string(d));
  }
}

ChainMap zero_chain_map(BoundedComplex src, BoundedComplex tgt) {
  ChainMap f;
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.lo = 0;
  return f;
}

std::vector<ChainMap> chain_map_space(const BoundedComplex& a,
                                      const BoundedComplex& b) {
  const Field k = a.field;
  if (a.empty() || b.empty()) return {};
  const auto& c = *a.cat;
  int wlo = std::max(a.lo, b.lo), whi = std::min(a.hi(), b.hi());
  if (wlo > whi) return {};

  // unknown layout: vec(f_{d,x}) row-major, degree-major then object-major
  std::vector<std::vector<int>> off(whi - wlo + 1,
                                    std::vector<int>(c.n_objects(), 0));
  int total = 0;
  for (int d = wlo; d <= whi; ++d)
    for (int x = 0; x < c.n_objects(); ++x) {
      off[d - wlo][x] = total;
      total += b.term(d).dims[x] * a.term(d).dims[x];
    }
  if (total == 0) return {};

  auto sandwich = [&](Matrix& sys, int row0, int col0, const Matrix& l,
                      const Matrix& r, bool neg) {
    Matrix blk = l.kron(r.transposed());
    if (neg) blk = blk.negated();
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j)
        sys.at(row0 + i, col0 + j) =
            k.add(sys.at(row0 + i, col0 + j), blk.at(i, j));
  };

  int rows = 0;
  for (int d = wlo; d <= whi; ++d) {
    for (int f = 0; f < c.n_morphisms(); ++f)
      if (!c.is_identity(f))
        rows += b.term(d).dims[c.tgt(f)] * a.term(d).dims[c.src(f)];
    if (d < whi)
      for (int x = 0; x < c.n_objects(); ++x)
        rows += b.term(d + 1).dims[x] * a.term(d).dims[x];
  }
  // boundary commutation with the zero components outside the window:
  // f_{wlo} ∘ d_a^{wlo-1} = 0 and d_b^{whi} ∘ f_{whi} = 0
  for (int x = 0; x < c.n_objects(); ++x) {
    if (a.has_term(wlo - 1))
      rows += b.term(wlo).dims[x] * a.term(wlo - 1).dims[x];
    if (b.has_term(whi + 1))
      rows += b.term(whi + 1).dims[x] * a.term(whi).dims[x];
  }

  Matrix sys(k, rows, total);
  int row = 0;
  for (int d = wlo; d <= whi; ++d) {
    const auto& ad = a.term(d);
    const auto& bd = b.term(d);
    for (int f = 0; f < c.n_morphisms(); ++f) {
      if (c.is_identity(f)) continue;
      int x = c.src(f), y = c.tgt(f);
      int nr = bd.dims[y] * ad.dims[x];
      if (nr > 0) {
        sandwich(sys, row, off[d - wlo][y], Matrix::identity(k, bd.dims[y]),
                 ad.maps[f], false);
        sandwich(sys, row, off[d - wlo][x], bd.maps[f],
                 Matrix::identity(k, ad.dims[x]), true);
      }
      row += nr;
    }
    if (d < whi) {
      const auto& da = a.diffs[d - a.lo];
      const auto& db = b.diffs[d - b.lo];
      for (int x = 0; x < c.n_objects(); ++x) {
        int nr = b.term(d + 1).dims[x] * ad.dims[x];
        if (nr > 0) {
          // f_{d+1} ∘ d_a = d_b ∘ f_d
          sandwich(sys, row, off[d + 1 - wlo][x],
                   Matrix::identity(k, b.term(d + 1).dims[x]), da.comp[x],
                   false);
          sandwich(sys, row, off[d - wlo][x], db.comp[x],
                   Matrix::identity(k, ad.dims[x]), true);
        }
        row += nr;
      }
    }
  }
  for (int x = 0; x < c.n_objects(); ++x) {
    if (a.has_term(wlo - 1)) {
      const auto& da = a.diffs[wlo - 1 - a.lo];
      int nr = b.term(wlo).dims[x] * a.term(wlo - 1).dims[x];
      if (nr > 0)
        sandwich(sys, row, off[0][x],
                 Matrix::identity(k, b.term(wlo).dims[x]), da.comp[x], false);
      row += nr;
    }
    if (b.has_term(whi + 1)) {
      const auto& db = b.diffs[whi - b.lo];
      int nr = b.term(whi + 1).dims[x] * a.term(whi).dims[x];
      if (nr > 0)
        sandwich(sys, row, off[whi - wlo][x], db.comp[x],
                 Matrix::identity(k, a.term(whi).dims[x]), false);
      row += nr;
    }
  }

  Matrix kern = sys.kernel();
  std::vector<ChainMap> out;
  for (int col = 0; col < kern.cols(); ++col) {
    ChainMap f;
    f.src = a;
    f.tgt = b;
    f.lo = wlo;
    for (int d = wlo; d <= whi; ++d) {
      ModuleMap m = zero_map(a.term(d), b.term(d));
      for (int x = 0; x < c.n_objects(); ++x)
        for (int i = 0; i < b.term(d).dims[x]; ++i)
          for (int j = 0; j < a.term(d).dims[x]; ++j)
            m.comp[x].at(i, j) =
                kern.at(off[d - wlo][x] + i * a.term(d).dims[x] + j, col);
      f.comps.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

BoundedComplex cone(const ChainMap& f) {
  const BoundedComplex& a = f.src;
  const BoundedComplex& b = f.tgt;
  BoundedComplex r = zero_complex(a.cat, a.field);
  int lo = std::min(a.lo - 1, b.lo);
  int hi = std::max(a.empty() ? lo : a.hi() - 1, b.empty() ? lo : b.hi());
  if (a.empty() && b.empty()) return r;
  r.lo = lo;
  std::vector<catmod::SumDecomposition> sums;
  for (int n = lo; n <= hi; ++n) {
    std::vector<FunctorModule> parts = {
        a.has_term(n + 1) ? a.term(n + 1) : zero_module(r.cat, r.field),
        b.has_term(n) ? b.term(n) : zero_module(r.cat, r.field)};
    sums.push_back(direct_sum(parts));
    r.terms.push_back(sums.back().sum);
  }
  for (int n = lo; n < hi; ++n) {
    const auto& s = sums[n - lo];
    const auto& t = sums[n + 1 - lo];
    ModuleMap d = zero_map(r.term(n), r.term(n + 1));
    if (a.has_term(n + 1) && a.has_term(n + 2)) {
      auto da = catmod::scale(a.diffs[n + 1 - a.lo], r.field.from_int(-1));
      d = catmod::add(d, catmod::compose(t.inject[0],
                                         catmod::compose(da, s.project[0])));
    }
    if (a.has_term(n + 1) && b.has_term(n + 1)) {
      d = catmod::add(
          d, catmod::compose(
                 t.inject[1], catmod::compose(f.component(n + 1), s.project[0])));
    }
    if (b.has_term(n) && b.has_term(n + 1)) {
      d = catmod::add(d,
                      catmod::compose(t.inject[1], catmod::compose(
                                                       b.diffs[n - b.lo],
                                                       s.project[1])));
    }
    r.diffs.push_back(std::move(d));
  }
  r.normalize();
  return r;
}

bool is_zero_object(const BoundedComplex& c) {
  return cohomology(c).total_dim() == 0;
}

bool nilpotence_check(const BoundedComplex& c, int n) {
  if (!is_zero_object(tensor_power(c, n))) return true;
  return is_zero_object(c);
}

std::vector<int> support_poset(const BoundedComplex& c) {
  GradedModule h = cohomology(c);
  std::vector<int> supp;
  for (int x = 0; x < c.cat->n_objects(); ++x) {
    int d = 0;
    for (const auto& p : h.pieces) d += p.dims[x];
    if (d > 0) supp.push_back(x);
  }
  return supp;
}

std::vector<int> coarse_support(const BoundedComplex& c,
                                const fincat::IsoClassification& cl) {
  auto supp = support_poset(c);  // objectwise cohomology support
  std::vector<char> seen(cl.n_classes(), 0);
  std::vector<int> out;
  for (int x : supp)
    if (!seen[cl.class_of[x]]) {
      seen[cl.class_of[x]] = 1;
      out.push_back(cl.class_of[x]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ttg::dcat
