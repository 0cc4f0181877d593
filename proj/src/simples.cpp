#include <algorithm>
#include <functional>

#include "ttg/catmod.hpp"

namespace ttg::catmod {

/* Simple modules of an EI category algebra are concentrated on one
 * isomorphism class and restrict to a simple module of the automorphism
 * group there. The class value is carried around along fixed transport
 * isomorphisms theta_y : rep -> y, so a morphism f : y -> z inside the
 * class acts through the group element theta_z^{-1} f theta_y. */

FunctorModule simple_from_rep(CatPtr c, Field k,
                              const fincat::IsoClassification& cl,
                              int class_id, const std::vector<Matrix>& images) {
  const auto& cat = *c;
  const auto& aut = cl.aut[class_id];
  GroupTable t = group_table_from_aut(cat, aut);
  require(static_cast<int>(images.size()) == t.n, errc::invalid_params,
          "one matrix per automorphism required");
  int vdim = images[0].rows();
  require(images[0] == Matrix::identity(k, vdim), errc::invalid_params,
          "identity must act as 1 in a representation");
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      require(images[t.mult[i][j]] == images[i] * images[j],
              errc::invalid_params, "not a group representation");

  int rep = cl.representative[class_id];
  const auto& members = cl.classes[class_id];
  std::vector<int> theta, theta_inv;
  for (int y : members) {
    int th = cat.hom(rep, y).front();
    theta.push_back(th);
    theta_inv.push_back(cat.inverse_of(th));
  }
  auto member_pos = [&](int y) {
    return static_cast<int>(
        std::find(members.begin(), members.end(), y) - members.begin());
  };
  auto aut_pos = [&](int f) {
    auto it = std::find(aut.begin(), aut.end(), f);
    require(it != aut.end(), errc::check_failed, "transport left Aut");
    return static_cast<int>(it - aut.begin());
  };

  FunctorModule s;
  s.cat = c;
  s.field = k;
  s.dims.assign(cat.n_objects(), 0);
  for (int y : members) s.dims[y] = vdim;
  for (int f = 0; f < cat.n_morphisms(); ++f) {
    int x = cat.src(f), y = cat.tgt(f);
    if (s.dims[x] > 0 && s.dims[y] > 0) {
      int a = cat.compose(cat.compose(theta_inv[member_pos(y)], f),
                          theta[member_pos(x)]);
      s.maps.push_back(images[aut_pos(a)]);
    } else {
      s.maps.emplace_back(k, s.dims[y], s.dims[x]);
    }
  }
  s.validate();
  return s;
}

/* ---------------- simplicity verification ----------------
 *
 * The generation check (every basis vector spins up to the whole module) is
 * necessary and runs over any field. Full certification sweeps all
 * one-dimensional subspaces: directly when |F|^dim is within budget, or on
 * the class value under the automorphism group when the module lives on a
 * single class with invertible transports. One-dimensional spaces are
 * simple outright. Everything beyond that is refused, not guessed.
 */

namespace {

constexpr long long kSweepBudget = 1000000;

bool spins_to_whole(const FunctorModule& m, const std::vector<Matrix>& seed) {
  Submodule s = spin(m, seed);
  int total = 0;
  for (const auto& b : s.basis) total += b.cols();
  return total == m.total_dim();
}

// all nonzero vectors of F_p^d with leading nonzero coordinate 1
bool sweep_lines_fp(int d, long long p,
                    const std::function<bool(const std::vector<long long>&)>&
                        generates) {
  std::vector<long long> digits(d, 0);
  while (true) {
    int i = d - 1;
    while (i >= 0) {
      if (++digits[i] < p) break;
      digits[i] = 0;
      --i;
    }
    if (i < 0) return true;  // wrapped: done
    int lead = 0;
    while (lead < d && digits[lead] == 0) ++lead;
    if (lead < d && digits[lead] != 1) continue;  // scalar multiple
    if (!generates(digits)) return false;
  }
}

}  // namespace

SimplicityCertificate verify_simple(const FunctorModule& m, bool strict) {
  const auto& c = *m.cat;
  const Field k = m.field;
  const int d = m.total_dim();
  require(d > 0, errc::not_simple, "the zero module is not simple");
  auto off = m.offsets();

  auto seed_from_total = [&](const std::vector<long long>& coords) {
    std::vector<Matrix> seed;
    for (int x = 0; x < c.n_objects(); ++x) {
      Matrix v(k, m.dims[x], 1);
      for (int i = 0; i < m.dims[x]; ++i)
        v.at(i, 0) = k.from_int(coords[off[x] + i]);
      seed.push_back(std::move(v));
    }
    return seed;
  };

  // basis vectors must generate
  for (int x = 0; x < c.n_objects(); ++x)
    for (int i = 0; i < m.dims[x]; ++i) {
      std::vector<long long> coords(d, 0);
      coords[off[x] + i] = 1;
      require(spins_to_whole(m, seed_from_total(coords)), errc::not_simple,
              "basis vector at " + c.object_name(x) +
                  " generates a proper submodule");
    }

  if (d == 1) return SimplicityCertificate::Proven;

  if (k.is_fp()) {
    long long p = k.characteristic(), count = 1;
    bool within = true;
    for (int i = 0; i < d && within; ++i) {
      count *= p;
      if (count > kSweepBudget) within = false;
    }
    if (within) {
      bool ok = sweep_lines_fp(d, p, [&](const std::vector<long long>& v) {
        return spins_to_whole(m, seed_from_total(v));
      });
      require(ok, errc::not_simple, "a line generates a proper submodule");
      return SimplicityCertificate::Proven;
    }
  }

  // single-class reduction: submodules correspond to Aut-submodules of the
  // class value when all in-class maps are invertible
  std::vector<int> support;
  for (int x = 0; x < c.n_objects(); ++x)
    if (m.dims[x] > 0) support.push_back(x);
  bool one_class = true;
  for (int x : support)
    for (int y : support)
      if (c.hom(x, y).empty()) one_class = false;
  if (one_class) {
    for (int x : support)
      for (int y : support)
        for (int f : c.hom(x, y))
          if (m.maps[f].rank() != m.dims[x]) one_class = false;
  }
  if (one_class) {
    int rep = support.front();
    int dv = m.dims[rep];
    if (dv == 1) return SimplicityCertificate::Proven;
    if (k.is_fp()) {
      long long p = k.characteristic(), count = 1;
      bool within = true;
      for (int i = 0; i < dv && within; ++i) {
        count *= p;
        if (count > kSweepBudget) within = false;
      }
      if (within) {
        std::vector<Matrix> gens;
        for (int f : c.hom(rep, rep)) gens.push_back(m.maps[f]);
        bool ok = sweep_lines_fp(dv, p, [&](const std::vector<long long>& v) {
          Matrix vec(k, dv, 1);
          for (int i = 0; i < dv; ++i) vec.at(i, 0) = k.from_int(v[i]);
          Matrix span(k, dv, 0);
          extend_column_basis(span, vec);
          bool grew = true;
          while (grew) {
            grew = false;
            for (const auto& g : gens)
              if (!extend_column_basis(span, g * span).empty()) grew = true;
          }
          return span.cols() == dv;
        });
        require(ok, errc::not_simple,
                "class value has a proper invariant subspace");
        return SimplicityCertificate::Proven;
      }
    }
  }

  require(!strict, errc::unsupported_scale,
          "simplicity sweep beyond budget; rerun over a small prime field");
  return SimplicityCertificate::BasisChecksOnly;
}

/* ---------------- the simple module list ---------------- */

SimpleModuleList simple_modules(
    CatPtr c, Field k,
    const std::vector<std::pair<int, std::vector<GroupRep>>>& supplied) {
  auto cl = fincat::classify(*c);
  SimpleModuleList out;
  out.complete = true;

  for (int a = 0; a < cl.n_classes(); ++a) {
    GroupTable t = group_table_from_aut(*c, cl.aut[a]);
    auto jg = group_algebra_radical(t, k);
    int ss_dim = t.n - static_cast<int>(jg.size());
    std::string cname = c->object_name(cl.representative[a]);

    std::vector<std::pair<std::string, std::vector<Matrix>>> reps;
    const std::vector<GroupRep>* user = nullptr;
    for (const auto& [cid, rs] : supplied)
      if (cid == a) user = &rs;

    if (user) {
      for (const auto& r : *user) reps.push_back({r.label, r.images});
    } else if (t.n == 1) {
      reps.push_back({"k", {Matrix::identity(k, 1)}});
    } else if (k.characteristic() != 0 && t.n % k.characteristic() == 0) {
      // modular case: the trivial module is always there
      reps.push_back({"k", std::vector<Matrix>(t.n, Matrix::identity(k, 1))});
      if (ss_dim > 1)
        out.warnings.push_back("class [" + cname +
                               "]: char divides |Aut|, emitting only the "
                               "trivial simple");
    } else if (t.is_abelian()) {
      auto chars = group_characters(t, k);
      for (size_t i = 0; i < chars.size(); ++i) {
        std::vector<Matrix> imgs;
        for (int e = 0; e < t.n; ++e) {
          Matrix mimg(k, 1, 1);
          mimg.at(0, 0) = chars[i][e];
          imgs.push_back(std::move(mimg));
        }
        reps.push_back({i == 0 ? "k" : "chi" + std::to_string(i),
                        std::move(imgs)});
      }
      if (static_cast<int>(chars.size()) < t.n)
        out.warnings.push_back("class [" + cname +
                               "]: field lacks roots of unity, character "
                               "list incomplete");
    } else {
      reps.push_back({"k", std::vector<Matrix>(t.n, Matrix::identity(k, 1))});
      out.warnings.push_back("class [" + cname +
                             "]: Aut nonabelian and no representations "
                             "supplied, emitting only the trivial simple");
    }

    int covered = 0;
    for (const auto& [label, images] : reps) {
      SimpleModule s;
      s.class_id = a;
      s.vdim = images[0].rows();
      s.label = "S(" + cname + (label == "k" ? "" : "," + label) + ")";
      s.mod = simple_from_rep(c, k, cl, a, images);
      verify_simple(s.mod, true);
      int end_dim = static_cast<int>(hom_space(s.mod, s.mod).size());
      require(end_dim >= 1 && (s.vdim * s.vdim) % end_dim == 0,
              errc::check_failed, "endomorphism dimension inconsistent");
      covered += s.vdim * s.vdim / end_dim;
      out.simples.push_back(std::move(s));
    }
    if (covered != ss_dim) out.complete = false;
  }
  return out;
}

}  // namespace ttg::catmod
