#include "ttg/fincat.hpp"

#include <algorithm>

namespace ttg::fincat {

FiniteCategory::FiniteCategory(std::vector<std::string> object_names,
                               std::vector<Morphism> morphisms,
                               std::vector<int> identity,
                               std::vector<std::vector<int>> compose)
    : object_names_(std::move(object_names)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      compose_(std::move(compose)) {
  validate();
  build_indexes();
}

bool FiniteCategory::same_morphism_shape(const FiniteCategory& o) const {
  if (morphisms_.size() != o.morphisms_.size()) return false;
  for (size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].src != o.morphisms_[i].src ||
        morphisms_[i].tgt != o.morphisms_[i].tgt)
      return false;
  return true;
}

void FiniteCategory::validate() const {
  const int nm = static_cast<int>(morphisms_.size());
  const int no = static_cast<int>(object_names_.size());
  require(static_cast<int>(identity_.size()) == no, errc::missing_identity,
          "identity table size mismatch");
  require(static_cast<int>(compose_.size()) == nm, errc::bad_format,
          "composition table has wrong shape");
  for (const auto& row : compose_)
    require(static_cast<int>(row.size()) == nm, errc::bad_format,
            "composition table has wrong shape");

  for (int f = 0; f < nm; ++f) {
    require(morphisms_[f].src >= 0 && morphisms_[f].src < no &&
                morphisms_[f].tgt >= 0 && morphisms_[f].tgt < no,
            errc::bad_format,
            "morphism " + morphisms_[f].name + " has out-of-range endpoints");
  }
  for (int x = 0; x < no; ++x) {
    int e = identity_[x];
    require(e >= 0 && e < nm && morphisms_[e].src == x &&
                morphisms_[e].tgt == x,
            errc::missing_identity,
            "object " + object_names_[x] + " lacks an identity endomorphism");
  }

  // compose defined exactly on composable pairs
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      bool composable = morphisms_[f].src == morphisms_[g].tgt;
      int h = compose_[f][g];
      if (!composable) {
        require(h == -1, errc::bad_format,
                "compose(" + morphisms_[f].name + "," + morphisms_[g].name +
                    ") defined on a non-composable pair");
      } else {
        require(h >= 0 && h < nm, errc::dangling_morphism,
                "compose(" + morphisms_[f].name + "," + morphisms_[g].name +
                    ") missing");
        require(morphisms_[h].src == morphisms_[g].src &&
                    morphisms_[h].tgt == morphisms_[f].tgt,
                errc::dangling_morphism,
                "compose(" + morphisms_[f].name + "," + morphisms_[g].name +
                    ") has wrong endpoints");
      }
    }

  // identities neutral
  for (int f = 0; f < nm; ++f) {
    require(compose_[f][identity_[morphisms_[f].src]] == f,
            errc::missing_identity,
            "right identity fails at " + morphisms_[f].name);
    require(compose_[identity_[morphisms_[f].tgt]][f] == f,
            errc::missing_identity,
            "left identity fails at " + morphisms_[f].name);
  }

  // associativity on all composable triples
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (morphisms_[f].src != morphisms_[g].tgt) continue;
      int fg = compose_[f][g];
      for (int h = 0; h < nm; ++h) {
        if (morphisms_[h].tgt != morphisms_[g].src) continue;
        int gh = compose_[g][h];
        require(compose_[fg][h] == compose_[f][gh], errc::non_associative,
                "associativity fails on (" + morphisms_[f].name + ", " +
                    morphisms_[g].name + ", " + morphisms_[h].name + ")");
      }
    }
  }
}

void FiniteCategory::build_indexes() {
  const int no = n_objects();
  hom_.assign(static_cast<size_t>(no) * no, {});
  by_src_.assign(no, {});
  by_tgt_.assign(no, {});
  for (int f = 0; f < n_morphisms(); ++f) {
    hom_[static_cast<size_t>(morphisms_[f].src) * no + morphisms_[f].tgt]
        .push_back(f);
    by_src_[morphisms_[f].src].push_back(f);
    by_tgt_[morphisms_[f].tgt].push_back(f);
  }
}

int FiniteCategory::inverse_of(int f) const {
  for (int g : hom(tgt(f), src(f)))
    if (compose_[g][f] == identity_[src(f)] &&
        compose_[f][g] == identity_[tgt(f)])
      return g;
  return -1;
}

int FiniteCategory::object_id(const std::string& name) const {
  for (int x = 0; x < n_objects(); ++x)
    if (object_names_[x] == name) return x;
  return -1;
}

int FiniteCategory::morphism_id(const std::string& name) const {
  for (int f = 0; f < n_morphisms(); ++f)
    if (morphisms_[f].name == name) return f;
  return -1;
}

bool is_ei(const FiniteCategory& c) {
  for (int x = 0; x < c.n_objects(); ++x)
    for (int f : c.hom(x, x))
      if (!c.is_iso(f)) return false;
  return true;
}

IsoClassification classify(const FiniteCategory& c) {
  require(is_ei(c), errc::not_ei, "classify requires an EI category");
  const int no = c.n_objects();

  // x ~ y iff morphisms exist both ways; in an EI category such a pair is
  // automatically an isomorphism pair.
  IsoClassification cl;
  cl.class_of.assign(no, -1);
  for (int x = 0; x < no; ++x) {
    if (cl.class_of[x] >= 0) continue;
    int id = cl.n_classes();
    cl.classes.push_back({x});
    cl.class_of[x] = id;
    for (int y = x + 1; y < no; ++y) {
      if (cl.class_of[y] >= 0) continue;
      if (!c.hom(x, y).empty() && !c.hom(y, x).empty()) {
        cl.class_of[y] = id;
        cl.classes[id].push_back(y);
      }
    }
  }
  for (auto& cls : cl.classes) {
    std::sort(cls.begin(), cls.end());
    cl.representative.push_back(cls.front());
  }

  const int nc = cl.n_classes();
  cl.leq.assign(nc, std::vector<char>(nc, 0));
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b)
      cl.leq[a][b] =
          !c.hom(cl.representative[a], cl.representative[b]).empty() ? 1 : 0;

  for (int a = 0; a < nc; ++a) {
    require(cl.leq[a][a], errc::not_ei, "class order not reflexive");
    for (int b = 0; b < nc; ++b) {
      if (a != b && cl.leq[a][b] && cl.leq[b][a])
        fail(errc::not_ei, "class order not antisymmetric");
      for (int d = 0; d < nc; ++d)
        if (cl.leq[a][b] && cl.leq[b][d])
          require(cl.leq[a][d], errc::not_ei, "class order not transitive");
    }
  }

  for (int a = 0; a < nc; ++a) {
    int r = cl.representative[a];
    std::vector<int> aut = {c.identity(r)};
    for (int f : c.hom(r, r))
      if (f != c.identity(r)) aut.push_back(f);
    cl.aut.push_back(std::move(aut));
  }
  return cl;
}

Subcategory induced_subcategory(const FiniteCategory& c,
                                const std::vector<int>& objects) {
  std::vector<int> objs = objects;
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  for (int x : objs)
    require(x >= 0 && x < c.n_objects(), errc::invalid_params,
            "subcategory object id out of range");

  Subcategory s;
  s.obj_to_parent = objs;
  s.obj_from_parent.assign(c.n_objects(), -1);
  for (size_t i = 0; i < objs.size(); ++i)
    s.obj_from_parent[objs[i]] = static_cast<int>(i);

  s.mor_from_parent.assign(c.n_morphisms(), -1);
  std::vector<Morphism> mors;
  for (int f = 0; f < c.n_morphisms(); ++f) {
    int sx = s.obj_from_parent[c.src(f)];
    int sy = s.obj_from_parent[c.tgt(f)];
    if (sx < 0 || sy < 0) continue;
    s.mor_from_parent[f] = static_cast<int>(mors.size());
    s.mor_to_parent.push_back(f);
    mors.push_back({sx, sy, c.morphism(f).name});
  }

  std::vector<std::string> names;
  std::vector<int> ident;
  for (int x : objs) {
    names.push_back(c.object_name(x));
    ident.push_back(s.mor_from_parent[c.identity(x)]);
  }

  int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (mors[f].src == mors[g].tgt)
        comp[f][g] =
            s.mor_from_parent[c.compose(s.mor_to_parent[f], s.mor_to_parent[g])];

  s.cat = FiniteCategory(std::move(names), std::move(mors), std::move(ident),
                         std::move(comp));
  return s;
}

bool is_convex(const FiniteCategory& c, const std::vector<int>& objects) {
  std::vector<char> in(c.n_objects(), 0);
  for (int x : objects) in[x] = 1;
  for (int x = 0; x < c.n_objects(); ++x) {
    if (!in[x]) continue;
    for (int y = 0; y < c.n_objects(); ++y) {
      if (in[y] || c.hom(x, y).empty()) continue;
      for (int z = 0; z < c.n_objects(); ++z)
        if (in[z] && !c.hom(y, z).empty()) return false;
    }
  }
  return true;
}

FiniteCategory opposite(const FiniteCategory& c) {
  std::vector<Morphism> mors;
  for (int f = 0; f < c.n_morphisms(); ++f)
    mors.push_back({c.tgt(f), c.src(f), c.morphism(f).name});
  int nm = c.n_morphisms();
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.src(f) == c.tgt(g)) comp[g][f] = c.compose_raw(f, g);
  std::vector<int> ident;
  for (int x = 0; x < c.n_objects(); ++x) ident.push_back(c.identity(x));
  return FiniteCategory(c.object_names(), std::move(mors), std::move(ident),
                        std::move(comp));
}

void Functor::validate() const {
  require(static_cast<int>(obj_map.size()) == src->n_objects() &&
              static_cast<int>(mor_map.size()) == src->n_morphisms(),
          errc::invalid_params, "functor tables have wrong size");
  for (int f = 0; f < src->n_morphisms(); ++f) {
    require(tgt->src(mor_map[f]) == obj_map[src->src(f)] &&
                tgt->tgt(mor_map[f]) == obj_map[src->tgt(f)],
            errc::check_failed, "functor breaks endpoints");
  }
  for (int x = 0; x < src->n_objects(); ++x)
    require(mor_map[src->identity(x)] == tgt->identity(obj_map[x]),
            errc::check_failed, "functor breaks identities");
  for (int f = 0; f < src->n_morphisms(); ++f)
    for (int g = 0; g < src->n_morphisms(); ++g) {
      if (src->src(f) != src->tgt(g)) continue;
      require(mor_map[src->compose_raw(f, g)] ==
                  tgt->compose_raw(mor_map[f], mor_map[g]),
              errc::check_failed, "functor breaks composition");
    }
}

}  // namespace ttg::fincat
