#include "ttg/groupact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ttg/io.hpp"

namespace ttg::groupact {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm p(b.size());
  for (size_t i = 0; i < b.size(); ++i) p[i] = a[b[i]];
  return p;
}

Perm perm_inverse(const Perm& a) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[a[i]] = static_cast<int>(i);
  return p;
}

namespace {
void check_bijection(const Perm& p, int degree, errc kind) {
  require(static_cast<int>(p.size()) == degree, kind,
          "permutation has wrong degree");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    require(v >= 0 && v < degree && !seen[v], kind,
            "permutation is not a bijection");
    seen[v] = 1;
  }
}
}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators, int cap)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    check_bijection(g, degree, errc::invalid_params);

  std::map<Perm, int> index;
  elements_.push_back(perm_identity(degree));
  index[elements_[0]] = 0;
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (const Perm& g : gens_) {
      Perm next = perm_compose(g, elements_[head]);
      if (index.count(next)) continue;
      require(static_cast<int>(elements_.size()) < cap,
              errc::unsupported_scale,
              "group enumeration exceeds cap " + std::to_string(cap));
      index[next] = static_cast<int>(elements_.size());
      elements_.push_back(std::move(next));
    }
  }

  const int n = order();
  mult_.assign(n, std::vector<int>(n, -1));
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = index.at(perm_compose(elements_[a], elements_[b]));
      mult_[a][b] = c;
      if (c == 0) inv_[a] = b;
    }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::cyclic(int n) {
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup(n, {c});
}

PermGroup PermGroup::symmetric(int n) {
  if (n <= 1) return trivial(std::max(n, 1));
  Perm swap01 = perm_identity(n);
  std::swap(swap01[0], swap01[1]);
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {swap01, cyc});
}

int PermGroup::index_of(const Perm& p) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[i] == p) return i;
  return -1;
}

int PermGroup::element_order(int a) const {
  int r = 1, x = a;
  while (x != 0) {
    x = mult_[a][x];
    ++r;
  }
  return r;
}

bool PermGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mult_[a][b] != mult_[b][a]) return false;
  return true;
}

int PermGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < order(); ++a)
    e = std::lcm(e, static_cast<long long>(element_order(a)));
  return static_cast<int>(e);
}

GroupInfo make_group_info(int order, int exponent, bool abelian) {
  GroupInfo info;
  info.order = order;
  info.exponent = exponent;
  info.abelian = abelian;
  if (order == 1)
    info.name = "1";
  else if (abelian && exponent == order)  // cyclic
    info.name = "C" + std::to_string(order);
  else if (abelian)
    info.name = "Ab(" + std::to_string(order) + ",exp" +
                std::to_string(exponent) + ")";
  else
    info.name = "G(" + std::to_string(order) + ",exp" +
                std::to_string(exponent) + ")";
  return info;
}

GroupInfo subgroup_info(const PermGroup& g, const std::vector<int>& elems) {
  long long e = 1;
  for (int a : elems) e = std::lcm(e, (long long)g.element_order(a));
  bool abelian = true;
  for (int a : elems)
    for (int b : elems)
      if (g.mult(a, b) != g.mult(b, a)) abelian = false;
  return make_group_info(static_cast<int>(elems.size()),
                         static_cast<int>(e), abelian);
}

GroupInfo whole_group_info(const PermGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return subgroup_info(g, all);
}

GPoset::GPoset(fincat::CatPtr poset_cat, PermGroup g,
               const std::vector<std::vector<int>>& generator_actions)
    : poset(std::move(poset_cat)), group(std::move(g)) {
  leq = io::poset_leq(*poset);
  const int no = poset->n_objects();
  require(generator_actions.size() == group.generators().size(),
          errc::invalid_params, "one object permutation per generator needed");
  for (const auto& a : generator_actions)
    check_bijection(a, no, errc::action_not_order_preserving);

  // Extend generator actions along the element enumeration: each non-identity
  // element was first reached as gen*previous, so its action is forced.
  action.assign(group.order(), {});
  action[0] = perm_identity(no);
  std::vector<char> done(group.order(), 0);
  done[0] = 1;
  // recover BFS parents
  for (size_t head = 0; head < (size_t)group.order(); ++head) {
    for (size_t gi = 0; gi < group.generators().size(); ++gi) {
      int gidx = group.index_of(group.generators()[gi]);
      int next = group.mult(gidx, static_cast<int>(head));
      if (done[next]) continue;
      action[next] = perm_compose(generator_actions[gi], action[head]);
      done[next] = 1;
    }
  }
  for (char d : done)
    require(d, errc::action_not_functorial, "action extension incomplete");

  for (int g2 = 0; g2 < group.order(); ++g2) {
    check_bijection(action[g2], no, errc::action_not_order_preserving);
    for (int x = 0; x < no; ++x)
      for (int y = 0; y < no; ++y)
        if (leq[x][y])
          require(leq[action[g2][x]][action[g2][y]],
                  errc::action_not_order_preserving,
                  "element " + std::to_string(g2) + " does not preserve " +
                      poset->object_name(x) + " <= " + poset->object_name(y));
  }
  // homomorphism property, exhaustively
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b) {
      Perm ab = perm_compose(action[a], action[b]);
      require(ab == action[group.mult(a, b)], errc::action_not_functorial,
              "action is not a group homomorphism");
    }
}

TransporterCategory build_transporter(const GPoset& gp) {
  TransporterCategory t;
  t.base = gp;
  const int no = gp.poset->n_objects();
  const int ng = gp.group.order();

  std::vector<fincat::Morphism> mors;
  std::map<std::tuple<int, int, int>, int> id_of;  // (src,tgt,g)
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y)
      for (int g = 0; g < ng; ++g) {
        if (!gp.leq[gp.act(g, x)][y]) continue;
        id_of[{x, y, g}] = static_cast<int>(mors.size());
        t.mor_elem.push_back(g);
        mors.push_back({x, y,
                        "g" + std::to_string(g) + "|" +
                            gp.poset->object_name(x) + "->" +
                            gp.poset->object_name(y)});
      }

  std::vector<int> ident(no);
  for (int x = 0; x < no; ++x) ident[x] = id_of.at({x, x, 0});

  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (mors[f].src != mors[g].tgt) continue;
      int elem = gp.group.mult(t.mor_elem[f], t.mor_elem[g]);
      comp[f][g] = id_of.at({mors[g].src, mors[f].tgt, elem});
    }

  t.cat = fincat::share(fincat::FiniteCategory(
      gp.poset->object_names(), std::move(mors), std::move(ident),
      std::move(comp)));
  require(fincat::is_ei(*t.cat), errc::not_ei,
          "transporter category failed the EI check");

  t.orbit_of.assign(no, -1);
  for (int x = 0; x < no; ++x) {
    if (t.orbit_of[x] >= 0) continue;
    std::vector<int> orbit;
    for (int g = 0; g < ng; ++g) orbit.push_back(gp.act(g, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    int oi = static_cast<int>(t.orbits.size());
    for (int y : orbit) t.orbit_of[y] = oi;
    t.orbits.push_back(std::move(orbit));
  }
  t.isotropy.assign(no, {});
  for (int x = 0; x < no; ++x)
    for (int g = 0; g < ng; ++g)
      if (gp.act(g, x) == x) t.isotropy[x].push_back(g);
  return t;
}

fincat::FiniteCategory group_as_category(const PermGroup& g) {
  std::vector<fincat::Morphism> mors;
  for (int i = 0; i < g.order(); ++i)
    mors.push_back({0, 0, i == 0 ? "e" : "g" + std::to_string(i)});
  std::vector<std::vector<int>> comp(g.order(),
                                     std::vector<int>(g.order(), -1));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comp[a][b] = g.mult(a, b);
  return fincat::FiniteCategory({"pt"}, std::move(mors), {0}, std::move(comp));
}

fincat::FiniteCategory subgroup_as_category(const PermGroup& g,
                                            const std::vector<int>& elems) {
  require(!elems.empty() && elems[0] == 0, errc::invalid_params,
          "subgroup element list must start with the identity");
  const int n = static_cast<int>(elems.size());
  std::vector<fincat::Morphism> mors;
  for (int i = 0; i < n; ++i)
    mors.push_back({0, 0, i == 0 ? "e" : "h" + std::to_string(elems[i])});
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int prod = g.mult(elems[a], elems[b]);
      auto it = std::find(elems.begin(), elems.end(), prod);
      require(it != elems.end(), errc::invalid_params,
              "element subset is not closed under multiplication");
      comp[a][b] = static_cast<int>(it - elems.begin());
    }
  return fincat::FiniteCategory({"pt"}, std::move(mors), {0}, std::move(comp));
}

std::pair<fincat::Functor, fincat::Functor> iota_pi(
    const TransporterCategory& t) {
  const auto& p = *t.base.poset;
  const auto& c = *t.cat;

  fincat::Functor iota;
  iota.src = t.base.poset;
  iota.tgt = t.cat;
  iota.obj_map.resize(p.n_objects());
  std::iota(iota.obj_map.begin(), iota.obj_map.end(), 0);
  iota.mor_map.assign(p.n_morphisms(), -1);
  for (int f = 0; f < p.n_morphisms(); ++f) {
    for (int h : c.hom(p.src(f), p.tgt(f)))
      if (t.mor_elem[h] == 0) {
        iota.mor_map[f] = h;
        break;
      }
    require(iota.mor_map[f] >= 0, errc::check_failed,
            "missing (e, x<=y) morphism in transporter");
  }
  iota.validate();

  fincat::Functor pi;
  pi.src = t.cat;
  pi.tgt = fincat::share(group_as_category(t.base.group));
  pi.obj_map.assign(c.n_objects(), 0);
  pi.mor_map = t.mor_elem;  // morphism ids in the group category = elements
  pi.validate();

  // pi ∘ iota is constant at e
  for (int f = 0; f < p.n_morphisms(); ++f)
    require(pi.mor_map[iota.mor_map[f]] == 0, errc::check_failed,
            "pi∘iota is not trivial");
  return {iota, pi};
}

OrbitReport orbits_isotropy(const TransporterCategory& t) {
  OrbitReport r;
  r.orbits = t.orbits;
  const auto& g = t.base.group;
  for (const auto& orbit : t.orbits) {
    int rep = orbit.front();
    r.isotropy_of_rep.push_back(t.isotropy[rep]);
    r.isotropy_info.push_back(subgroup_info(g, t.isotropy[rep]));

    // stabilizers along the orbit are conjugate: G_{sx} = s G_x s^{-1}
    for (int y : orbit) {
      int s = -1;
      for (int e = 0; e < g.order(); ++e)
        if (t.base.act(e, rep) == y) {
          s = e;
          break;
        }
      require(s >= 0, errc::check_failed, "orbit transversal element missing");
      std::vector<int> conj;
      for (int h : t.isotropy[rep])
        conj.push_back(g.mult(g.mult(s, h), g.inverse(s)));
      std::sort(conj.begin(), conj.end());
      require(conj == t.isotropy[y], errc::check_failed,
              "isotropy groups along an orbit are not conjugate");
    }
  }
  return r;
}

Perm parse_cycles(const std::string& s, int degree) {
  Perm p = perm_identity(degree);
  std::vector<char> used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  require(i < s.size(), errc::bad_format, "empty cycle expression");
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    require(s[i] == '(', errc::bad_format, "expected '(' in cycles: " + s);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      require(i < s.size(), errc::bad_format, "unterminated cycle: " + s);
      if (s[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      require(j > i, errc::bad_format, "expected point index in cycles: " + s);
      int v = std::stoi(s.substr(i, j - i));
      require(v >= 0 && v < degree, errc::bad_format,
              "cycle point out of range: " + std::to_string(v));
      cyc.push_back(v);
      i = j;
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      require(!used[from], errc::bad_format,
              "point repeated in cycles: " + std::to_string(from));
      used[from] = 1;
      p[from] = to;
    }
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GPoset parse_action(const std::string& text, fincat::CatPtr poset) {
  std::istringstream in(text);
  std::string line, section;
  bool saw_header = false;
  int degree = -1;
  std::vector<std::string> gen_names;
  std::vector<Perm> gens;
  std::map<std::string, std::vector<int>> actions;

  while (std::getline(in, line)) {
    std::string tline = io::trim(io::strip_comment(line));
    if (tline.empty()) continue;
    if (!saw_header) {
      require(tline == "ttgeo action v1", errc::bad_format,
              "expected 'ttgeo action v1' header");
      saw_header = true;
      continue;
    }
    if (tline.front() == '[') {
      require(tline == "[group]" || tline == "[action]", errc::bad_format,
              "unknown section in action file: " + tline);
      section = tline;
      continue;
    }
    if (section == "[group]") {
      auto eq = tline.find('=');
      require(eq != std::string::npos, errc::bad_format,
              "group line must be 'degree = n' or 'gen <name> = (cycles)'");
      std::string lhs = io::trim(tline.substr(0, eq));
      std::string rhs = io::trim(tline.substr(eq + 1));
      if (lhs == "degree") {
        long long d;
        require(io::parse_int(rhs, d) && d >= 1, errc::bad_format,
                "bad degree: " + rhs);
        degree = static_cast<int>(d);
      } else {
        auto toks = io::split_ws(lhs);
        require(toks.size() == 2 && toks[0] == "gen", errc::bad_format,
                "expected 'gen <name> = (cycles)', got: " + tline);
        require(degree > 0, errc::bad_format, "degree must come first");
        gen_names.push_back(toks[1]);
        gens.push_back(parse_cycles(rhs, degree));
      }
    } else if (section == "[action]") {
      auto colon = tline.find(':');
      require(colon != std::string::npos, errc::bad_format,
              "action line must be '<gen>: images...'");
      std::string gname = io::trim(tline.substr(0, colon));
      auto toks = io::split_ws(tline.substr(colon + 1));
      std::vector<int> img;
      for (const auto& tok : toks) {
        int x = poset->object_id(tok);
        require(x >= 0, errc::bad_format, "unknown object in action: " + tok);
        img.push_back(x);
      }
      require(static_cast<int>(img.size()) == poset->n_objects(),
              errc::bad_format, "action for " + gname + " must list " +
                                    std::to_string(poset->n_objects()) +
                                    " images");
      actions[gname] = img;
    } else {
      fail(errc::bad_format, "content before any section: " + tline);
    }
  }
  require(saw_header, errc::bad_format, "missing 'ttgeo action v1' header");
  require(degree > 0, errc::bad_format, "no group degree given");

  std::vector<std::vector<int>> gen_actions;
  for (const auto& name : gen_names) {
    require(actions.count(name), errc::bad_format,
            "generator " + name + " has no [action] line");
    gen_actions.push_back(actions[name]);
  }
  require(actions.size() == gen_names.size(), errc::bad_format,
          "[action] mentions unknown generators");
  return GPoset(std::move(poset), PermGroup(degree, gens),
                gen_actions);
}

GPoset load_action(const std::string& path, fincat::CatPtr poset) {
  return parse_action(io::read_file(path), std::move(poset));
}

std::string format_action(const GPoset& gp) {
  std::ostringstream out;
  out << "ttgeo action v1\n[group]\ndegree = " << gp.group.degree() << "\n";
  const auto& gens = gp.group.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    out << "gen a" << i << " = " << format_cycles(gens[i]) << "\n";
  out << "[action]\n";
  for (size_t i = 0; i < gens.size(); ++i) {
    int gi = gp.group.index_of(gens[i]);
    out << "a" << i << ":";
    for (int x = 0; x < gp.poset->n_objects(); ++x)
      out << " " << gp.poset->object_name(gp.act(gi, x));
    out << "\n";
  }
  return out.str();
}

}  // namespace ttg::groupact
