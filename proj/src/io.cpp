#include "ttg/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace ttg::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_format, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(out.good(), errc::bad_format, "cannot write " + path);
  out << text;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

namespace {

struct Lines {
  std::vector<std::string> content;  // trimmed, nonempty, comments stripped
};

Lines lex(const std::string& text, const std::string& kind) {
  Lines ls;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    if (!saw_header) {
      require(t == "ttgeo " + kind + " v1", errc::bad_format,
              "expected header 'ttgeo " + kind + " v1', got '" + t + "'");
      saw_header = true;
      continue;
    }
    ls.content.push_back(t);
  }
  require(saw_header, errc::bad_format, "missing 'ttgeo " + kind + " v1' header");
  return ls;
}

bool is_section(const std::string& line, std::string& name) {
  if (line.size() >= 2 && line.front() == '[' && line.back() == ']') {
    name = trim(line.substr(1, line.size() - 2));
    return true;
  }
  return false;
}

}  // namespace

fincat::FiniteCategory poset_category(
    const std::vector<std::string>& object_names,
    const std::vector<std::pair<int, int>>& less_than) {
  const int n = static_cast<int>(object_names.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [a, b] : less_than) {
    require(a >= 0 && a < n && b >= 0 && b < n, errc::bad_format,
            "poset relation out of range");
    leq[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(!(i != j && leq[i][j] && leq[j][i]), errc::bad_format,
              "poset relations contain a cycle through " + object_names[i]);

  std::vector<fincat::Morphism> mors;
  std::vector<int> ident;
  for (int x = 0; x < n; ++x) {
    ident.push_back(static_cast<int>(mors.size()));
    mors.push_back({x, x, "id_" + object_names[x]});
  }
  std::map<std::pair<int, int>, int> rel_id;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b]) {
        rel_id[{a, b}] = static_cast<int>(mors.size());
        mors.push_back({a, b, object_names[a] + "<" + object_names[b]});
      }
  for (int x = 0; x < n; ++x) rel_id[{x, x}] = ident[x];

  int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (mors[f].src == mors[g].tgt)
        comp[f][g] = rel_id.at({mors[g].src, mors[f].tgt});

  return fincat::FiniteCategory(object_names, std::move(mors),
                                std::move(ident), std::move(comp));
}

bool is_poset_shaped(const fincat::FiniteCategory& c) {
  for (int x = 0; x < c.n_objects(); ++x)
    for (int y = 0; y < c.n_objects(); ++y) {
      if (c.hom(x, y).size() > 1) return false;
      if (x != y && !c.hom(x, y).empty() && !c.hom(y, x).empty()) return false;
    }
  return true;
}

std::vector<std::vector<char>> poset_leq(const fincat::FiniteCategory& c) {
  require(is_poset_shaped(c), errc::invalid_params, "category is not a poset");
  int n = c.n_objects();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[x][y] = c.hom(x, y).empty() ? 0 : 1;
  return leq;
}

fincat::FiniteCategory parse_category(const std::string& text) {
  Lines ls = lex(text, "category");

  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> poset_rel;
  // name -> (src,tgt)
  std::vector<std::tuple<std::string, std::string, std::string>> mor_decl;
  std::vector<std::array<std::string, 3>> compose_decl;  // h = f . g
  bool saw_poset = false, saw_general = false;

  std::string section;
  for (const auto& line : ls.content) {
    std::string name;
    if (is_section(line, name)) {
      require(name == "objects" || name == "poset" || name == "morphisms" ||
                  name == "compose",
              errc::bad_format, "unknown section [" + name + "]");
      section = name;
      if (name == "poset") saw_poset = true;
      if (name == "morphisms" || name == "compose") saw_general = true;
      continue;
    }
    require(!section.empty(), errc::bad_format,
            "content before any section: " + line);
    if (section == "objects") {
      auto toks = split_ws(line);
      require(toks.size() == 1, errc::bad_format,
              "one object per line, got: " + line);
      objects.push_back(toks[0]);
    } else if (section == "poset") {
      auto toks = split_ws(line);
      require(toks.size() == 3 && toks[1] == "<", errc::bad_format,
              "poset line must be 'a < b', got: " + line);
      poset_rel.push_back({toks[0], toks[2]});
    } else if (section == "morphisms") {
      // f: a -> b
      auto colon = line.find(':');
      require(colon != std::string::npos, errc::bad_format,
              "morphism line must be 'f: a -> b', got: " + line);
      std::string fname = trim(line.substr(0, colon));
      auto rest = trim(line.substr(colon + 1));
      auto arrow = rest.find("->");
      require(arrow != std::string::npos, errc::bad_format,
              "morphism line must be 'f: a -> b', got: " + line);
      std::string a = trim(rest.substr(0, arrow));
      std::string b = trim(rest.substr(arrow + 2));
      require(!fname.empty() && !a.empty() && !b.empty(), errc::bad_format,
              "morphism line must be 'f: a -> b', got: " + line);
      mor_decl.emplace_back(fname, a, b);
    } else {  // compose
      auto toks = split_ws(line);
      require(toks.size() == 5 && toks[1] == "=" && toks[3] == ".",
              errc::bad_format, "compose line must be 'h = f . g', got: " + line);
      compose_decl.push_back({toks[0], toks[2], toks[4]});
    }
  }

  require(!objects.empty(), errc::bad_format, "no [objects] given");
  require(!(saw_poset && saw_general), errc::bad_format,
          "[poset] cannot be combined with [morphisms]/[compose]");
  std::map<std::string, int> oid;
  for (size_t i = 0; i < objects.size(); ++i) {
    require(!oid.count(objects[i]), errc::bad_format,
            "duplicate object " + objects[i]);
    oid[objects[i]] = static_cast<int>(i);
  }

  if (saw_poset || (!saw_general && poset_rel.empty())) {
    std::vector<std::pair<int, int>> rel;
    for (auto& [a, b] : poset_rel) {
      require(oid.count(a) && oid.count(b), errc::bad_format,
              "poset relation mentions unknown object " + a + " or " + b);
      rel.push_back({oid[a], oid[b]});
    }
    return poset_category(objects, rel);
  }

  // General category: identities are implicit, named id_<object>.
  std::vector<fincat::Morphism> mors;
  std::vector<int> ident;
  std::map<std::string, int> mid;
  for (size_t x = 0; x < objects.size(); ++x) {
    std::string nm = "id_" + objects[x];
    ident.push_back(static_cast<int>(mors.size()));
    mid[nm] = static_cast<int>(mors.size());
    mors.push_back({(int)x, (int)x, nm});
  }
  for (auto& [f, a, b] : mor_decl) {
    require(oid.count(a) && oid.count(b), errc::bad_format,
            "morphism " + f + " mentions unknown object");
    require(!mid.count(f), errc::bad_format, "duplicate morphism name " + f);
    mid[f] = static_cast<int>(mors.size());
    mors.push_back({oid[a], oid[b], f});
  }

  int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  // identity compositions are implied
  for (int f = 0; f < nm; ++f) {
    comp[f][ident[mors[f].src]] = f;
    comp[ident[mors[f].tgt]][f] = f;
  }
  for (auto& [h, f, g] : compose_decl) {
    require(mid.count(h) && mid.count(f) && mid.count(g), errc::bad_format,
            "compose line mentions unknown morphism: " + h + " = " + f + " . " +
                g);
    int hf = mid[f], hg = mid[g], hh = mid[h];
    require(mors[hf].src == mors[hg].tgt, errc::bad_format,
            f + " . " + g + " is not composable");
    require(comp[hf][hg] == -1 || comp[hf][hg] == hh, errc::bad_format,
            "conflicting compositions for " + f + " . " + g);
    comp[hf][hg] = hh;
  }
  return fincat::FiniteCategory(objects, std::move(mors), std::move(ident),
                                std::move(comp));
}

fincat::FiniteCategory load_category(const std::string& path) {
  return parse_category(read_file(path));
}

std::string format_category(const fincat::FiniteCategory& c) {
  std::ostringstream out;
  out << "ttgeo category v1\n[objects]\n";
  for (int x = 0; x < c.n_objects(); ++x) out << c.object_name(x) << "\n";
  if (is_poset_shaped(c)) {
    out << "[poset]\n";
    for (int f = 0; f < c.n_morphisms(); ++f)
      if (c.src(f) != c.tgt(f))
        out << c.object_name(c.src(f)) << " < " << c.object_name(c.tgt(f))
            << "\n";
    return out.str();
  }
  out << "[morphisms]\n";
  for (int f = 0; f < c.n_morphisms(); ++f)
    if (!c.is_identity(f))
      out << c.morphism(f).name << ": " << c.object_name(c.src(f)) << " -> "
          << c.object_name(c.tgt(f)) << "\n";
  out << "[compose]\n";
  for (int f = 0; f < c.n_morphisms(); ++f)
    for (int g = 0; g < c.n_morphisms(); ++g) {
      if (c.src(f) != c.tgt(g)) continue;
      if (c.is_identity(f) || c.is_identity(g)) continue;
      out << c.morphism(c.compose_raw(f, g)).name << " = " << c.morphism(f).name
          << " . " << c.morphism(g).name << "\n";
    }
  return out.str();
}

}  // namespace ttg::io
