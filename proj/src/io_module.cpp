#include <filesystem>
#include <map>
#include <sstream>

#include "ttg/io.hpp"

namespace ttg::io {

Scalar parse_scalar(const std::string& tok, const Field& k) {
  auto slash = tok.find('/');
  long long num, den = 1;
  if (slash == std::string::npos) {
    require(parse_int(tok, num), errc::bad_format, "bad number: " + tok);
  } else {
    require(parse_int(tok.substr(0, slash), num) &&
                parse_int(tok.substr(slash + 1), den) && den != 0,
            errc::bad_format, "bad fraction: " + tok);
  }
  return den == 1 ? k.from_int(num) : k.from_fraction(num, den);
}

namespace {

struct Section {
  std::string header;             // inside the brackets
  std::vector<std::string> body;  // trimmed nonempty lines
};

std::vector<Section> sections_of(const std::string& text,
                                 const std::string& kind) {
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  std::vector<Section> out;
  while (std::getline(in, line)) {
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    if (!saw_header) {
      require(t == "ttgeo " + kind + " v1", errc::bad_format,
              "expected 'ttgeo " + kind + " v1' header");
      saw_header = true;
      continue;
    }
    if (t.front() == '[' && t.back() == ']') {
      out.push_back({trim(t.substr(1, t.size() - 2)), {}});
    } else {
      require(!out.empty(), errc::bad_format, "content before any section");
      out.back().body.push_back(t);
    }
  }
  require(saw_header, errc::bad_format,
          "missing 'ttgeo " + kind + " v1' header");
  return out;
}

Matrix parse_matrix(const std::vector<std::string>& rows, const Field& k,
                    int nr, int nc, const std::string& what) {
  require(static_cast<int>(rows.size()) == nr, errc::bad_format,
          what + ": expected " + std::to_string(nr) + " rows");
  Matrix m(k, nr, nc);
  for (int i = 0; i < nr; ++i) {
    auto toks = split_ws(rows[i]);
    require(static_cast<int>(toks.size()) == nc, errc::bad_format,
            what + ": expected " + std::to_string(nc) + " entries per row");
    for (int j = 0; j < nc; ++j) m.at(i, j) = parse_scalar(toks[j], k);
  }
  return m;
}

std::string format_matrix(const Matrix& m, const Field& k) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += k.to_string(m.at(i, j));
    }
    s += "\n";
  }
  return s;
}

}  // namespace

catmod::FunctorModule parse_module(const std::string& text, fincat::CatPtr c) {
  auto secs = sections_of(text, "module");
  Field k = Field::rationals();
  bool saw_field = false;
  std::vector<int> dims(c->n_objects(), 0);
  std::vector<std::pair<int, std::vector<std::string>>> raw_maps;

  for (const auto& s : secs) {
    if (s.header == "field") {
      for (const auto& l : s.body) {
        auto eq = l.find('=');
        require(eq != std::string::npos && trim(l.substr(0, eq)) == "char",
                errc::bad_format, "field section expects 'char = p'");
        long long p;
        require(parse_int(trim(l.substr(eq + 1)), p), errc::bad_format,
                "bad characteristic");
        k = Field::of_characteristic(p);
        saw_field = true;
      }
    } else if (s.header == "dims") {
      for (const auto& l : s.body) {
        auto eq = l.find('=');
        require(eq != std::string::npos, errc::bad_format,
                "dims line must be 'object = n', got: " + l);
        int x = c->object_id(trim(l.substr(0, eq)));
        require(x >= 0, errc::bad_format, "unknown object in dims: " + l);
        long long d;
        require(parse_int(trim(l.substr(eq + 1)), d) && d >= 0,
                errc::bad_format, "bad dimension: " + l);
        dims[x] = static_cast<int>(d);
      }
    } else if (s.header.rfind("map ", 0) == 0) {
      std::string name = trim(s.header.substr(4));
      int f = c->morphism_id(name);
      require(f >= 0, errc::bad_format, "unknown morphism [map " + name + "]");
      raw_maps.push_back({f, s.body});
    } else {
      fail(errc::bad_format, "unknown section [" + s.header + "]");
    }
  }
  require(saw_field, errc::bad_format, "module file lacks a [field] section");

  catmod::FunctorModule m(c, k, dims);
  for (auto& [f, rows] : raw_maps)
    m.maps[f] = parse_matrix(rows, k, dims[c->tgt(f)], dims[c->src(f)],
                             "map " + c->morphism(f).name);
  m.validate();
  return m;
}

catmod::FunctorModule load_module(const std::string& path, fincat::CatPtr c) {
  return parse_module(read_file(path), std::move(c));
}

std::string format_module(const catmod::FunctorModule& m) {
  std::ostringstream out;
  out << "ttgeo module v1\n[field]\nchar = " << m.field.characteristic()
      << "\n[dims]\n";
  for (int x = 0; x < m.cat->n_objects(); ++x)
    if (m.dims[x] > 0) out << m.cat->object_name(x) << " = " << m.dims[x] << "\n";
  for (int f = 0; f < m.cat->n_morphisms(); ++f) {
    if (m.cat->is_identity(f) || m.maps[f].rows() == 0 ||
        m.maps[f].cols() == 0)
      continue;
    out << "[map " << m.cat->morphism(f).name << "]\n"
        << format_matrix(m.maps[f], m.field);
  }
  return out.str();
}

dcat::BoundedComplex parse_complex(const std::string& text,
                                   const std::string& base_dir,
                                   fincat::CatPtr c) {
  auto secs = sections_of(text, "complex");
  std::map<int, catmod::FunctorModule> terms;
  std::map<std::pair<int, int>, std::vector<std::string>> raw_diffs;

  for (const auto& s : secs) {
    auto toks = split_ws(s.header);
    if (toks.size() == 2 && toks[0] == "term") {
      long long d;
      require(parse_int(toks[1], d), errc::bad_format,
              "bad term degree: " + s.header);
      require(!terms.count((int)d), errc::bad_format,
              "duplicate term " + toks[1]);
      require(s.body.size() == 1 && s.body[0].rfind("module", 0) == 0,
              errc::bad_format, "[term] expects one 'module = file' line");
      auto eq = s.body[0].find('=');
      require(eq != std::string::npos, errc::bad_format,
              "[term] expects 'module = file'");
      std::string file = trim(s.body[0].substr(eq + 1));
      auto path = std::filesystem::path(base_dir) / file;
      terms.emplace((int)d, load_module(path.string(), c));
    } else if (toks.size() == 3 && toks[0] == "diff") {
      long long d;
      require(parse_int(toks[1], d), errc::bad_format,
              "bad diff degree: " + s.header);
      int x = c->object_id(toks[2]);
      require(x >= 0, errc::bad_format, "unknown object in " + s.header);
      raw_diffs[{(int)d, x}] = s.body;
    } else {
      fail(errc::bad_format, "unknown section [" + s.header + "]");
    }
  }
  require(!terms.empty(), errc::bad_format, "complex has no terms");
  int lo = terms.begin()->first, hi = terms.rbegin()->first;

  dcat::BoundedComplex cx;
  cx.cat = c;
  cx.field = terms.begin()->second.field;
  cx.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    if (terms.count(d)) {
      require(terms.at(d).field == cx.field, errc::field_mismatch,
              "terms over different fields");
      cx.terms.push_back(terms.at(d));
    } else {
      cx.terms.push_back(catmod::zero_module(c, cx.field));
    }
  }
  for (int d = lo; d < hi; ++d) {
    catmod::ModuleMap dm = catmod::zero_map(cx.term(d), cx.term(d + 1));
    for (int x = 0; x < c->n_objects(); ++x) {
      auto it = raw_diffs.find({d, x});
      if (it == raw_diffs.end()) continue;
      dm.comp[x] = parse_matrix(it->second, cx.field, cx.term(d + 1).dims[x],
                                cx.term(d).dims[x],
                                "diff " + std::to_string(d));
      raw_diffs.erase(it);
    }
    cx.diffs.push_back(std::move(dm));
  }
  require(raw_diffs.empty(), errc::bad_format,
          "[diff] section for a degree without adjacent terms");
  cx.validate();
  cx.normalize();
  return cx;
}

dcat::BoundedComplex load_complex(const std::string& path, fincat::CatPtr c) {
  auto dir = std::filesystem::path(path).parent_path().string();
  return parse_complex(read_file(path), dir.empty() ? "." : dir, std::move(c));
}

std::vector<std::string> save_complex(const dcat::BoundedComplex& c,
                                      const std::string& stem) {
  std::vector<std::string> files;
  std::ostringstream out;
  out << "ttgeo complex v1\n";
  auto base = std::filesystem::path(stem).filename().string();
  for (int d = c.lo; !c.empty() && d <= c.hi(); ++d) {
    std::string mf = stem + ".term" + std::to_string(d - c.lo) + ".mod";
    write_file(mf, format_module(c.term(d)));
    files.push_back(mf);
    out << "[term " << d << "]\nmodule = "
        << std::filesystem::path(mf).filename().string() << "\n";
  }
  for (int d = c.lo; !c.empty() && d < c.hi(); ++d)
    for (int x = 0; x < c.cat->n_objects(); ++x) {
      const Matrix& m = c.diffs[d - c.lo].comp[x];
      if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
      out << "[diff " << d << " " << c.cat->object_name(x) << "]\n"
          << format_matrix(m, c.field);
    }
  std::string cxf = stem + ".cx";
  write_file(cxf, out.str());
  files.insert(files.begin(), cxf);
  return files;
}

}  // namespace ttg::io
