// ttgeo: command-line front end for the tensor-triangular invariants of
// finite EI categories. Every subcommand is a thin wrapper over the library;
// output is deterministic and available as a table or as JSON carrying the
// same data.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttg/cohom.hpp"
#include "ttg/gen.hpp"
#include "ttg/gorcm.hpp"
#include "ttg/groupact.hpp"
#include "ttg/io.hpp"
#include "ttg/ttspec.hpp"

using json = nlohmann::json;
using namespace ttg;

namespace {

std::string g_format = "table";

int env_threads() {
  const char* v = std::getenv("TTGEO_THREADS");
  if (!v) return 1;
  long long n;
  if (!io::parse_int(v, n) || n < 1 || n > 256)
    fail(errc::invalid_params, "TTGEO_THREADS must be a small positive integer");
  return static_cast<int>(n);
}

/* ---- rendering ---- */

bool scalar_array(const json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

void render_table(const json& j, const std::string& prefix,
                  std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_table(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array() && !scalar_array(j)) {
    int i = 0;
    for (const auto& v : j)
      render_table(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

std::string render(const json& envelope) {
  if (g_format == "json") return envelope.dump(2) + "\n";
  std::ostringstream os;
  render_table(envelope, "", os);
  return os.str();
}

void emit(const std::string& command, const json& params, const json& result) {
  json envelope;
  envelope["command"] = command;
  envelope["version"] = "ttgeo v1";
  envelope["params"] = params;
  envelope["result"] = result;
  std::cout << render(envelope);
}

/* ---- json builders ---- */

json group_info_json(const groupact::GroupInfo& g) {
  return {{"abelian", g.abelian},
          {"exponent", g.exponent},
          {"name", g.name},
          {"order", g.order}};
}

json category_json(const fincat::FiniteCategory& c) {
  json r;
  r["objects"] = c.object_names();
  r["n_morphisms"] = c.n_morphisms();
  r["ei"] = fincat::is_ei(c);
  if (r["ei"].get<bool>()) {
    auto cl = fincat::classify(c);
    json classes = json::array();
    for (int a = 0; a < cl.n_classes(); ++a) {
      json cls;
      cls["representative"] = c.object_name(cl.representative[a]);
      json members = json::array();
      for (int x : cl.classes[a]) members.push_back(c.object_name(x));
      cls["members"] = members;
      cls["aut_order"] = cl.aut[a].size();
      classes.push_back(cls);
    }
    r["classes"] = classes;
    r["poset_shaped"] = io::is_poset_shaped(c);
  }
  return r;
}

json module_json(const catmod::FunctorModule& m) {
  json dims = json::object();
  for (int x = 0; x < m.cat->n_objects(); ++x)
    dims[m.cat->object_name(x)] = m.dims[x];
  return {{"dims", dims},
          {"field", m.field.name()},
          {"total_dim", m.total_dim()}};
}

json graded_ring_json(const cohom::GradedRingDescription& r) {
  json out;
  out["engine"] = r.engine;
  out["field"] = r.field.name();
  out["cutoff"] = r.cutoff;
  out["dims"] = r.dims;
  out["graded_commutative"] = cohom::graded_commutative(r);
  out["minimal_certified"] = r.minimal_certified;
  if (!r.notes.empty()) out["notes"] = r.notes;
  json prods = json::object();
  for (const auto& [pq, table] : r.products) {
    if (pq.first == 0 || pq.second == 0) continue;  // unit action omitted
    bool all_zero = true;
    json tbl = json::array();
    for (const auto& row : table) {
      json jrow = json::array();
      for (const auto& coords : row) {
        json jc = json::array();
        for (const auto& s : coords) {
          jc.push_back(r.field.to_string(s));
          if (!r.field.is_zero(s)) all_zero = false;
        }
        jrow.push_back(jc);
      }
      tbl.push_back(jrow);
    }
    if (!all_zero)
      prods["(" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
            ")"] = tbl;
  }
  out["nonzero_products"] = prods;
  return out;
}

json spectrum_json(const ttspec::SpectrumDescriptor& sd) {
  json comps = json::array();
  for (const auto& c : sd.components)
    comps.push_back({{"aut", group_info_json(c.aut)},
                     {"class", c.class_name},
                     {"kind", ttspec::component_kind_name(c.kind)},
                     {"label", c.label}});
  return {{"characteristic", sd.characteristic},
          {"components", comps},
          {"n_components", comps.size()}};
}

json cm_json(const gorcm::CMSpectrumDescriptor& cm) {
  json comps = json::array();
  for (const auto& c : cm.components)
    comps.push_back({{"kind", gorcm::cm_kind_name(c.kind)},
                     {"label", c.label},
                     {"orbit", c.orbit_name},
                     {"stabilizer", group_info_json(c.stabilizer)}});
  return {{"ambient_components", cm.ambient.components.size()},
          {"components", comps},
          {"localization", cm.localization}};
}

json census_json(const ttspec::CensusReport& rep,
                 const fincat::FiniteCategory& p) {
  json subsets = json::array();
  for (const auto& s : rep.subsets) {
    json names = json::array();
    for (int x : s.subset) names.push_back(p.object_name(x));
    subsets.push_back({{"cones", s.cones_checked},
                       {"radical_samples", s.radical_checked},
                       {"shifts", s.shifts_checked},
                       {"subset", names},
                       {"summand_pairs", s.summand_pairs_checked},
                       {"tensors", s.tensors_checked}});
  }
  json witnesses = json::array();
  for (auto [i, j, x] : rep.witnesses)
    witnesses.push_back({{"pair", {i, j}}, {"witness", p.object_name(x)}});
  return {{"distinct", rep.distinct},
          {"passed", rep.passed()},
          {"subsets", subsets},
          {"total_ideals", rep.total_ideals},
          {"violations", rep.violations},
          {"witnesses", witnesses}};
}

/* ---- shared loading helpers ---- */

groupact::GPoset load_gposet(const std::string& poset_path,
                             const std::string& action_path) {
  auto poset = fincat::share(io::load_category(poset_path));
  if (action_path.empty()) {
    // trivial group acting trivially
    std::vector<std::vector<int>> no_gens;
    return groupact::GPoset(poset, groupact::PermGroup::trivial(1), no_gens);
  }
  return groupact::load_action(action_path, poset);
}

groupact::GPoset load_transporter_spec(const std::string& trans_path,
                                       std::string poset_path,
                                       std::string action_path) {
  if (!trans_path.empty()) {
    auto dir = std::filesystem::path(trans_path).parent_path();
    std::istringstream in(io::read_file(trans_path));
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
      auto t = io::trim(io::strip_comment(line));
      if (t.empty()) continue;
      if (!saw_header) {
        require(t == "ttgeo transporter v1", errc::bad_format,
                "expected 'ttgeo transporter v1' header");
        saw_header = true;
        continue;
      }
      auto eq = t.find('=');
      require(eq != std::string::npos, errc::bad_format,
              "transporter file lines are 'poset = ...' or 'action = ...'");
      std::string key = io::trim(t.substr(0, eq));
      std::string value = io::trim(t.substr(eq + 1));
      if (key == "poset")
        poset_path = (dir / value).string();
      else if (key == "action")
        action_path = (dir / value).string();
      else
        fail(errc::bad_format, "unknown transporter key " + key);
    }
    require(saw_header && !poset_path.empty(), errc::bad_format,
            "transporter file must name a poset");
  }
  require(!poset_path.empty(), errc::invalid_params,
          "a poset file is required (--poset or --transporter)");
  return load_gposet(poset_path, action_path);
}

std::vector<int> parse_object_list(const fincat::FiniteCategory& c,
                                   const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int x = c.object_id(io::trim(tok));
    require(x >= 0, errc::invalid_params, "unknown object " + tok);
    out.push_back(x);
  }
  return out;
}

/* ---- the reproduction catalogue ---- */

const std::vector<std::pair<std::string, std::string>> kReproIds = {
    {"rigidity-2.3", "internal hom vanishes while the dual pairing is k^2"},
    {"chain3-primes", "the three primes of the 3-chain"},
    {"chain3-ideals", "the 8 tensor ideals of the 3-chain"},
    {"census-chain2", "ideal census on the 2-chain over F2"},
    {"crown-sections", "presheaf sections of the 4-crown"},
    {"two-posets-sections", "same spectra, different global sections"},
    {"z2-point-cm", "CM spectrum of Z/2 on a point at p=2"},
    {"cm-empty-poset", "CM spectrum collapses for trivial stabilizers"},
    {"z2-f2-ext", "Ext ring of kZ/2 at p=2 up to degree 6"},
    {"z2-chain2-gorenstein", "skew isomorphism and injective dimensions"},
    {"kunneth-chain3", "seeded Kunneth batch over the 3-chain"},
    {"transporter-z2-swap2", "the free Z/2 transporter on two points"},
};

json reproduce_result(const std::string& id) {
  Field f2 = Field::fp(2);
  if (id == "rigidity-2.3") {
    auto c = fincat::share(gen::crown_poset());
    auto cl = fincat::classify(*c);
    auto simple = [&](int x) {
      return catmod::simple_from_rep(c, f2, cl, cl.class_of[x],
                                     {Matrix::identity(f2, 1)});
    };
    auto m = catmod::direct_sum({simple(2), simple(3)}).sum;  // S_y ⊕ S_z
    auto n = simple(0);                                       // S_w
    auto hom_mn = catmod::internal_hom(m, n);
    auto dm = catmod::internal_hom(m, catmod::trivial_module(c, f2));
    auto dn = catmod::tensor(dm, n);
    auto sw2 = catmod::direct_sum({simple(0), simple(0)}).sum;
    json r;
    r["hom(M,N)_total_dim"] = hom_mn.total_dim();
    r["hom(M,k)_tensor_N_dim_at_w"] = dn.dims[0];
    r["hom(M,k)_tensor_N_iso_Sw^2"] = catmod::modules_isomorphic(dn, sw2);
    return r;
  }
  if (id == "chain3-primes") {
    auto p = gen::chain_poset(3);
    json primes = json::array();
    for (const auto& pr : ttspec::spc_poset(p)) primes.push_back(pr.label);
    return {{"n_primes", primes.size()}, {"primes", primes},
            {"topology", "discrete"}};
  }
  if (id == "chain3-ideals") {
    auto p = fincat::share(gen::chain_poset(3));
    auto rows = ttspec::classify_ideals(p);
    json out = json::array();
    int primes = 0;
    for (const auto& r : rows) {
      out.push_back({{"ideal", r.ideal_label},
                     {"prime", r.is_prime},
                     {"spc_subset", r.spc_subset},
                     {"subset", r.subset_names}});
      if (r.is_prime) ++primes;
    }
    return {{"n_ideals", rows.size()}, {"n_primes", primes}, {"table", out}};
  }
  if (id == "census-chain2") {
    auto p = fincat::share(gen::chain_poset(2));
    ttspec::CensusParams params;
    params.seed = 1;
    params.cones_per_ideal = 50;
    params.tensors_per_ideal = 20;
    params.shifts_per_ideal = 20;
    params.summand_pairs = 20;
    params.radical_samples = 20;
    params.threads = env_threads();
    auto rep = ttspec::oracle_ideal_census(p, f2, params);
    require(rep.passed(), errc::check_failed, "census reported violations");
    return census_json(rep, *p);
  }
  if (id == "crown-sections") {
    auto p = gen::crown_poset();
    json r;
    r["global_dims"] = ttspec::presheaf_section(p, {}, f2, 3).dims;
    json stalks = json::array();
    for (int x = 0; x < 4; ++x) {
      std::vector<int> removed;
      for (int y = 0; y < 4; ++y)
        if (y != x) removed.push_back(y);
      stalks.push_back(
          {{"dims", ttspec::presheaf_section(p, removed, f2, 3).dims},
           {"point", "P^" + p.object_name(x)}});
    }
    r["stalks"] = stalks;
    return r;
  }
  if (id == "two-posets-sections") {
    auto chain2 = gen::chain_poset(2);
    auto disc2 = gen::discrete_poset(2);
    json r;
    r["chain"] = {
        {"global_H0", ttspec::presheaf_section(chain2, {}, f2, 2).dims[0]},
        {"n_primes", ttspec::spc_poset(chain2).size()}};
    r["discrete"] = {
        {"global_H0", ttspec::presheaf_section(disc2, {}, f2, 2).dims[0]},
        {"n_primes", ttspec::spc_poset(disc2).size()}};
    return r;
  }
  if (id == "z2-point-cm") {
    auto t =
        groupact::build_transporter(gen::action_fixture("z2-point").gposet);
    return cm_json(gorcm::cm_spectrum(t, f2));
  }
  if (id == "cm-empty-poset") {
    std::vector<std::vector<int>> no_gens;
    groupact::GPoset gp(fincat::share(gen::chain_poset(3)),
                        groupact::PermGroup::trivial(1), no_gens);
    auto t = groupact::build_transporter(gp);
    return cm_json(gorcm::cm_spectrum(t, f2));
  }
  if (id == "z2-f2-ext") {
    auto z2 = fincat::share(
        groupact::group_as_category(groupact::PermGroup::cyclic(2)));
    return graded_ring_json(cohom::ext_ring(z2, f2, 6));
  }
  if (id == "z2-chain2-gorenstein") {
    auto t = groupact::build_transporter(
        gen::action_fixture("z2-trivial-chain2").gposet);
    json r;
    r["skew_iso_check"] = gorcm::skew_iso_check(t, f2);
    auto rep = gorcm::gorenstein_check(t.cat, f2);
    r["gorenstein"] = rep.gorenstein;
    r["left_injdim"] = rep.left.value;
    r["right_injdim"] = rep.right.value;
    return r;
  }
  if (id == "kunneth-chain3") {
    auto p = fincat::share(gen::chain_poset(3));
    gen::Rng rng(2027);
    int pairs = 20, passed = 0;
    for (int t = 0; t < pairs; ++t) {
      auto a = gen::random_complex(p, f2, rng);
      auto b = gen::random_complex(p, f2, rng);
      if (dcat::kunneth_check(a, b)) ++passed;
    }
    require(passed == pairs, errc::check_failed, "a Kunneth pair failed");
    return {{"pairs", pairs}, {"passed", passed}, {"seed", 2027}};
  }
  if (id == "transporter-z2-swap2") {
    auto t =
        groupact::build_transporter(gen::action_fixture("z2-swap2").gposet);
    auto rep = groupact::orbits_isotropy(t);
    json r;
    r["n_morphisms"] = t.cat->n_morphisms();
    r["ei"] = fincat::is_ei(*t.cat);
    r["n_orbits"] = rep.orbits.size();
    r["stabilizer"] = group_info_json(rep.isotropy_info[0]);
    r["n_spectrum_components"] = ttspec::spc_ei(t.cat, f2).components.size();
    return r;
  }
  fail(errc::invalid_params, "unknown reproduce id " + id +
                                 " (use --list to see the catalogue)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor-triangular invariants of finite EI categories"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--format", g_format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  /* category check */
  auto* cat_cmd = app.add_subcommand("category", "category file operations");
  auto* cat_check = cat_cmd->add_subcommand("check", "validate and classify");
  std::string cat_input;
  cat_check->add_option("--input", cat_input, "category file")->required();
  cat_check->callback([&] {
    auto c = io::load_category(cat_input);
    emit("category check", {{"input", cat_input}}, category_json(c));
  });

  /* transporter build */
  auto* tr_cmd = app.add_subcommand("transporter", "transporter categories");
  auto* tr_build = tr_cmd->add_subcommand("build", "build the category of a G-poset");
  std::string tr_poset, tr_action, tr_out;
  tr_build->add_option("--poset", tr_poset, "poset file")->required();
  tr_build->add_option("--action", tr_action, "action file")->required();
  tr_build->add_option("--out", tr_out, "write the category file here");
  tr_build->callback([&] {
    auto gp = load_gposet(tr_poset, tr_action);
    auto t = groupact::build_transporter(gp);
    auto rep = groupact::orbits_isotropy(t);
    json r = category_json(*t.cat);
    r["group_order"] = gp.group.order();
    json orbits = json::array();
    for (size_t o = 0; o < rep.orbits.size(); ++o) {
      json members = json::array();
      for (int x : rep.orbits[o]) members.push_back(t.cat->object_name(x));
      orbits.push_back({{"isotropy", group_info_json(rep.isotropy_info[o])},
                        {"members", members}});
    }
    r["orbits"] = orbits;
    if (!tr_out.empty()) {
      io::write_file(tr_out, io::format_category(*t.cat));
      r["written"] = tr_out;
    }
    emit("transporter build", {{"action", tr_action}, {"poset", tr_poset}},
         r);
  });

  /* module subcommands */
  auto* mod_cmd = app.add_subcommand("module", "functor module operations");
  std::string mod_cat, mod_file, mod_left, mod_right, mod_out;
  auto* mod_check = mod_cmd->add_subcommand("check", "validate a module");
  mod_check->add_option("--category", mod_cat)->required();
  mod_check->add_option("--module", mod_file)->required();
  mod_check->callback([&] {
    auto c = fincat::share(io::load_category(mod_cat));
    auto m = io::load_module(mod_file, c);
    emit("module check", {{"category", mod_cat}, {"module", mod_file}},
         module_json(m));
  });
  auto* mod_tensor = mod_cmd->add_subcommand("tensor", "pointwise tensor");
  mod_tensor->add_option("--category", mod_cat)->required();
  mod_tensor->add_option("--left", mod_left)->required();
  mod_tensor->add_option("--right", mod_right)->required();
  mod_tensor->add_option("--out", mod_out, "write the result module");
  mod_tensor->callback([&] {
    auto c = fincat::share(io::load_category(mod_cat));
    auto t = catmod::tensor(io::load_module(mod_left, c),
                            io::load_module(mod_right, c));
    t.validate();
    json r = module_json(t);
    if (!mod_out.empty()) {
      io::write_file(mod_out, io::format_module(t));
      r["written"] = mod_out;
    }
    emit("module tensor",
         {{"category", mod_cat}, {"left", mod_left}, {"right", mod_right}},
         r);
  });
  auto* mod_hom = mod_cmd->add_subcommand("hom", "internal hom");
  mod_hom->add_option("--category", mod_cat)->required();
  mod_hom->add_option("--left", mod_left)->required();
  mod_hom->add_option("--right", mod_right)->required();
  mod_hom->add_option("--out", mod_out, "write the result module");
  mod_hom->callback([&] {
    auto c = fincat::share(io::load_category(mod_cat));
    auto h = catmod::internal_hom(io::load_module(mod_left, c),
                                  io::load_module(mod_right, c));
    json r = module_json(h);
    if (!mod_out.empty()) {
      io::write_file(mod_out, io::format_module(h));
      r["written"] = mod_out;
    }
    emit("module hom",
         {{"category", mod_cat}, {"left", mod_left}, {"right", mod_right}},
         r);
  });
  auto* mod_filt = mod_cmd->add_subcommand("filtrate", "class filtration");
  mod_filt->add_option("--category", mod_cat)->required();
  mod_filt->add_option("--module", mod_file)->required();
  mod_filt->callback([&] {
    auto c = fincat::share(io::load_category(mod_cat));
    auto m = io::load_module(mod_file, c);
    auto cl = fincat::classify(*c);
    auto steps = catmod::filtration(m, cl);
    json st = json::array();
    for (const auto& s : steps)
      st.push_back({{"class", c->object_name(cl.representative[s.class_id])},
                    {"quotient_dim", s.quotient.total_dim()},
                    {"sub_dim", s.sub.total_dim()}});
    emit("module filtrate", {{"category", mod_cat}, {"module", mod_file}},
         {{"module", module_json(m)}, {"steps", st}});
  });

  /* complex subcommands */
  auto* cx_cmd = app.add_subcommand("complex", "bounded complex operations");
  std::string cx_cat, cx_file, cx_left, cx_right, cx_out;
  bool cx_kunneth = false, cx_coarse = false;
  auto* cx_coh = cx_cmd->add_subcommand("cohomology", "graded cohomology");
  cx_coh->add_option("--category", cx_cat)->required();
  cx_coh->add_option("--complex", cx_file)->required();
  cx_coh->callback([&] {
    auto c = fincat::share(io::load_category(cx_cat));
    auto x = io::load_complex(cx_file, c);
    auto h = dcat::cohomology(x);
    json degrees = json::array();
    for (int d = h.lo; d < h.lo + (int)h.pieces.size(); ++d)
      degrees.push_back({{"degree", d}, {"module", module_json(h.at(d))}});
    emit("complex cohomology", {{"category", cx_cat}, {"complex", cx_file}},
         {{"acyclic", h.total_dim() == 0}, {"cohomology", degrees}});
  });
  auto* cx_tensor = cx_cmd->add_subcommand("tensor", "total tensor complex");
  cx_tensor->add_option("--category", cx_cat)->required();
  cx_tensor->add_option("--left", cx_left)->required();
  cx_tensor->add_option("--right", cx_right)->required();
  cx_tensor->add_flag("--kunneth", cx_kunneth, "verify the Kunneth formula");
  cx_tensor->add_option("--out", cx_out, "write the result (file stem)");
  cx_tensor->callback([&] {
    auto c = fincat::share(io::load_category(cx_cat));
    auto a = io::load_complex(cx_left, c);
    auto b = io::load_complex(cx_right, c);
    auto t = dcat::tensor_complex(a, b);
    json r;
    r["lo"] = t.empty() ? 0 : t.lo;
    json dims = json::array();
    for (const auto& term : t.terms) dims.push_back(term.total_dim());
    r["term_dims"] = dims;
    if (cx_kunneth) {
      bool ok = dcat::kunneth_check(a, b);
      require(ok, errc::check_failed, "Kunneth comparison failed");
      r["kunneth"] = ok;
    }
    if (!cx_out.empty()) r["written"] = io::save_complex(t, cx_out);
    emit("complex tensor",
         {{"category", cx_cat}, {"left", cx_left}, {"right", cx_right}}, r);
  });
  auto* cx_supp = cx_cmd->add_subcommand("support", "cohomological support");
  cx_supp->add_option("--category", cx_cat)->required();
  cx_supp->add_option("--complex", cx_file)->required();
  cx_supp->add_flag("--coarse", cx_coarse, "support by isomorphism class");
  cx_supp->callback([&] {
    auto c = fincat::share(io::load_category(cx_cat));
    auto x = io::load_complex(cx_file, c);
    json r;
    json supp = json::array();
    for (int o : dcat::support_poset(x)) supp.push_back(c->object_name(o));
    r["support"] = supp;
    if (cx_coarse) {
      auto cl = fincat::classify(*c);
      json cs = json::array();
      for (int a : dcat::coarse_support(x, cl))
        cs.push_back(c->object_name(cl.representative[a]));
      r["coarse_support"] = cs;
    }
    emit("complex support", {{"category", cx_cat}, {"complex", cx_file}}, r);
  });

  /* spectrum */
  auto* spec_cmd = app.add_subcommand("spectrum", "Balmer spectrum");
  std::string sp_input, sp_action;
  long long sp_char = 0;
  bool sp_cm = false;
  spec_cmd->add_option("--input", sp_input, "category (or poset) file")
      ->required();
  spec_cmd->add_option("--action", sp_action,
                       "action file (input is then a poset)");
  spec_cmd->add_option("--char", sp_char, "field characteristic (0 = Q)");
  spec_cmd->add_flag("--cm", sp_cm, "CM spectrum of the transporter");
  spec_cmd->callback([&] {
    Field k = Field::of_characteristic(sp_char);
    json params = {{"char", sp_char}, {"cm", sp_cm}, {"input", sp_input}};
    if (sp_cm || !sp_action.empty()) {
      auto gp = load_gposet(sp_input, sp_action);
      auto t = groupact::build_transporter(gp);
      if (sp_cm)
        emit("spectrum", params, cm_json(gorcm::cm_spectrum(t, k)));
      else
        emit("spectrum", params, spectrum_json(ttspec::spc_ei(t.cat, k)));
    } else {
      auto c = fincat::share(io::load_category(sp_input));
      emit("spectrum", params, spectrum_json(ttspec::spc_ei(c, k)));
    }
  });

  /* ideals */
  auto* id_cmd = app.add_subcommand("ideals", "tensor ideal classification");
  std::string id_input;
  auto* id_classify = id_cmd->add_subcommand("classify", "the subset table");
  id_classify->add_option("--input", id_input, "poset file")->required();
  id_classify->callback([&] {
    auto p = fincat::share(io::load_category(id_input));
    auto rows = ttspec::classify_ideals(p);
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"cosupport_size", r.cosupport.size()},
                     {"ideal", r.ideal_label},
                     {"improper", r.is_improper},
                     {"prime", r.is_prime},
                     {"spc_subset", r.spc_subset},
                     {"subset", r.subset_names},
                     {"zero", r.is_zero}});
    emit("ideals classify", {{"input", id_input}},
         {{"n_ideals", rows.size()}, {"table", out}});
  });
  auto* id_census = id_cmd->add_subcommand("census", "independent oracle");
  long long ce_char = 2, ce_seed = 1, ce_cones = 200;
  id_census->add_option("--input", id_input, "poset file (<= 3 objects)")
      ->required();
  id_census->add_option("--char", ce_char, "2 or 3");
  id_census->add_option("--seed", ce_seed, "sampling seed");
  id_census->add_option("--cones", ce_cones, "cone samples per ideal");
  id_census->callback([&] {
    auto p = fincat::share(io::load_category(id_input));
    ttspec::CensusParams params;
    params.seed = static_cast<std::uint64_t>(ce_seed);
    params.cones_per_ideal = static_cast<int>(ce_cones);
    params.threads = env_threads();
    auto rep = ttspec::oracle_ideal_census(
        p, Field::of_characteristic(ce_char), params);
    emit("ideals census",
         {{"char", ce_char}, {"cones", ce_cones}, {"input", id_input},
          {"seed", ce_seed}},
         census_json(rep, *p));
    require(rep.passed(), errc::check_failed, "census reported violations");
  });

  /* gorenstein / cm-spectrum */
  auto* gor_cmd = app.add_subcommand("gorenstein", "injective dimensions");
  std::string go_trans, go_poset, go_action;
  long long go_char = 2, go_bound = -1;
  gor_cmd->add_option("--transporter", go_trans, "transporter file");
  gor_cmd->add_option("--poset", go_poset, "poset file");
  gor_cmd->add_option("--action", go_action, "action file");
  gor_cmd->add_option("--char", go_char, "field characteristic");
  gor_cmd->add_option("--bound", go_bound, "resolution bound");
  gor_cmd->callback([&] {
    auto gp = load_transporter_spec(go_trans, go_poset, go_action);
    auto t = groupact::build_transporter(gp);
    Field k = Field::of_characteristic(go_char);
    auto rep = gorcm::gorenstein_check(t.cat, k, static_cast<int>(go_bound));
    json r;
    r["skew_iso_check"] = gorcm::skew_iso_check(t, k);
    r["gorenstein"] = rep.gorenstein;
    r["left"] = {{"finite", rep.left.finite}, {"value", rep.left.value}};
    r["right"] = {{"finite", rep.right.finite}, {"value", rep.right.value}};
    emit("gorenstein",
         {{"bound", go_bound}, {"char", go_char}, {"poset", go_poset},
          {"transporter", go_trans}},
         r);
  });

  auto* cm_cmd = app.add_subcommand("cm-spectrum", "CM spectrum");
  std::string cm_trans, cm_poset, cm_action;
  long long cm_char = 2;
  cm_cmd->add_option("--transporter", cm_trans, "transporter file");
  cm_cmd->add_option("--poset", cm_poset, "poset file");
  cm_cmd->add_option("--action", cm_action, "action file");
  cm_cmd->add_option("--char", cm_char, "field characteristic");
  cm_cmd->callback([&] {
    auto gp = load_transporter_spec(cm_trans, cm_poset, cm_action);
    auto t = groupact::build_transporter(gp);
    emit("cm-spectrum",
         {{"char", cm_char}, {"poset", cm_poset}, {"transporter", cm_trans}},
         cm_json(gorcm::cm_spectrum(t, Field::of_characteristic(cm_char))));
  });

  /* cohomology */
  auto* coh_cmd = app.add_subcommand("cohomology", "cohomology rings");
  std::string coh_poset, coh_engine = "both";
  long long coh_char = 2, coh_cutoff = 6;
  coh_cmd->add_option("--poset", coh_poset, "poset file")->required();
  coh_cmd->add_option("--cutoff", coh_cutoff, "top degree");
  coh_cmd->add_option("--engine", coh_engine, "simplicial, ext or both")
      ->check(CLI::IsMember({"simplicial", "ext", "both"}));
  coh_cmd->add_option("--char", coh_char, "field characteristic");
  coh_cmd->callback([&] {
    auto p = fincat::share(io::load_category(coh_poset));
    Field k = Field::of_characteristic(coh_char);
    json r;
    if (coh_engine != "ext")
      r["simplicial"] = graded_ring_json(
          cohom::simplicial_cohomology(*p, k, (int)coh_cutoff));
    if (coh_engine != "simplicial")
      r["ext"] = graded_ring_json(cohom::ext_ring(p, k, (int)coh_cutoff));
    if (coh_engine == "both") {
      bool agree = r["simplicial"]["dims"] == r["ext"]["dims"];
      require(agree, errc::check_failed,
              "the two engines disagree on graded dimensions");
      r["engines_agree"] = agree;
    }
    emit("cohomology",
         {{"char", coh_char}, {"cutoff", coh_cutoff}, {"engine", coh_engine},
          {"poset", coh_poset}},
         r);
  });

  /* sections */
  auto* sec_cmd =
      app.add_subcommand("sections", "structure presheaf sections");
  std::string se_poset, se_remove;
  long long se_char = 2, se_cutoff = 4;
  sec_cmd->add_option("--poset", se_poset, "poset file")->required();
  sec_cmd->add_option("--remove", se_remove,
                      "comma-separated objects whose primes form Z");
  sec_cmd->add_option("--cutoff", se_cutoff, "top degree");
  sec_cmd->add_option("--char", se_char, "field characteristic");
  sec_cmd->callback([&] {
    auto p = io::load_category(se_poset);
    auto removed = parse_object_list(p, se_remove);
    auto r = ttspec::presheaf_section(
        p, removed, Field::of_characteristic(se_char), (int)se_cutoff);
    emit("sections",
         {{"char", se_char}, {"cutoff", se_cutoff}, {"poset", se_poset},
          {"remove", se_remove}},
         graded_ring_json(r));
  });

  /* reproduce */
  auto* rep_cmd = app.add_subcommand("reproduce", "paper example pipelines");
  std::string rp_id, rp_dir = "data/expected";
  bool rp_list = false, rp_bless = false;
  rep_cmd->add_option("--id", rp_id, "example id");
  rep_cmd->add_option("--expected-dir", rp_dir, "golden file directory");
  rep_cmd->add_flag("--list", rp_list, "list the catalogue");
  rep_cmd->add_flag("--bless", rp_bless, "rewrite the golden file");
  rep_cmd->callback([&] {
    if (rp_list) {
      json ids = json::array();
      for (const auto& [id, what] : kReproIds)
        ids.push_back({{"id", id}, {"what", what}});
      emit("reproduce", {{"list", true}}, {{"catalogue", ids}});
      return;
    }
    require(!rp_id.empty(), errc::invalid_params, "--id or --list is required");
    json result = reproduce_result(rp_id);
    std::ostringstream body;
    render_table(result, "", body);
    std::string actual = body.str();
    auto golden = std::filesystem::path(rp_dir) / (rp_id + ".txt");
    if (rp_bless) {
      io::write_file(golden.string(), actual);
      emit("reproduce", {{"id", rp_id}},
           {{"blessed", golden.string()}, {"report", result}});
      return;
    }
    std::string expected = io::read_file(golden.string());
    if (expected != actual) {
      std::cout << "--- expected (" << golden.string() << ")\n"
                << expected << "--- actual\n"
                << actual;
      fail(errc::mismatch, "report differs from the committed golden");
    }
    emit("reproduce", {{"id", rp_id}},
         {{"matches", true}, {"report", result}});
  });

  /* generate */
  auto* gen_cmd = app.add_subcommand("generate", "fixture generators");
  std::string ge_kind, ge_outdir = ".", ge_name = "z2-swap2", ge_cat;
  long long ge_n = 3, ge_seed = 1;
  gen_cmd->add_option("--kind", ge_kind,
                      "chain, crown, random-poset, group-action, "
                      "random-complex")
      ->required()
      ->check(CLI::IsMember({"chain", "crown", "random-poset", "group-action",
                             "random-complex"}));
  gen_cmd->add_option("--n", ge_n, "size parameter");
  gen_cmd->add_option("--seed", ge_seed, "random seed");
  gen_cmd->add_option("--out-dir", ge_outdir, "output directory");
  gen_cmd->add_option("--name", ge_name, "group-action fixture name");
  gen_cmd->add_option("--category", ge_cat, "category file (random-complex)");
  gen_cmd->callback([&] {
    std::filesystem::create_directories(ge_outdir);
    auto out = [&](const std::string& f) {
      return (std::filesystem::path(ge_outdir) / f).string();
    };
    json files = json::array();
    if (ge_kind == "chain") {
      require(ge_n >= 1, errc::invalid_params, "chain needs --n >= 1");
      auto f = out("chain" + std::to_string(ge_n) + ".cat");
      io::write_file(f, io::format_category(gen::chain_poset((int)ge_n)));
      files.push_back(f);
    } else if (ge_kind == "crown") {
      auto f = out("crown4.cat");
      io::write_file(f, io::format_category(gen::crown_poset()));
      files.push_back(f);
    } else if (ge_kind == "random-poset") {
      auto f = out("random" + std::to_string(ge_n) + "-" +
                   std::to_string(ge_seed) + ".cat");
      io::write_file(f, io::format_category(gen::random_poset(
                            (int)ge_n, static_cast<std::uint64_t>(ge_seed))));
      files.push_back(f);
    } else if (ge_kind == "group-action") {
      auto fx = gen::action_fixture(ge_name);
      auto pf = out(ge_name + ".cat");
      auto af = out(ge_name + ".act");
      auto tf = out(ge_name + ".trans");
      io::write_file(pf, io::format_category(*fx.gposet.poset));
      io::write_file(af, groupact::format_action(fx.gposet));
      io::write_file(tf, "ttgeo transporter v1\nposet = " + ge_name +
                             ".cat\naction = " + ge_name + ".act\n");
      files.push_back(pf);
      files.push_back(af);
      files.push_back(tf);
    } else if (ge_kind == "random-complex") {
      require(!ge_cat.empty(), errc::invalid_params,
              "--category is required for random-complex");
      auto c = fincat::share(io::load_category(ge_cat));
      gen::Rng rng(static_cast<std::uint64_t>(ge_seed));
      auto x = gen::random_complex(c, Field::fp(2), rng);
      for (auto& f :
           io::save_complex(x, out("complex-" + std::to_string(ge_seed))))
        files.push_back(f);
    }
    emit("generate",
         {{"kind", ge_kind}, {"n", ge_n}, {"name", ge_name},
          {"seed", ge_seed}},
         {{"files", files}});
  });

  try {
    app.parse(argc, argv);
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ttg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_math_failure() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
