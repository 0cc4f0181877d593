#include "ttg/gen.hpp"

#include <algorithm>

#include "ttg/io.hpp"

namespace ttg::gen {

using catmod::FunctorModule;
using catmod::ModuleMap;
using dcat::BoundedComplex;
using groupact::GPoset;
using groupact::PermGroup;

fincat::FiniteCategory chain_poset(int n) {
  require(n >= 1, errc::invalid_params, "chain needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) rel.push_back({i - 1, i});
  }
  return io::poset_category(names, rel);
}

fincat::FiniteCategory discrete_poset(int n) {
  require(n >= 1, errc::invalid_params, "discrete poset needs n >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return io::poset_category(names, {});
}

fincat::FiniteCategory crown_poset() {
  return io::poset_category({"w", "x", "y", "z"},
                            {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

fincat::FiniteCategory random_poset(int n, std::uint64_t seed,
                                    int density_pct) {
  require(n >= 1 && density_pct >= 0 && density_pct <= 100,
          errc::invalid_params, "bad random poset parameters");
  Rng rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pick(rng, 100) < density_pct) rel.push_back({i, j});
  return io::poset_category(names, rel);
}

/* ---- named transporter fixtures ----
 * The set covers a trivial action, free actions, and mixed stabilizers. */

std::vector<std::string> action_fixture_names() {
  return {"z2-swap2",  "z2-trivial-chain2", "z3-rot3",
          "s3-natural3", "z2-vee-swap",     "z2-point"};
}

ActionFixture action_fixture(const std::string& name) {
  auto share = [](fincat::FiniteCategory c) { return fincat::share(std::move(c)); };
  if (name == "z2-swap2")
    return {name, GPoset(share(discrete_poset(2)), PermGroup::cyclic(2),
                         {{1, 0}})};
  if (name == "z2-trivial-chain2")
    return {name,
            GPoset(share(chain_poset(2)), PermGroup::cyclic(2), {{0, 1}})};
  if (name == "z3-rot3")
    return {name, GPoset(share(discrete_poset(3)), PermGroup::cyclic(3),
                         {{1, 2, 0}})};
  if (name == "s3-natural3")
    return {name, GPoset(share(discrete_poset(3)), PermGroup::symmetric(3),
                         {{1, 0, 2}, {1, 2, 0}})};
  if (name == "z2-vee-swap") {
    // w < y, w < z with y,z swapped: stabilizers C2 at w, trivial on {y,z}
    auto p = share(io::poset_category({"w", "y", "z"}, {{0, 1}, {0, 2}}));
    return {name, GPoset(p, PermGroup::cyclic(2), {{0, 2, 1}})};
  }
  if (name == "z2-point")
    return {name,
            GPoset(share(discrete_poset(1)), PermGroup::cyclic(2), {{0}})};
  fail(errc::invalid_params, "unknown action fixture " + name);
}

std::vector<ActionFixture> all_action_fixtures() {
  std::vector<ActionFixture> out;
  for (const auto& n : action_fixture_names()) out.push_back(action_fixture(n));
  return out;
}

/* ---- seeded random algebra objects ---- */

Scalar random_scalar(const Field& k, Rng& rng) {
  if (k.is_fp())
    return k.from_int(pick(rng, static_cast<int>(k.characteristic())));
  return k.from_int(pick(rng, 7) - 3);
}

catmod::ModuleMap random_hom(const FunctorModule& m, const FunctorModule& n,
                             Rng& rng) {
  auto basis = catmod::hom_space(m, n);
  ModuleMap f = catmod::zero_map(m, n);
  for (const auto& b : basis)
    f = catmod::add(f, catmod::scale(b, random_scalar(m.field, rng)));
  return f;
}

FunctorModule random_module(fincat::CatPtr c, Field k, Rng& rng, int size) {
  std::vector<FunctorModule> src, tgt;
  int ns = 1 + pick(rng, size), nt = 1 + pick(rng, size);
  for (int i = 0; i < ns; ++i)
    src.push_back(catmod::representable(c, k, pick(rng, c->n_objects())));
  for (int i = 0; i < nt; ++i)
    tgt.push_back(catmod::representable(c, k, pick(rng, c->n_objects())));
  ModuleMap f = random_hom(catmod::direct_sum(src).sum,
                           catmod::direct_sum(tgt).sum, rng);
  return pick(rng, 2) == 0 ? catmod::cokernel_of(f).module
                           : catmod::kernel_of(f).module;
}

BoundedComplex random_complex(fincat::CatPtr c, Field k, Rng& rng,
                              int pieces) {
  std::vector<BoundedComplex> parts;
  int n = 1 + pick(rng, pieces);
  for (int i = 0; i < n; ++i) {
    int deg = pick(rng, 3) - 1;
    if (pick(rng, 2) == 0) {
      parts.push_back(
          dcat::stalk_complex(random_module(c, k, rng, 2), deg));
    } else {
      auto a = random_module(c, k, rng, 2);
      auto b = random_module(c, k, rng, 2);
      parts.push_back(dcat::two_term_complex(random_hom(a, b, rng), deg));
    }
  }
  BoundedComplex r = dcat::direct_sum_complex(parts);
  if (pick(rng, 3) == 0 && !r.empty()) {
    // throw in a cone over a random self-map
    auto maps = dcat::chain_map_space(r, r);
    if (!maps.empty()) {
      dcat::ChainMap f = maps[pick(rng, static_cast<int>(maps.size()))];
      Scalar s = random_scalar(k, rng);
      for (auto& comp : f.comps) comp = catmod::scale(comp, s);
      r = dcat::cone(f);
    }
  }
  r.normalize();
  return r;
}

dcat::ChainMap random_chain_map(const BoundedComplex& a,
                                const BoundedComplex& b, Rng& rng) {
  auto basis = dcat::chain_map_space(a, b);
  if (basis.empty()) return dcat::zero_chain_map(a, b);
  dcat::ChainMap f = basis[0];
  Scalar s0 = random_scalar(a.field, rng);
  for (auto& comp : f.comps) comp = catmod::scale(comp, s0);
  for (size_t i = 1; i < basis.size(); ++i) {
    Scalar s = random_scalar(a.field, rng);
    for (size_t d = 0; d < f.comps.size(); ++d)
      f.comps[d] = catmod::add(f.comps[d], catmod::scale(basis[i].comps[d], s));
  }
  return f;
}

BoundedComplex random_ideal_member(fincat::CatPtr c, Field k, Rng& rng,
                                   const std::vector<int>& objects) {
  if (objects.empty()) return dcat::zero_complex(c, k);
  auto cl = fincat::classify(*c);
  std::vector<BoundedComplex> parts;
  int n = 1 + pick(rng, 2);
  for (int i = 0; i < n; ++i) {
    int x = objects[pick(rng, static_cast<int>(objects.size()))];
    auto sx = catmod::simple_from_rep(c, k, cl, cl.class_of[x],
                                      {Matrix::identity(k, 1)});
    auto piece = dcat::tensor_complex(random_complex(c, k, rng, 2),
                                      dcat::stalk_complex(sx, 0));
    parts.push_back(dcat::shift(piece, pick(rng, 3) - 1));
  }
  auto r = dcat::direct_sum_complex(parts);
  r.normalize();
  return r;
}

}  // namespace ttg::gen
