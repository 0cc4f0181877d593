#include "doctest.h"
#include "ttg/gen.hpp"
#include "ttg/io.hpp"
#include "ttg/ttspec.hpp"

using namespace ttg;
using namespace ttg::ttspec;
using fincat::CatPtr;

namespace {

CatPtr chain(int n) { return fincat::share(gen::chain_poset(n)); }

dcat::BoundedComplex simple_stalk(CatPtr c, Field k, int x) {
  auto cl = fincat::classify(*c);
  return dcat::stalk_complex(
      catmod::simple_from_rep(c, k, cl, cl.class_of[x],
                              {Matrix::identity(k, 1)}),
      0);
}

}  // namespace

TEST_CASE("spc of posets: one prime per object, discrete topology") {
  auto c3 = chain(3);
  auto primes = spc_poset(*c3);
  REQUIRE(primes.size() == 3);
  CHECK(primes[0].label == "P^c0");

  CHECK(spc_poset(gen::discrete_poset(1)).size() == 1);
  CHECK(spc_poset(gen::discrete_poset(2)).size() == 2);

  Field k = Field::fp(2);
  for (int x = 0; x < 3; ++x) {
    auto stalk = simple_stalk(c3, k, x);
    // S_x lies in P^y exactly for y ≠ x; this is the discreteness statement
    for (const auto& pr : primes)
      CHECK(prime_membership(stalk, pr) == (pr.object != x));
  }
}

TEST_CASE("ideal membership through supports") {
  auto c3 = chain(3);
  Field k = Field::fp(2);
  auto triv = dcat::stalk_complex(catmod::trivial_module(c3, k), 0);
  auto ideal01 = ideal_from_subset(c3, {0, 1});
  auto ideal_all = ideal_from_subset(c3, {0, 1, 2});

  CHECK(ideal_membership(simple_stalk(c3, k, 0), ideal01));
  CHECK_FALSE(ideal_membership(simple_stalk(c3, k, 2), ideal01));
  // the unit lies only in the improper ideal
  CHECK_FALSE(ideal_membership(triv, ideal01));
  CHECK(ideal_membership(triv, ideal_all));
  // acyclic complexes lie in every ideal, including the zero one
  auto idm = catmod::identity_map(catmod::trivial_module(c3, k));
  dcat::ChainMap f;
  f.src = dcat::stalk_complex(idm.src, 0);
  f.tgt = f.src;
  f.lo = 0;
  f.comps = {idm};
  auto acyclic = dcat::cone(f);
  CHECK(ideal_membership(acyclic, ideal_from_subset(c3, {})));
}

TEST_CASE("classify_ideals on the 3-chain: 8 ideals, 3 primes") {
  auto c3 = chain(3);
  auto rows = classify_ideals(c3);
  REQUIRE(rows.size() == 8);
  int primes = 0, zero = 0, improper = 0;
  for (const auto& r : rows) {
    if (r.is_prime) ++primes;
    if (r.is_zero) ++zero;
    if (r.is_improper) ++improper;
    // cosupport is the complement of the subset
    CHECK(r.subset.size() + r.cosupport.size() == 3);
  }
  CHECK(primes == 3);
  CHECK(zero == 1);
  CHECK(improper == 1);
  // the singleton poset has exactly the two trivial ideals
  CHECK(classify_ideals(fincat::share(gen::discrete_poset(1))).size() == 2);
}

TEST_CASE("round trip: subset -> ideal -> support subset is the identity") {
  Field k = Field::fp(2);
  for (auto cp : {chain(3), fincat::share(gen::crown_poset()),
                  fincat::share(gen::random_poset(5, 77))}) {
    int n = cp->n_objects();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> subset;
      for (int x = 0; x < n; ++x)
        if (mask & (1 << x)) subset.push_back(x);
      auto ideal = ideal_from_subset(cp, subset);
      // support of the ideal = objects whose simple stalk lies inside
      std::vector<int> support;
      for (int x = 0; x < n; ++x)
        if (ideal_membership(simple_stalk(cp, k, x), ideal))
          support.push_back(x);
      CHECK(support == subset);
    }
  }
}

TEST_CASE("prime preimages along convex subcategories") {
  auto c2 = chain(2);
  // E = {c0}: the zero ideal pulls back to <S_c1> = P^{c0}
  auto e = fincat::induced_subcategory(*c2, {0});
  auto zero_ideal = ideal_from_subset(fincat::share(e.cat), {});
  auto pre = prime_preimage(c2, e, zero_ideal);
  CHECK(pre.preimage.objset == std::vector<int>{1});
  CHECK(pre.off_subcategory == std::vector<int>{1});

  Field k = Field::fp(2);
  // membership of S_y for y outside E is automatic
  CHECK(ideal_membership(simple_stalk(c2, k, 1), pre.preimage));
  CHECK_FALSE(ideal_membership(simple_stalk(c2, k, 0), pre.preimage));

  // E = the whole category: the preimage is the ideal itself
  auto whole = fincat::induced_subcategory(*c2, {0, 1});
  auto ideal = ideal_from_subset(fincat::share(whole.cat), {0});
  auto pre2 = prime_preimage(c2, whole, ideal);
  CHECK(pre2.preimage.objset == std::vector<int>{0});

  // non-convex subcategory is refused
  auto c3 = chain(3);
  auto bad = fincat::induced_subcategory(*c3, {0, 2});
  CHECK_THROWS_WITH_AS(
      prime_preimage(c3, bad, ideal_from_subset(fincat::share(bad.cat), {})),
      doctest::Contains("NotConvex"), error);
}

TEST_CASE("spc_ei: posets give exact points, matching spc_poset") {
  Field k = Field::fp(2);
  for (auto cp : {chain(3), fincat::share(gen::crown_poset())}) {
    auto sd = spc_ei(cp, k);
    auto primes = spc_poset(*cp);
    REQUIRE(sd.components.size() == primes.size());
    for (const auto& comp : sd.components) {
      CHECK(comp.kind == ComponentKind::ExactPoint);
      CHECK(comp.aut.order == 1);
    }
  }
}

TEST_CASE("spc_ei on transporter categories: one component per orbit") {
  Field k = Field::fp(2);
  for (const auto& fx : gen::all_action_fixtures()) {
    auto t = groupact::build_transporter(fx.gposet);
    auto rep = groupact::orbits_isotropy(t);
    auto sd = spc_ei(t.cat, k);
    REQUIRE(sd.components.size() == rep.orbits.size());
    for (size_t i = 0; i < rep.orbits.size(); ++i) {
      CHECK(sd.components[i].aut == rep.isotropy_info[i]);
      CHECK((sd.components[i].kind == ComponentKind::ExactPoint) ==
            (rep.isotropy_info[i].order == 1));
    }
  }
  // G∝(G/H) with H = e: a single exact point
  auto swap2 = groupact::build_transporter(gen::action_fixture("z2-swap2").gposet);
  auto sd = spc_ei(swap2.cat, k);
  REQUIRE(sd.components.size() == 1);
  CHECK(sd.components[0].kind == ComponentKind::ExactPoint);
  // Z/2 on a point: one symbolic component labeled C2
  auto pt = groupact::build_transporter(gen::action_fixture("z2-point").gposet);
  auto sd2 = spc_ei(pt.cat, k);
  REQUIRE(sd2.components.size() == 1);
  CHECK(sd2.components[0].kind == ComponentKind::SymbolicSpecH);
  CHECK(sd2.components[0].aut.name == "C2");
}

TEST_CASE("spc_ei rejects non-EI categories") {
  auto monoid = io::parse_category(
      "ttgeo category v1\n[objects]\npt\n[morphisms]\ne: pt -> pt\n"
      "[compose]\ne = e . e\n");
  CHECK_THROWS_WITH_AS(spc_ei(fincat::share(monoid), Field::fp(2)),
                       doctest::Contains("NotEI"), error);
}

TEST_CASE("coarse support lands in spectrum components") {
  Field k = Field::fp(2);
  auto t = groupact::build_transporter(
      gen::action_fixture("z2-trivial-chain2").gposet);
  auto cl = fincat::classify(*t.cat);
  auto sd = spc_ei(t.cat, k);
  auto list = catmod::simple_modules(t.cat, k);
  for (const auto& s : list.simples) {
    auto cs = dcat::coarse_support(dcat::stalk_complex(s.mod, 0), cl);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] < (int)sd.components.size());
    CHECK(sd.components[cs[0]].class_id == s.class_id);
  }
}

TEST_CASE("presheaf sections return poset cohomology") {
  Field k = Field::fp(3);
  auto crown = gen::crown_poset();
  auto global = presheaf_section(crown, {}, k, 2);
  CHECK(global.dims == std::vector<int>{1, 1, 0});
  for (int x = 0; x < 4; ++x) {
    std::vector<int> removed;
    for (int y = 0; y < 4; ++y)
      if (y != x) removed.push_back(y);
    auto stalk = presheaf_section(crown, removed, k, 2);
    CHECK(stalk.dims == std::vector<int>{1, 0, 0});
  }
}

TEST_CASE("ideal census on the 2-chain passes with zero violations") {
  CensusParams params;
  params.seed = 42;
  params.cones_per_ideal = 12;
  params.tensors_per_ideal = 8;
  params.shifts_per_ideal = 8;
  params.summand_pairs = 8;
  params.radical_samples = 8;
  auto report = oracle_ideal_census(chain(2), Field::fp(2), params);
  CHECK(report.total_ideals == 4);
  CHECK(report.distinct);
  CHECK(report.violations.empty());
  CHECK(report.passed());
  CHECK(report.witnesses.size() == 6);  // all pairs separated
}

TEST_CASE("census is deterministic across thread counts") {
  CensusParams base;
  base.seed = 99;
  base.cones_per_ideal = 6;
  base.tensors_per_ideal = 4;
  base.shifts_per_ideal = 4;
  base.summand_pairs = 4;
  base.radical_samples = 4;
  auto one = oracle_ideal_census(chain(2), Field::fp(3), base);
  base.threads = 3;
  auto three = oracle_ideal_census(chain(2), Field::fp(3), base);
  CHECK(one.violations == three.violations);
  CHECK(one.witnesses == three.witnesses);
  REQUIRE(one.subsets.size() == three.subsets.size());
  for (size_t i = 0; i < one.subsets.size(); ++i)
    CHECK(one.subsets[i].subset == three.subsets[i].subset);
}

TEST_CASE("census budget and field guards") {
  CHECK_THROWS_WITH_AS(
      oracle_ideal_census(fincat::share(gen::random_poset(4, 1)),
                          Field::fp(2)),
      doctest::Contains("BudgetExceeded"), error);
  CHECK_THROWS_AS(oracle_ideal_census(chain(2), Field::fp(5)), error);
}
