// Acceptance suite: exact reproduction of the worked examples plus the
// property batteries, one criterion per section, one PASS/FAIL line each.
// Everything is pinned: fields, seeds, sample counts, cutoffs.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "ttg/cohom.hpp"
#include "ttg/gen.hpp"
#include "ttg/gorcm.hpp"
#include "ttg/io.hpp"
#include "ttg/ttspec.hpp"

using namespace ttg;
using fincat::CatPtr;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%s] %2d. %-38s %6lldms  %s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), static_cast<long long>(ms), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

catmod::FunctorModule simple_at(CatPtr c, Field k, int x) {
  auto cl = fincat::classify(*c);
  return catmod::simple_from_rep(c, k, cl, cl.class_of[x],
                                 {Matrix::identity(k, 1)});
}

std::vector<CatPtr> poset_fixtures() {
  return {fincat::share(gen::chain_poset(2)),
          fincat::share(gen::chain_poset(3)),
          fincat::share(gen::crown_poset()),
          fincat::share(gen::discrete_poset(2))};
}

}  // namespace

int main() {
  std::printf("ttgeo acceptance suite (exact arithmetic, fixed seeds)\n");

  criterion(1, "rigidity counterexample (crown)", [](std::string& d) {
    for (Field k : {Field::fp(2), Field::rationals()}) {
      auto c = fincat::share(gen::crown_poset());
      auto m = catmod::direct_sum({simple_at(c, k, 2), simple_at(c, k, 3)}).sum;
      auto n = simple_at(c, k, 0);
      if (catmod::internal_hom(m, n).total_dim() != 0) return false;
      auto dn = catmod::tensor(
          catmod::internal_hom(m, catmod::trivial_module(c, k)), n);
      if (dn.dims[0] != 2) return false;
      auto sw2 = catmod::direct_sum({simple_at(c, k, 0), simple_at(c, k, 0)}).sum;
      if (!catmod::modules_isomorphic(dn, sw2)) return false;
    }
    d = "hom(M,N)=0, dim[hom(M,k)⊗N](w)=2 over F2 and Q";
    return true;
  });

  criterion(2, "prime census on the 3-chain", [](std::string& d) {
    auto p = fincat::share(gen::chain_poset(3));
    auto primes = ttspec::spc_poset(*p);
    if (primes.size() != 3) return false;
    if (primes[0].label != "P^c0" || primes[1].label != "P^c1" ||
        primes[2].label != "P^c2")
      return false;
    if (ttspec::classify_ideals(p).size() != 8) return false;
    ttspec::CensusParams params;
    params.seed = 20260809;
    params.cones_per_ideal = 200;
    auto rep = ttspec::oracle_ideal_census(p, Field::fp(2), params);
    if (!rep.passed()) return false;
    d = "3 primes, 8 ideals, census: " + std::to_string(rep.subsets.size()) +
        " ideals x 200 cones, 0 violations";
    return true;
  });

  criterion(3, "classification round trip (<=5 objects)", [](std::string& d) {
    Field k = Field::fp(2);
    std::vector<CatPtr> posets = poset_fixtures();
    posets.push_back(fincat::share(gen::random_poset(5, 424242)));
    posets.push_back(fincat::share(gen::random_poset(4, 515151)));
    int subsets = 0;
    for (const auto& p : posets) {
      int n = p->n_objects();
      if (n > 5) return false;
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int x = 0; x < n; ++x)
          if (mask & (1 << x)) s.push_back(x);
        auto ideal = ttspec::ideal_from_subset(p, s);
        std::vector<int> support;
        for (int x = 0; x < n; ++x)
          if (ttspec::ideal_membership(
                  dcat::stalk_complex(simple_at(p, k, x), 0), ideal))
            support.push_back(x);
        if (support != s) return false;
        ++subsets;
      }
    }
    d = std::to_string(subsets) + " subsets over " +
        std::to_string(posets.size()) + " posets";
    return true;
  });

  criterion(4, "Kunneth and nilpotence batteries", [](std::string& d) {
    Field k = Field::fp(2);
    int pairs = 0;
    for (const auto& p : poset_fixtures()) {
      gen::Rng rng(909090 + p->n_objects());
      for (int t = 0; t < 100; ++t) {
        auto a = gen::random_complex(p, k, rng);
        auto b = gen::random_complex(p, k, rng);
        if (!dcat::kunneth_check(a, b)) return false;
        ++pairs;
      }
    }
    int nonacyclic = 0;
    auto fixtures = poset_fixtures();
    gen::Rng rng(777);
    while (nonacyclic < 100) {
      const auto& p = fixtures[nonacyclic % fixtures.size()];
      auto c = gen::random_complex(p, k, rng);
      if (dcat::is_zero_object(c)) continue;
      ++nonacyclic;
      if (dcat::is_zero_object(dcat::tensor_power(c, 2))) return false;
      if (dcat::is_zero_object(dcat::tensor_power(c, 3))) return false;
    }
    d = std::to_string(pairs) + " Kunneth pairs, 100 nonacyclic powers";
    return true;
  });

  criterion(5, "spectrum decomposition on transporters", [](std::string& d) {
    Field k = Field::fp(2);
    auto fixtures = gen::all_action_fixtures();
    if (fixtures.size() < 5) return false;
    for (const auto& fx : fixtures) {
      auto t = groupact::build_transporter(fx.gposet);
      auto rep = groupact::orbits_isotropy(t);
      auto sd = ttspec::spc_ei(t.cat, k);
      if (sd.components.size() != rep.orbits.size()) return false;
      for (size_t i = 0; i < rep.orbits.size(); ++i) {
        if (!(sd.components[i].aut == rep.isotropy_info[i])) return false;
        bool exact = sd.components[i].kind == ttspec::ComponentKind::ExactPoint;
        if (exact != (rep.isotropy_info[i].order == 1)) return false;
      }
    }
    d = std::to_string(fixtures.size()) +
        " fixtures: components = orbits, labels = isotropy";
    return true;
  });

  criterion(6, "Gorenstein: skew iso + injective dims", [](std::string& d) {
    for (const auto& fx : gen::all_action_fixtures()) {
      auto t = groupact::build_transporter(fx.gposet);
      if (!gorcm::skew_iso_check(t, Field::fp(2))) return false;
      if (!gorcm::skew_iso_check(t, Field::fp(3))) return false;
    }
    auto t = groupact::build_transporter(
        gen::action_fixture("z2-trivial-chain2").gposet);
    auto rep = gorcm::gorenstein_check(t.cat, Field::fp(2));
    if (!rep.gorenstein) return false;
    if (!(rep.left.finite && rep.left.value <= 3)) return false;
    if (!(rep.right.finite && rep.right.value <= 3)) return false;
    d = "all skew checks pass; k(Z/2∝2-chain): injdim " +
        std::to_string(rep.left.value) + "/" + std::to_string(rep.right.value);
    return true;
  });

  criterion(7, "projdim criterion vs resolution oracle", [](std::string& d) {
    gen::Rng rng(13579);
    int agree = 0, total = 0;
    for (const auto& name :
         {"z2-trivial-chain2", "z2-point", "z2-vee-swap", "z2-swap2",
          "z3-rot3", "s3-natural3"}) {
      auto t = groupact::build_transporter(gen::action_fixture(name).gposet);
      for (int trial = 0; trial < 9; ++trial) {
        auto m = gen::random_module(t.cat, Field::fp(2), rng, 2);
        ++total;
        bool main = gorcm::finite_projdim(t, m).finite;
        bool oracle =
            gorcm::finite_projdim_oracle(m, t.cat->n_objects() + 2);
        if (main == oracle) ++agree;
      }
    }
    d = std::to_string(agree) + "/" + std::to_string(total) + " agree";
    return total >= 50 && agree == total;
  });

  criterion(8, "CM spectrum empties = coprime stabilizers", [](std::string& d) {
    for (const auto& fx : gen::all_action_fixtures()) {
      auto t = groupact::build_transporter(fx.gposet);
      for (Field k : {Field::fp(2), Field::fp(3)}) {
        for (const auto& comp : gorcm::cm_spectrum(t, k).components) {
          bool coprime = comp.stabilizer.order % k.characteristic() != 0;
          if ((comp.kind == gorcm::CMKind::Empty) != coprime) return false;
        }
      }
    }
    // trivial stabilizers everywhere: CM spectrum entirely empty
    std::vector<std::vector<int>> no_gens;
    for (auto p : {gen::chain_poset(3), gen::crown_poset()}) {
      groupact::GPoset gp(fincat::share(std::move(p)),
                          groupact::PermGroup::trivial(1), no_gens);
      auto t = groupact::build_transporter(gp);
      for (const auto& comp :
           gorcm::cm_spectrum(t, Field::fp(2)).components)
        if (comp.kind != gorcm::CMKind::Empty) return false;
    }
    d = "Empty iff char does not divide |G_x|; trivial groups collapse";
    return true;
  });

  criterion(9, "two-engine cohomology to degree 6", [](std::string& d) {
    std::vector<fincat::FiniteCategory> posets = {
        gen::chain_poset(3), gen::crown_poset(), gen::discrete_poset(2),
        gen::random_poset(4, 31415), gen::random_poset(5, 27182),
        gen::random_poset(5, 16180)};
    for (Field k : {Field::fp(2), Field::fp(3)}) {
      for (const auto& p : posets) {
        auto simp = cohom::simplicial_cohomology(p, k, 6);
        auto ext = cohom::ext_ring(fincat::share(p), k, 6);
        if (simp.dims != ext.dims) return false;
        if (!cohom::graded_commutative(ext)) return false;
      }
    }
    auto z2 = fincat::share(
        groupact::group_as_category(groupact::PermGroup::cyclic(2)));
    auto rz = cohom::ext_ring(z2, Field::fp(2), 6);
    if (rz.dims != std::vector<int>{1, 1, 1, 1, 1, 1, 1}) return false;
    if (!rz.minimal_certified) return false;
    d = "6 posets x {F2,F3} agree; kZ/2 at p=2: (1,1,1,1,1,1,1) certified";
    return true;
  });

  criterion(10, "presheaf sections: stalks and global", [](std::string& d) {
    Field k = Field::fp(2);
    for (const auto& p : poset_fixtures()) {
      for (int x = 0; x < p->n_objects(); ++x) {
        std::vector<int> removed;
        for (int y = 0; y < p->n_objects(); ++y)
          if (y != x) removed.push_back(y);
        auto stalk = ttspec::presheaf_section(*p, removed, k, 3);
        if (stalk.dims[0] != 1) return false;
        for (size_t i = 1; i < stalk.dims.size(); ++i)
          if (stalk.dims[i] != 0) return false;
      }
    }
    auto chain2 = gen::chain_poset(2);
    auto disc2 = gen::discrete_poset(2);
    if (ttspec::spc_poset(chain2).size() != ttspec::spc_poset(disc2).size())
      return false;
    int h0_chain = ttspec::presheaf_section(chain2, {}, k, 2).dims[0];
    int h0_disc = ttspec::presheaf_section(disc2, {}, k, 2).dims[0];
    if (h0_chain != 1 || h0_disc != 2) return false;
    d = "all stalks are k in degree 0; globals distinguish 1 vs 2";
    return true;
  });

  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "OK" : "FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
