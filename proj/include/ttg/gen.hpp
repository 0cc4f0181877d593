#ifndef TTG_GEN_HPP
#define TTG_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "ttg/dcat.hpp"
#include "ttg/groupact.hpp"

namespace ttg::gen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

/* ---- fixture categories ---- */

fincat::FiniteCategory chain_poset(int n);
fincat::FiniteCategory discrete_poset(int n);
fincat::FiniteCategory crown_poset();  // w,x < y,z
// random DAG order on n named objects; edges i<j placed with the given
// percentage density, transitive closure taken
fincat::FiniteCategory random_poset(int n, std::uint64_t seed,
                                    int density_pct = 35);

/* ---- named transporter fixtures ---- */

struct ActionFixture {
  std::string name;
  groupact::GPoset gposet;
};

std::vector<std::string> action_fixture_names();
ActionFixture action_fixture(const std::string& name);
std::vector<ActionFixture> all_action_fixtures();

/* ---- seeded random algebra objects ---- */

// cokernel or kernel of a random map between random sums of representables
catmod::FunctorModule random_module(fincat::CatPtr c, Field k, Rng& rng,
                                    int size = 2);
catmod::ModuleMap random_hom(const catmod::FunctorModule& m,
                             const catmod::FunctorModule& n, Rng& rng);
// sums of shifted stalks and two-term complexes, occasionally a cone
dcat::BoundedComplex random_complex(fincat::CatPtr c, Field k, Rng& rng,
                                    int pieces = 2);
dcat::ChainMap random_chain_map(const dcat::BoundedComplex& a,
                                const dcat::BoundedComplex& b, Rng& rng);
// member of the tensor ideal of complexes supported in the given objects:
// sums of (random complex ⊗ S_x[shift]) over x in the subset
dcat::BoundedComplex random_ideal_member(fincat::CatPtr c, Field k, Rng& rng,
                                         const std::vector<int>& objects);

Scalar random_scalar(const Field& k, Rng& rng);

}  // namespace ttg::gen

#endif
