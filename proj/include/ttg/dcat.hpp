#ifndef TTG_DCAT_HPP
#define TTG_DCAT_HPP

#include <vector>

#include "ttg/catmod.hpp"

namespace ttg::dcat {

using catmod::FunctorModule;
using catmod::ModuleMap;
using fincat::CatPtr;

// Complexes live in a bounded degree window; tensor powers stay within it.
constexpr int kMinDegree = -16;
constexpr int kMaxDegree = 16;

/*
 * A bounded cochain complex of functor modules with contiguous terms
 * lo..lo+n-1 and differentials d^i : term i -> term i+1 satisfying d∘d = 0
 * (checked by validate, together with naturality of every differential).
 * The zero complex is represented by an empty term list.
 */
struct BoundedComplex {
  CatPtr cat;
  Field field{Field::rationals()};
  int lo = 0;
  std::vector<FunctorModule> terms;
  std::vector<ModuleMap> diffs;  // size = max(terms.size()-1, 0)

  bool empty() const { return terms.empty(); }
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool has_term(int d) const { return !empty() && d >= lo && d <= hi(); }
  const FunctorModule& term(int d) const { return terms[d - lo]; }
  int total_dim() const;

  void validate() const;
  // strip zero-dimensional outer terms (the observable object is unchanged)
  void normalize();
};

BoundedComplex zero_complex(CatPtr c, Field k);
BoundedComplex stalk_complex(FunctorModule m, int degree = 0);
// two-term complex src -> tgt placed in degrees (degree, degree+1)
BoundedComplex two_term_complex(const ModuleMap& d, int degree);

// c[s]: term^n = c^{n+s}, differentials scaled by (-1)^s.
BoundedComplex shift(const BoundedComplex& c, int s);

BoundedComplex direct_sum_complex(const std::vector<BoundedComplex>& parts);

struct GradedModule {
  int lo = 0;
  std::vector<FunctorModule> pieces;
  bool has(int d) const {
    return d >= lo && d < lo + static_cast<int>(pieces.size());
  }
  const FunctorModule& at(int d) const { return pieces[d - lo]; }
  int total_dim() const;
  void normalize(CatPtr c, Field k);
};

// H^i = ker d^i / im d^{i-1}, objectwise with the induced action.
GradedModule cohomology(const BoundedComplex& c);

// Cohomology together with chosen cocycle representatives: lift[d][x] maps
// class coordinates to a representing cocycle in term(d)(x), and reduce
// sends a cocycle back to its class coordinates.
struct CohomologyData {
  GradedModule h;
  std::vector<std::vector<Matrix>> lift;      // per degree, per object
  std::vector<std::vector<Matrix>> ker_incl;  // kernel basis in the term
  std::vector<std::vector<Matrix>> cls_proj;  // kernel coords -> class coords

  Matrix reduce(int degree, int object, const Matrix& cocycle) const;
};
CohomologyData cohomology_with_lifts(const BoundedComplex& c);

// Total complex of the pointwise tensor, Koszul signs on the second factor.
BoundedComplex tensor_complex(const BoundedComplex& a,
                              const BoundedComplex& b);
BoundedComplex tensor_power(const BoundedComplex& a, int n);

// H*(a ⊗ b) ≅ H*(a) ⊗ H*(b), degreewise, isomorphisms exhibited.
bool kunneth_check(const BoundedComplex& a, const BoundedComplex& b,
                   std::uint64_t seed = 1);

/*
 * A degreewise module map commuting with the differentials. Components are
 * stored for the degrees where both endpoints have terms; everything else
 * is zero.
 */
struct ChainMap {
  BoundedComplex src;
  BoundedComplex tgt;
  int lo = 0;                     // degree of comps[0]
  std::vector<ModuleMap> comps;

  ModuleMap component(int d) const;  // zero map outside the stored window
  void validate() const;             // NotChainMap on failure
};

ChainMap zero_chain_map(BoundedComplex src, BoundedComplex tgt);

// Basis of the space of chain maps a -> b (naturality in every degree plus
// commutation with the differentials), by one exact kernel computation.
std::vector<ChainMap> chain_map_space(const BoundedComplex& a,
                                      const BoundedComplex& b);

// cone(f)^n = src^{n+1} ⊕ tgt^n with d(a,b) = (-d a, f a + d b).
BoundedComplex cone(const ChainMap& f);

bool is_zero_object(const BoundedComplex& c);
// (c^{⊗n} acyclic) implies (c acyclic); returns the implication's truth.
bool nilpotence_check(const BoundedComplex& c, int n);

// Objects of a poset where cohomology survives.
std::vector<int> support_poset(const BoundedComplex& c);
// Iso-classes of an EI category where the restriction stays non-acyclic.
std::vector<int> coarse_support(const BoundedComplex& c,
                                const fincat::IsoClassification& cl);

}  // namespace ttg::dcat

#endif
