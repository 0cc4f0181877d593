#ifndef TTG_COHOM_HPP
#define TTG_COHOM_HPP

#include <map>
#include <string>
#include <vector>

#include "ttg/catmod.hpp"

namespace ttg::cohom {

using fincat::CatPtr;
using fincat::FiniteCategory;

/*
 * The order complex of a poset: all chains x_0 < ... < x_d, graded by
 * dimension. Chains carry the canonical vertex order, which is what makes
 * the front/back-face cup product formula legitimate here.
 */
struct OrderComplex {
  std::vector<std::vector<std::vector<int>>> simplices;  // [dim][index]

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  int count(int d) const {
    return d >= 0 && d <= dim() ? static_cast<int>(simplices[d].size()) : 0;
  }
};

OrderComplex order_complex(const FiniteCategory& poset, int max_dim);

/*
 * A graded ring presented by its dimensions per degree up to a cutoff and
 * the multiplication table on the chosen homogeneous bases: product[{p,q}]
 * is a matrix of coordinate vectors, entry [i][j] giving the class of
 * (p-basis i) * (q-basis j) in the degree p+q basis.
 */
struct GradedRingDescription {
  Field field{Field::rationals()};
  int cutoff = 0;
  std::vector<int> dims;  // degrees 0..cutoff
  std::map<std::pair<int, int>, std::vector<std::vector<std::vector<Scalar>>>>
      products;
  bool minimal_certified = false;  // ext engine: differentials in the radical
  std::string engine;
  std::vector<std::string> notes;

  int dim(int d) const {
    return d >= 0 && d <= cutoff ? dims[d] : 0;
  }
};

// ab = (-1)^{|a||b|} ba on all stored products.
bool graded_commutative(const GradedRingDescription& r);

// Simplicial cohomology of the order complex with the front/back cup
// product on ordered simplices.
GradedRingDescription simplicial_cohomology(const FiniteCategory& poset,
                                            Field k, int cutoff);

/*
 * Ext*_{kC}(k,k) up to the cutoff via a projective resolution of the
 * trivial module built on minimal generating sets, with Yoneda products
 * computed by lifting cocycles to chain maps. Dimensions are read off the
 * cohomology of the Hom complex, so they are correct independently of
 * minimality; minimal_certified reports whether every differential lands
 * in the radical (it does whenever the class group algebras are local,
 * e.g. for posets and p-groups in characteristic p).
 */
GradedRingDescription ext_ring(CatPtr c, Field k, int cutoff,
                               int dim_limit = 4096);

// Sections of the structure presheaf over the open set complementary to
// {P^x : x removed}: the cohomology ring of the full subposet.
GradedRingDescription section_ring(const FiniteCategory& poset,
                                   const std::vector<int>& removed, Field k,
                                   int cutoff);

}  // namespace ttg::cohom

#endif
