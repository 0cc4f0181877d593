#ifndef TTG_CATMOD_HPP
#define TTG_CATMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttg/fincat.hpp"
#include "ttg/matrix.hpp"

namespace ttg::catmod {

using fincat::CatPtr;
using fincat::FiniteCategory;

/*
 * A finitely generated module over a category algebra, stored as a functor:
 * one exact vector space dimension per object, one matrix per morphism
 * (shape dim(tgt) x dim(src), acting on column vectors). validate() checks
 * identity maps and functoriality on every composable pair.
 */
struct FunctorModule {
  CatPtr cat;
  Field field{Field::rationals()};
  std::vector<int> dims;
  std::vector<Matrix> maps;

  FunctorModule() = default;
  FunctorModule(CatPtr c, Field f, std::vector<int> d);  // zero maps

  int dim(int x) const { return dims[x]; }
  int total_dim() const;
  std::vector<int> offsets() const;  // prefix sums of dims
  const Matrix& map(int f) const { return maps[f]; }

  void validate() const;
  bool operator==(const FunctorModule& o) const;
};

// Zero-dimensional everywhere.
FunctorModule zero_module(CatPtr c, Field k);
// The constant functor k with identity maps: the tensor identity.
FunctorModule trivial_module(CatPtr c, Field k);
// The representable projective kC·1_x, with basis Hom(x,-).
FunctorModule representable(CatPtr c, Field k, int x);
// Basis morphism list of representable(x) at object y is hom(x,y) in order.

// The left regular module ⊕_x kC·1_x; basis at y is all morphisms into y.
FunctorModule regular_module(CatPtr c, Field k);

/*
 * A map of functor modules: one matrix per object, natural in the morphism
 * direction. validate() checks every naturality square.
 */
struct ModuleMap {
  FunctorModule src;
  FunctorModule tgt;
  std::vector<Matrix> comp;

  void validate() const;
  bool is_zero() const;
};

ModuleMap zero_map(FunctorModule src, FunctorModule tgt);
ModuleMap identity_map(const FunctorModule& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g ∘ f
ModuleMap add(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const ModuleMap& a, const Scalar& c);

/*
 * Structure constants of the category algebra kC: the basis is Mor C and a
 * product of basis elements is either a basis element or zero. The unit is
 * the sum of the identities.
 */
struct AlgebraTable {
  CatPtr cat;
  Field field{Field::rationals()};
  int dim = 0;
  std::vector<std::vector<int>> prod;  // [i][j] -> basis index or -1 (zero)
  std::vector<int> unit;               // basis indices summing to 1

  void check_associative() const;
};

AlgebraTable algebra(CatPtr c, Field k);

// Pointwise tensor product over the diagonal: dims multiply, maps are
// Kronecker products. The tensor identity is trivial_module.
FunctorModule tensor(const FunctorModule& m, const FunctorModule& n);
ModuleMap tensor_map(const ModuleMap& a, const ModuleMap& b);

struct SumDecomposition {
  FunctorModule sum;
  std::vector<ModuleMap> inject;
  std::vector<ModuleMap> project;
};
SumDecomposition direct_sum(const std::vector<FunctorModule>& parts);

// Brutal truncation to a full subcategory, and extension by zero from a
// convex one (convexity is what makes extension by zero functorial).
FunctorModule restrict_to(const FunctorModule& m, const fincat::Subcategory& e);
FunctorModule include_from(const FunctorModule& m, const fincat::Subcategory& e,
                           CatPtr parent);

// Truncation to one isomorphism class, as a module over the same category:
// M_x = M ⊗ S_{x,k}.
FunctorModule filtration_component(const FunctorModule& m,
                                   const std::vector<int>& class_objects);

struct FiltrationStep {
  int class_id;
  FunctorModule sub;        // M_x for the maximal surviving class
  ModuleMap inclusion;      // M_x -> M
  FunctorModule quotient;   // M / M_x
  ModuleMap projection;     // M -> M/M_x
};
// Peels maximal classes until nothing is left; concatenation of the steps
// is the class filtration of m.
std::vector<FiltrationStep> filtration(const FunctorModule& m,
                                       const fincat::IsoClassification& cl);

/*
 * Submodules are stored as one column-basis per object, closed under the
 * action. kernel/image/cokernel of a ModuleMap and spans under the algebra
 * action all produce these.
 */
struct Submodule {
  std::vector<Matrix> basis;  // basis[x]: dim m(x) x rank
};

Submodule kernel_submodule(const ModuleMap& f);
Submodule image_submodule(const ModuleMap& f);
// Smallest action-closed subspace containing the given per-object columns.
Submodule spin(const FunctorModule& m, const std::vector<Matrix>& seeds);

struct SubQuotient {
  FunctorModule module;
  ModuleMap map;  // inclusion (for sub) or projection (for quotient)
  // For quotients: a per-object right inverse of the projection (the chosen
  // complement basis). Not natural in general, so raw matrices, not a map.
  std::vector<Matrix> section;
};
SubQuotient submodule_to_module(const FunctorModule& m, const Submodule& s);
SubQuotient quotient_by(const FunctorModule& m, const Submodule& s);

inline SubQuotient kernel_of(const ModuleMap& f) {
  return submodule_to_module(f.src, kernel_submodule(f));
}
inline SubQuotient image_of(const ModuleMap& f) {
  return submodule_to_module(f.tgt, image_submodule(f));
}
inline SubQuotient cokernel_of(const ModuleMap& f) {
  return quotient_by(f.tgt, image_submodule(f));
}

// Basis of the space of module maps m -> n (natural transformations),
// computed by one exact kernel computation.
std::vector<ModuleMap> hom_space(const FunctorModule& m,
                                 const FunctorModule& n);

// Module maps s : X -> A with pi ∘ s = f, if any (X projective and pi onto
// an image containing im f always admits one).
std::optional<ModuleMap> lift_through(const ModuleMap& pi, const ModuleMap& f);

// Module maps s with pi ∘ s = id, if any.
std::optional<ModuleMap> section_of(const ModuleMap& pi);

/*
 * Isomorphism testing: equal dimension vectors plus an invertible natural
 * transformation. Over F_p a few random combinations are tried first and an
 * exhaustive sweep of the hom space settles failures; over Q a full grid
 * evaluation of the determinant polynomial settles it. Search spaces above
 * the budget raise UnsupportedScale instead of guessing.
 */
std::optional<ModuleMap> find_isomorphism(const FunctorModule& m,
                                          const FunctorModule& n,
                                          std::uint64_t seed = 1);
bool modules_isomorphic(const FunctorModule& m, const FunctorModule& n,
                        std::uint64_t seed = 1);

// The internal hom Hom(M,N)(x) = Hom_kC((kC·1_x) ⊗ M, N) with the evident
// precomposition action. For posets this is Hom(M_{>=x}, N_{>=x}).
FunctorModule internal_hom(const FunctorModule& m, const FunctorModule& n);

/*
 * Radical machinery. The radical of kC is spanned by the morphisms between
 * distinct classes together with the transported radicals of the class
 * automorphism group algebras; group algebra radicals are computed with the
 * Friedl–Rónyai trace method over F_p (they vanish in characteristic zero
 * and when the characteristic does not divide the group order).
 */
struct RadicalElement {
  int src = 0, tgt = 0;
  std::vector<std::pair<int, Scalar>> terms;  // (morphism id, coefficient)
};

// Multiplication table of a finite group in some labelling 0..n-1 (0 = e).
struct GroupTable {
  int n = 1;
  std::vector<std::vector<int>> mult;
  int inverse(int a) const;
  int order_of(int a) const;
  bool is_abelian() const;
};
GroupTable group_table_from_aut(const FiniteCategory& c,
                                const std::vector<int>& aut);

// Basis of J(kG) as coefficient vectors over the group basis.
std::vector<std::vector<Scalar>> group_algebra_radical(const GroupTable& g,
                                                       Field k);

std::vector<RadicalElement> algebra_radical(
    const FiniteCategory& c, Field k, const fincat::IsoClassification& cl);

// rad M = J(kC)·M.
Submodule radical_submodule(const FunctorModule& m,
                            const std::vector<RadicalElement>& rad);

// Lift of a generating set of M/rad M: complement vectors of (rad M) at the
// class representatives only — the transport isomorphisms carry them around
// the class, and Nakayama finishes the argument.
struct Generator {
  int object;
  Matrix vec;  // dim m(object) x 1
};
std::vector<Generator> minimal_generators(
    const FunctorModule& m, const std::vector<RadicalElement>& rad,
    const fincat::IsoClassification& cl);

// Projective presentation P = ⊕ kC·1_{x_i} ->> M built on a minimal
// generating set. For local class group algebras (trivial groups, p-groups
// in characteristic p) this is a projective cover.
struct Presentation {
  FunctorModule projective;
  ModuleMap onto;                 // projective ->> m
  std::vector<Generator> gens;
};
Presentation projective_presentation(const FunctorModule& m,
                                     const std::vector<RadicalElement>& rad,
                                     const fincat::IsoClassification& cl);

// m is projective iff the presentation surjection splits; exact test.
bool is_projective(const FunctorModule& m);

// One-dimensional characters G -> k^* (always includes the trivial one).
std::vector<std::vector<Scalar>> group_characters(const GroupTable& g, Field k);

/*
 * Simple modules S_{x,V}: concentrated on one class, V a simple module of
 * the class automorphism group carried around the class along fixed
 * transport isomorphisms.
 */
struct GroupRep {
  std::vector<Matrix> images;  // per Aut element, in aut-list order
  std::string label;
};

struct SimpleModule {
  int class_id = 0;
  int vdim = 1;
  std::string label;
  FunctorModule mod;
};

struct SimpleModuleList {
  std::vector<SimpleModule> simples;
  bool complete = false;
  std::vector<std::string> warnings;
};

// Build S_{x,V} from an explicit representation of the Aut group of the
// class representative.
FunctorModule simple_from_rep(CatPtr c, Field k,
                              const fincat::IsoClassification& cl,
                              int class_id, const std::vector<Matrix>& images);

SimpleModuleList simple_modules(
    CatPtr c, Field k,
    const std::vector<std::pair<int, std::vector<GroupRep>>>& supplied = {});

enum class SimplicityCertificate { Proven, BasisChecksOnly };

// Throws NotSimple with a witness when a proper submodule exists; throws
// UnsupportedScale when full certification would exceed the sweep budget
// and `strict` is set.
SimplicityCertificate verify_simple(const FunctorModule& m,
                                    bool strict = true);

// Dual module over the opposite category (transposed maps).
FunctorModule dual_module(const FunctorModule& m, CatPtr op);
ModuleMap dual_map(const ModuleMap& f, CatPtr op);

// Restriction along a functor: (F^* m)(x) = m(F x).
FunctorModule pullback(const fincat::Functor& f, const FunctorModule& m);

}  // namespace ttg::catmod

#endif
