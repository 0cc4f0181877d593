#ifndef TTG_TTSPEC_HPP
#define TTG_TTSPEC_HPP

#include <string>
#include <vector>

#include "ttg/cohom.hpp"
#include "ttg/dcat.hpp"
#include "ttg/groupact.hpp"

namespace ttg::ttspec {

using fincat::CatPtr;

/*
 * A prime of the derived category of a poset: P^x = ker(Res at x), one per
 * object. A complex lies in P^x exactly when x is outside its support.
 */
struct PrimeDescriptor {
  int object = 0;
  std::string label;  // "P^x"
};

std::vector<PrimeDescriptor> spc_poset(const fincat::FiniteCategory& p);

bool prime_membership(const dcat::BoundedComplex& c,
                      const PrimeDescriptor& prime);

/*
 * Tensor ideals of the derived category of a poset are in bijection with
 * object subsets: the ideal of complexes supported inside the subset.
 * Membership is one cohomology computation.
 */
struct IdealDescriptor {
  CatPtr poset;
  std::vector<int> objset;  // sorted
};

IdealDescriptor ideal_from_subset(CatPtr p, std::vector<int> objects);
bool ideal_membership(const dcat::BoundedComplex& c,
                      const IdealDescriptor& ideal);

// One row per subset: the four-way correspondence between subsets of Ob P,
// subsets of Spc, subposets, and tensor ideals.
struct IdealTableRow {
  std::vector<int> subset;          // S, as sorted object ids
  std::string subset_names;         // "{a,b}"
  std::string spc_subset;           // "{P^a,P^b}" = Z(S)
  std::string ideal_label;          // "<S_a,S_b>"
  std::vector<int> cosupport;       // {x : S_x ⊗ I = 0} = complement of S
  bool is_prime = false;            // exactly one object missing
  bool is_zero = false;             // S empty
  bool is_improper = false;         // S = Ob P
};

std::vector<IdealTableRow> classify_ideals(CatPtr p);

// The preimage of a tensor ideal of a convex subcategory under restriction:
// generated by the included ideal together with the simples off E. For
// posets both sides are subset ideals, so membership stays one support
// computation.
struct PreimageDescriptor {
  IdealDescriptor preimage;              // over the parent poset
  std::vector<int> included_subset;      // Inc_E(ideal) generators
  std::vector<int> off_subcategory;      // objects x outside E (their S_x)
  std::string label;
};

PreimageDescriptor prime_preimage(CatPtr parent, const fincat::Subcategory& e,
                                  const IdealDescriptor& ideal_in_e);

/*
 * The spectrum of the derived category of a finite EI category: one
 * component per isomorphism class, an exact point for trivial automorphism
 * groups and a symbolic Spec^h H(Aut) component otherwise.
 */
enum class ComponentKind { ExactPoint, SymbolicSpecH, SymbolicProjH };

inline const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::ExactPoint: return "ExactPoint";
    case ComponentKind::SymbolicSpecH: return "SymbolicSpecH";
    case ComponentKind::SymbolicProjH: return "SymbolicProjH";
  }
  return "?";
}

struct SpectrumComponent {
  int class_id = 0;
  std::string class_name;          // representative object
  groupact::GroupInfo aut;
  ComponentKind kind = ComponentKind::ExactPoint;
  std::string label;
};

struct SpectrumDescriptor {
  CatPtr cat;
  std::int64_t characteristic = 0;
  std::vector<SpectrumComponent> components;
};

SpectrumDescriptor spc_ei(CatPtr c, Field k);

// Sections of the structure presheaf over U = complement of {P^x : x in Q}:
// the cohomology ring of the subposet on the remaining objects.
cohom::GradedRingDescription presheaf_section(
    const fincat::FiniteCategory& p, const std::vector<int>& removed, Field k,
    int cutoff);

/*
 * Independent census of the subset<->ideal classification on a tiny poset:
 * for every subset, sampled closure checks (shifts, cones, summands,
 * tensoring) plus distinctness witnesses and radicality samples. Violations
 * are collected, not asserted.
 */
struct CensusParams {
  std::uint64_t seed = 1;
  int cones_per_ideal = 200;
  int tensors_per_ideal = 50;
  int shifts_per_ideal = 50;
  int summand_pairs = 50;
  int radical_samples = 50;
  // worker threads over subsets; results are merged in subset order, so the
  // report is identical for any thread count
  int threads = 1;
};

struct CensusSubsetReport {
  std::vector<int> subset;
  int cones_checked = 0;
  int tensors_checked = 0;
  int shifts_checked = 0;
  int summand_pairs_checked = 0;
  int radical_checked = 0;
};

struct CensusReport {
  int total_ideals = 0;
  bool distinct = false;
  std::vector<CensusSubsetReport> subsets;
  // witness object for each subset pair (by index in the subset table)
  std::vector<std::tuple<int, int, int>> witnesses;
  std::vector<std::string> violations;

  bool passed() const { return distinct && violations.empty(); }
};

CensusReport oracle_ideal_census(CatPtr p, Field k,
                                 const CensusParams& params = {});

}  // namespace ttg::ttspec

#endif
