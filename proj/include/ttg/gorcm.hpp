#ifndef TTG_GORCM_HPP
#define TTG_GORCM_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttg/ttspec.hpp"

namespace ttg::gorcm {

using catmod::FunctorModule;
using fincat::CatPtr;
using groupact::TransporterCategory;

/*
 * The skew group algebra kP[G]: basis (alpha, g) over Mor P x G with
 * product (alpha, g)(beta, h) = (alpha ∘ g·beta, gh) when composable.
 * The transporter category algebra is isomorphic to it by
 * (g, gx<=y) -> ((gx<=y), g); skew_iso_check verifies multiplicativity of
 * that bijection on every pair of basis elements.
 */
struct SkewAlgebra {
  int dim = 0;
  std::vector<std::pair<int, int>> basis;       // (poset morphism, element)
  std::vector<std::vector<int>> prod;           // basis index or -1
};

SkewAlgebra skew_algebra(const TransporterCategory& t);
bool skew_iso_check(const TransporterCategory& t, Field k);

// Length of a minimal projective resolution, decided by exact projectivity
// tests on successive syzygies (Schanuel makes the answer independent of
// the presentations used). nullopt when the cutoff is exceeded.
std::optional<int> projective_dimension(const FunctorModule& m, int cutoff);

struct InjDimResult {
  bool finite = false;
  int value = -1;  // meaningful when finite
  int bound = 0;
};

// Injective dimension of the left regular module of kC, computed as the
// projective dimension of its dual over the opposite category (the
// coresolution by injective hulls, read through duality).
InjDimResult injective_dimension_regular(CatPtr c, Field k, int bound);

struct GorensteinReport {
  InjDimResult left;
  InjDimResult right;
  bool gorenstein = false;
};

// bound < 0 selects the default |Ob C| + 2.
GorensteinReport gorenstein_check(CatPtr c, Field k, int bound = -1);

/*
 * Finite projective dimension over a transporter category algebra, decided
 * orbit by orbit: the class component of the module has finite projective
 * dimension exactly when its value at a representative is projective over
 * the stabilizer group algebra.
 */
struct OrbitVerdict {
  int orbit = 0;
  int representative = 0;
  groupact::GroupInfo stabilizer;
  bool value_projective = false;
};

struct ProjdimReport {
  bool finite = false;
  std::vector<OrbitVerdict> orbits;
  std::vector<int> failing_orbits;
};

ProjdimReport finite_projdim(const TransporterCategory& t,
                             const FunctorModule& m);

// The direct oracle: truncate a projective resolution at the cutoff and
// test syzygy projectivity. Used to cross-check finite_projdim.
bool finite_projdim_oracle(const FunctorModule& m, int cutoff);

/*
 * The stable category of maximal Cohen-Macaulay modules sits in the
 * localization D^b(proj) -> K(G∝P) -> CM; its spectrum keeps one component
 * per orbit, empty exactly when the stabilizer group algebra is semisimple.
 */
enum class CMKind { Empty, SymbolicProjH };

inline const char* cm_kind_name(CMKind k) {
  return k == CMKind::Empty ? "Empty" : "SymbolicProjH";
}

struct CMComponent {
  int orbit = 0;
  std::string orbit_name;
  groupact::GroupInfo stabilizer;
  CMKind kind = CMKind::Empty;
  std::string label;
};

struct CMSpectrumDescriptor {
  ttspec::SpectrumDescriptor ambient;
  std::vector<CMComponent> components;
  std::string localization;  // the quotient sequence, as documentation
};

CMSpectrumDescriptor cm_spectrum(const TransporterCategory& t, Field k);

}  // namespace ttg::gorcm

#endif
