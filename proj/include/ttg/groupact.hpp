#ifndef TTG_GROUPACT_HPP
#define TTG_GROUPACT_HPP

#include <string>
#include <vector>

#include "ttg/fincat.hpp"

namespace ttg::groupact {

using Perm = std::vector<int>;  // images, a bijection of 0..deg-1

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // (a∘b)(i) = a[b[i]]
Perm perm_inverse(const Perm& a);

/*
 * A finite permutation group given by generators, with the element list
 * enumerated breadth-first from the identity (so element 0 is e and the
 * enumeration order is deterministic). Enumeration is capped; all desk-scale
 * inputs stay far below the cap.
 */
class PermGroup {
 public:
  static constexpr int kDefaultCap = 2000;

  PermGroup() { *this = trivial(1); }
  PermGroup(int degree, std::vector<Perm> generators, int cap = kDefaultCap);

  static PermGroup trivial(int degree);
  static PermGroup cyclic(int n);            // Z/n on n points
  static PermGroup symmetric(int n);         // S_n on n points

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return gens_; }

  int index_of(const Perm& p) const;  // -1 when absent
  int mult(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int element_order(int a) const;
  bool is_abelian() const;
  int exponent() const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
};

// Order, exponent and abelianness of a subgroup given by element indices.
// This is the "group label" used for spectrum components; full isomorphism
// testing is out of scope, these invariants suffice at desk scale.
struct GroupInfo {
  int order = 1;
  int exponent = 1;
  bool abelian = true;
  std::string name;  // "1", "C2", ... for cyclic, descriptive otherwise

  bool operator==(const GroupInfo& o) const {
    return order == o.order && exponent == o.exponent && abelian == o.abelian;
  }
};

GroupInfo make_group_info(int order, int exponent, bool abelian);
GroupInfo subgroup_info(const PermGroup& g, const std::vector<int>& elems);
GroupInfo whole_group_info(const PermGroup& g);

/*
 * A G-poset: a poset-shaped category plus an order-preserving action,
 * stored per group element. Checked exhaustively on construction.
 */
struct GPoset {
  fincat::CatPtr poset;
  std::vector<std::vector<char>> leq;      // object order
  PermGroup group;
  std::vector<std::vector<int>> action;    // [element][object] -> object

  GPoset() = default;
  // actions given per generator, in generator order
  GPoset(fincat::CatPtr poset_cat, PermGroup g,
         const std::vector<std::vector<int>>& generator_actions);

  int act(int g, int x) const { return action[g][x]; }
};

/*
 * The transporter category of a G-poset: objects those of P, and a morphism
 * x -> y for every g with gx <= y, composing by (h,·)∘(g,·) = (hg,·).
 * Morphism ids enumerate (src, tgt, g) lexicographically.
 */
struct TransporterCategory {
  GPoset base;
  fincat::CatPtr cat;
  std::vector<int> mor_elem;                 // morphism -> group element
  std::vector<std::vector<int>> orbits;      // sorted, by min member
  std::vector<int> orbit_of;                 // object -> orbit index
  std::vector<std::vector<int>> isotropy;    // object -> stabilizer elements

  int orbit_rep(int o) const { return orbits[o].front(); }
};

TransporterCategory build_transporter(const GPoset& gp);

// A group as a one-object category; morphism i is group element i.
fincat::FiniteCategory group_as_category(const PermGroup& g);

// A subgroup (closed element subset) as a one-object category; morphism i
// corresponds to elems[i], with elems[0] required to be the identity.
fincat::FiniteCategory subgroup_as_category(const PermGroup& g,
                                            const std::vector<int>& elems);

// iota : P -> G∝P sends x<=y to (e, x<=y); pi : G∝P -> G sends (g,·) to g.
// Both functors are returned validated, and pi∘iota is constant at e.
std::pair<fincat::Functor, fincat::Functor> iota_pi(
    const TransporterCategory& t);

// Orbits plus per-orbit isotropy of the representative; also verifies that
// stabilizers along an orbit are conjugate by exhibiting the conjugator.
struct OrbitReport {
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> isotropy_of_rep;
  std::vector<GroupInfo> isotropy_info;
};

OrbitReport orbits_isotropy(const TransporterCategory& t);

Perm parse_cycles(const std::string& s, int degree);
std::string format_cycles(const Perm& p);

// Action files: a [group] section (degree and named generators in cycle
// notation) and an [action] section mapping each generator to an object
// permutation of the given poset.
GPoset parse_action(const std::string& text, fincat::CatPtr poset);
GPoset load_action(const std::string& path, fincat::CatPtr poset);
std::string format_action(const GPoset& gp);

}  // namespace ttg::groupact

#endif
