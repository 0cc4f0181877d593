#ifndef TTG_FINCAT_HPP
#define TTG_FINCAT_HPP

#include <memory>
#include <string>
#include <vector>

#include "ttg/error.hpp"

namespace ttg::fincat {

struct Morphism {
  int src = 0;
  int tgt = 0;
  std::string name;
};

/*
 * A finite category as explicit combinatorial data: dense object ids
 * 0..n_obj-1, dense morphism ids 0..n_mor-1, an identity morphism per object
 * and a total composition table on composable pairs. validate() checks the
 * category axioms exhaustively; every constructor in this project goes
 * through it. Values are immutable once built.
 */
class FiniteCategory {
 public:
  FiniteCategory() = default;
  FiniteCategory(std::vector<std::string> object_names,
                 std::vector<Morphism> morphisms, std::vector<int> identity,
                 std::vector<std::vector<int>> compose);

  int n_objects() const { return static_cast<int>(object_names_.size()); }
  int n_morphisms() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(int x) const { return object_names_[x]; }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  int src(int f) const { return morphisms_[f].src; }
  int tgt(int f) const { return morphisms_[f].tgt; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int f) const { return identity_[morphisms_[f].src] == f && morphisms_[f].src == morphisms_[f].tgt; }

  // f∘g, defined iff src(f) == tgt(g); -1 encodes "not composable".
  int compose_raw(int f, int g) const { return compose_[f][g]; }
  int compose(int f, int g) const {
    int h = compose_[f][g];
    require(h >= 0, errc::invalid_params,
            "compose(" + morphisms_[f].name + ", " + morphisms_[g].name +
                ") undefined");
    return h;
  }

  const std::vector<int>& hom(int x, int y) const {
    return hom_[static_cast<size_t>(x) * n_objects() + y];
  }
  const std::vector<int>& morphisms_from(int x) const { return by_src_[x]; }
  const std::vector<int>& morphisms_into(int y) const { return by_tgt_[y]; }

  // Two-sided inverse, or -1.
  int inverse_of(int f) const;
  bool is_iso(int f) const { return inverse_of(f) >= 0; }

  bool operator==(const FiniteCategory& o) const {
    return object_names_ == o.object_names_ && identity_ == o.identity_ &&
           compose_ == o.compose_ && same_morphism_shape(o);
  }

  int object_id(const std::string& name) const;  // -1 when absent
  int morphism_id(const std::string& name) const;

 private:
  void validate() const;
  void build_indexes();
  bool same_morphism_shape(const FiniteCategory& o) const;

  std::vector<std::string> object_names_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;                // object -> morphism id
  std::vector<std::vector<int>> compose_;    // [f][g] = f∘g or -1
  std::vector<std::vector<int>> hom_;        // flattened (x,y) -> ids, sorted
  std::vector<std::vector<int>> by_src_, by_tgt_;
};

using CatPtr = std::shared_ptr<const FiniteCategory>;

inline CatPtr share(FiniteCategory c) {
  return std::make_shared<const FiniteCategory>(std::move(c));
}

inline bool same_category(const CatPtr& a, const CatPtr& b) {
  return a == b || *a == *b;
}

// Every endomorphism has a two-sided inverse.
bool is_ei(const FiniteCategory& c);

/*
 * Isomorphism classes of an EI category, the induced partial order on
 * classes ([x] <= [y] iff some morphism x -> y exists), one representative
 * per class, and the automorphism group of each representative as a list of
 * morphism ids.
 */
struct IsoClassification {
  std::vector<int> class_of;                // object -> class
  std::vector<std::vector<int>> classes;    // class -> sorted objects
  std::vector<int> representative;          // class -> min object
  std::vector<std::vector<char>> leq;       // [a][b]: class a <= class b
  std::vector<std::vector<int>> aut;        // class -> Aut(rep) morphism ids

  int n_classes() const { return static_cast<int>(classes.size()); }
  bool strictly_less(int a, int b) const { return a != b && leq[a][b]; }
};

IsoClassification classify(const FiniteCategory& c);

// The full subcategory on a sorted object subset, with id translations.
struct Subcategory {
  FiniteCategory cat;
  std::vector<int> obj_to_parent;   // sub object -> parent object
  std::vector<int> mor_to_parent;   // sub morphism -> parent morphism
  std::vector<int> obj_from_parent; // parent object -> sub object or -1
  std::vector<int> mor_from_parent; // parent morphism -> sub morphism or -1
};

Subcategory induced_subcategory(const FiniteCategory& c,
                                const std::vector<int>& objects);

inline FiniteCategory full_subcategory(const FiniteCategory& c,
                                       const std::vector<int>& objects) {
  return induced_subcategory(c, objects).cat;
}

// No two-step path through an outside object connects two inside objects.
bool is_convex(const FiniteCategory& c, const std::vector<int>& objects);

FiniteCategory opposite(const FiniteCategory& c);

// A functor between explicitly given finite categories, stored pointwise.
struct Functor {
  CatPtr src;
  CatPtr tgt;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  void validate() const;
};

}  // namespace ttg::fincat

#endif
