#include "doctest.h"
#include "ttg/fincat.hpp"
#include "ttg/io.hpp"

using namespace ttg;
using namespace ttg::fincat;

namespace {

FiniteCategory chain3() {
  return io::poset_category({"x", "y", "z"}, {{0, 1}, {1, 2}});
}

// one-object category of Z/2
FiniteCategory z2cat() {
  return io::parse_category(
      "ttgeo category v1\n"
      "[objects]\npt\n"
      "[morphisms]\ng: pt -> pt\n"
      "[compose]\nid_pt = g . g\n");
}

}  // namespace

TEST_CASE("3-chain poset has 6 morphisms") {
  FiniteCategory c = chain3();
  CHECK(c.n_objects() == 3);
  CHECK(c.n_morphisms() == 6);  // 3 identities + x<y, x<z, y<z
  CHECK(io::is_poset_shaped(c));
  // composition x<y then y<z gives x<z
  int xy = c.morphism_id("x<y"), yz = c.morphism_id("y<z"),
      xz = c.morphism_id("x<z");
  CHECK(c.compose(yz, xy) == xz);
}

TEST_CASE("category file with poset section parses") {
  auto c = io::parse_category(
      "ttgeo category v1\n# 3-chain, transitive closure implied\n"
      "[objects]\nx\ny\nz\n[poset]\nx < y\ny < z\n");
  CHECK(c.n_morphisms() == 6);
  CHECK(c == chain3());
}

TEST_CASE("one-object Z/2 category is valid and EI") {
  FiniteCategory c = z2cat();
  CHECK(c.n_morphisms() == 2);
  CHECK(is_ei(c));
}

TEST_CASE("missing composition entry is rejected as DanglingMorphism") {
  CHECK_THROWS_WITH_AS(
      io::parse_category("ttgeo category v1\n[objects]\npt\n[morphisms]\n"
                         "g: pt -> pt\n[compose]\n"),
      doctest::Contains("DanglingMorphism"), error);
}

TEST_CASE("non-associative table is rejected") {
  // three generators on one object with a deliberately broken table
  std::string text =
      "ttgeo category v1\n[objects]\npt\n[morphisms]\n"
      "a: pt -> pt\nb: pt -> pt\nc: pt -> pt\n[compose]\n"
      "a = a . a\nc = b . a\nb = c . a\nb = a . b\nc = b . b\na = c . b\n"
      "c = a . c\na = b . c\nb = c . c\n";
  CHECK_THROWS_WITH_AS(io::parse_category(text),
                       doctest::Contains("NonAssociative"), error);
}

TEST_CASE("unknown sections are rejected") {
  CHECK_THROWS_AS(
      io::parse_category("ttgeo category v1\n[objects]\nx\n[stuff]\n"),
      error);
  CHECK_THROWS_AS(io::parse_category("[objects]\nx\n"), error);  // no header
}

TEST_CASE("poset cycle is rejected") {
  CHECK_THROWS_AS(io::parse_category("ttgeo category v1\n[objects]\na\nb\n"
                                     "[poset]\na < b\nb < a\n"),
                  error);
}

TEST_CASE("is_ei detects monoid with non-invertible idempotent") {
  // {1, e} with e*e = e
  auto c = io::parse_category(
      "ttgeo category v1\n[objects]\npt\n[morphisms]\ne: pt -> pt\n"
      "[compose]\ne = e . e\n");
  CHECK_FALSE(is_ei(c));
  CHECK_THROWS_WITH_AS(classify(c), doctest::Contains("NotEI"), error);
}

TEST_CASE("posets are EI and classify into singletons with a total order") {
  FiniteCategory c = chain3();
  CHECK(is_ei(c));
  auto cl = classify(c);
  CHECK(cl.n_classes() == 3);
  for (auto& cls : cl.classes) CHECK(cls.size() == 1);
  CHECK(cl.leq[0][1]);
  CHECK(cl.leq[1][2]);
  CHECK(cl.leq[0][2]);
  CHECK_FALSE(cl.leq[2][0]);
  for (int a = 0; a < 3; ++a) CHECK(cl.aut[a].size() == 1);
}

TEST_CASE("groups classify as a single class with full Aut") {
  auto cl = classify(z2cat());
  CHECK(cl.n_classes() == 1);
  CHECK(cl.aut[0].size() == 2);
}

TEST_CASE("convexity in the 3-chain") {
  FiniteCategory c = chain3();
  CHECK_FALSE(is_convex(c, {0, 2}));  // x,z with y between
  CHECK(is_convex(c, {1, 2}));        // upward closed
  CHECK(is_convex(c, {0}));
  CHECK(is_convex(c, {0, 1, 2}));
}

TEST_CASE("full subcategory on all objects is the category itself") {
  FiniteCategory c = chain3();
  CHECK(full_subcategory(c, {0, 1, 2}) == c);
  // idempotence
  auto sub = induced_subcategory(c, {1, 2});
  CHECK(full_subcategory(sub.cat, {0, 1}) == sub.cat);
  CHECK(sub.cat.n_morphisms() == 3);
}

TEST_CASE("iso-classes are convex") {
  auto c = z2cat();
  auto cl = classify(c);
  for (auto& cls : cl.classes) CHECK(is_convex(c, cls));
  auto p = chain3();
  for (auto& cls : classify(p).classes) CHECK(is_convex(p, cls));
}

TEST_CASE("opposite category reverses composition") {
  FiniteCategory c = chain3();
  FiniteCategory op = opposite(c);
  int xy = c.morphism_id("x<y"), yz = c.morphism_id("y<z");
  // in op, x<y: y -> x composes after y<z: z -> y
  CHECK(op.src(xy) == 1);
  CHECK(op.tgt(xy) == 0);
  CHECK(op.compose(xy, yz) == c.morphism_id("x<z"));
  CHECK(opposite(op) == c);
}

TEST_CASE("category round trips through format_category") {
  for (const FiniteCategory& c : {chain3(), z2cat()}) {
    auto again = io::parse_category(io::format_category(c));
    CHECK(again == c);
  }
}
