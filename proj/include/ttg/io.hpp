#ifndef TTG_IO_HPP
#define TTG_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "ttg/catmod.hpp"
#include "ttg/dcat.hpp"
#include "ttg/fincat.hpp"

namespace ttg::io {

/*
 * Line-oriented input formats. Every file starts with a version header
 * ("ttgeo <kind> v1"), '#' starts a comment, sections are bracketed.
 * The exact grammar is documented in docs/formats.md.
 */

// Category files: [objects] + either [poset] or [morphisms]/[compose].
fincat::FiniteCategory parse_category(const std::string& text);
fincat::FiniteCategory load_category(const std::string& path);
std::string format_category(const fincat::FiniteCategory& c);

// Build a poset-shaped category from covering (or arbitrary) relations;
// the transitive closure is taken, cycles are rejected. Morphisms are the
// identities (in object order) followed by the strict pairs x<y in
// lexicographic (src,tgt) order, named "x<y".
fincat::FiniteCategory poset_category(
    const std::vector<std::string>& object_names,
    const std::vector<std::pair<int, int>>& less_than);

// At most one morphism in each hom set and no non-identity isomorphisms.
bool is_poset_shaped(const fincat::FiniteCategory& c);

// objects x <= y in a poset-shaped category, as a matrix.
std::vector<std::vector<char>> poset_leq(const fincat::FiniteCategory& c);

// Module files: a [field] section (char = p, 0 meaning Q), [dims] lines
// "object = n", and one [map <morphism name>] section per nonzero matrix
// (rows of integers or a/b fractions). Identity maps are implied.
catmod::FunctorModule parse_module(const std::string& text, fincat::CatPtr c);
catmod::FunctorModule load_module(const std::string& path, fincat::CatPtr c);
std::string format_module(const catmod::FunctorModule& m);

// Complex files: [term d] sections referencing module files (paths relative
// to the complex file) and [diff d <object>] matrix blocks.
dcat::BoundedComplex parse_complex(const std::string& text,
                                   const std::string& base_dir,
                                   fincat::CatPtr c);
dcat::BoundedComplex load_complex(const std::string& path, fincat::CatPtr c);
// Writes <stem>.cx plus one <stem>.term<d>.mod per term; returns file names.
std::vector<std::string> save_complex(const dcat::BoundedComplex& c,
                                      const std::string& stem);

Scalar parse_scalar(const std::string& tok, const Field& k);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Shared lexing helpers.
std::string strip_comment(const std::string& line);
std::string trim(const std::string& s);
std::vector<std::string> split_ws(const std::string& s);
bool parse_int(const std::string& s, long long& out);

}  // namespace ttg::io

#endif
