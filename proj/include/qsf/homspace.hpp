#pragma once

#include "qsf/category.hpp"

namespace qsf {

// Parenthesized tensor word of direct-sum objects, length 1..3.  Length-3
// words carry an explicit nesting: Left = ((w0 w1) w2), Right = (w0 (w1 w2)).
enum class Nest { None, Left, Right };

struct TensorWord {
  std::vector<SumObject> factors;
  Nest nest = Nest::None;

  TensorWord() = default;
  TensorWord(std::vector<SumObject> f, Nest n = Nest::None);

  int length() const { return static_cast<int>(factors.size()); }
  const FusionCategoryData* cat() const { return factors.at(0).cat; }
  bool operator==(const TensorWord& o) const;
};

// Fusion tree of a length-2 word into root simple s: simple a (copy i) from
// the first factor, b (copy j) from the second, vertex slot mu in N_ab^s.
struct Tree2 {
  int a, i, b, j, mu;
};

// Fusion tree of a length-3 word into root s.  For Left nesting mid = e with
// v1 in N_{ab}^e, v2 in N_{ec}^s; for Right nesting mid = f with v1 in
// N_{bc}^f, v2 in N_{af}^s.  Externals (a,i), (b,j), (c,k) from the factors.
struct Tree3 {
  int a, i, b, j, c, k, mid, v1, v2;
};

// Enumeration defines the coordinate order of morphism blocks: externals in
// factor summand order with copies ascending, then mid ascending, then vertex
// slots -- matching the F-block row/column order for fixed externals.
std::vector<Tree2> trees2(const TensorWord& w, int root);
std::vector<Tree3> trees3(const TensorWord& w, int root);
int num_trees(const TensorWord& w, int root);

// Morphism between tensor words in the orthonormal fusion-tree bases: one
// block per root simple s, of shape num_trees(target,s) x num_trees(source,s).
struct TreeMorphism {
  TensorWord source, target;
  std::vector<CMatrix> blocks;  // indexed by root label

  TreeMorphism() = default;
  TreeMorphism(TensorWord src, TensorWord tgt);  // zero morphism

  const FusionCategoryData* cat() const { return source.cat(); }

  TreeMorphism& operator+=(const TreeMorphism& o);
  TreeMorphism& operator-=(const TreeMorphism& o);
  TreeMorphism& operator*=(cplx c);
  friend TreeMorphism operator+(TreeMorphism a, const TreeMorphism& b) { return a += b; }
  friend TreeMorphism operator-(TreeMorphism a, const TreeMorphism& b) { return a -= b; }
  friend TreeMorphism operator*(cplx c, TreeMorphism a) { return a *= c; }
};

TreeMorphism identity_morphism(const TensorWord& w);
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);  // g after f
TreeMorphism dagger(const TreeMorphism& f);
double op_norm(const TreeMorphism& f);  // max over root blocks
cplx fro_dot(const TreeMorphism& a, const TreeMorphism& b);

// f (x) 1_Z and 1_Z (x) f.  Supported shapes of f: 1-word -> 1-word,
// 2-word -> 1-word and 1-word -> 2-word.  Length-3 results are Left-nested
// when tensoring on the right, Right-nested when tensoring on the left.
TreeMorphism tensor_id_right(const TreeMorphism& f, const SumObject& z);
TreeMorphism tensor_id_left(const SumObject& z, const TreeMorphism& f);

// Re-expresses the same morphism after toggling the nesting of its length-3
// source/target word (the skeletal associator identification via F).
void fmove_source(TreeMorphism& f);
void fmove_target(TreeMorphism& f);

// Braiding b_{X,Y}: (X,Y) -> (Y,X).  Throws NoBraiding without R data.
TreeMorphism braid_morphism(const SumObject& x, const SumObject& y);
// f o b_{Y,X} for f: (X,Y) -> T, and f o b_{X,Y} o b_{Y,X} (monodromy).
TreeMorphism braid_precompose(const TreeMorphism& f);
TreeMorphism monodromy_precompose(const TreeMorphism& f);

// Endomorphisms of a 1-word as per-label block matrices (0x0 when absent).
BlockDiag as_endblock(const TreeMorphism& f);
TreeMorphism from_endblock(const SumObject& x, const BlockDiag& b);

// Min Hermitian eigenvalue of a 1-word endomorphism (NonHermitian if not).
double min_herm_eig(const TreeMorphism& f);

// Removes a unit-object factor from a length-2 source/target word, using the
// strict-unit identification of tree bases.
TreeMorphism strip_unit_source(const TreeMorphism& f, int pos);
TreeMorphism strip_unit_target(const TreeMorphism& f, int pos);

// Value of an endomorphism of the unit word.
cplx scalar_of(const TreeMorphism& f);

}  // namespace qsf
