#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homlie/hom_algebra.hpp"
#include "homlie/polynomial.hpp"

namespace homlie {

/// Formal bracket word: leaves carry a generator index and the power of
/// the twist applied to it (kept below deg f by the reduction f(a) = 0),
/// internal nodes are brackets. Degree = number of leaves.
struct BracketWord {
  Index generator = 0;
  Index alpha_power = 0;
  std::shared_ptr<const BracketWord> left, right;  // both set iff bracket

  bool is_leaf() const { return left == nullptr; }
  Index degree() const;
  std::string str() const;

  static BracketWord leaf(Index generator, Index alpha_power);
  static BracketWord bracket(const BracketWord& l, const BracketWord& r);
};

/// Total order: degree first, then left subtree, then right; leaves by
/// (generator, power). Pivot elimination works downward in this order, so
/// surviving basis words are the small ones.
bool word_less(const BracketWord& a, const BracketWord& b);

/// Graded data behind a free algebra M_{k,n,f}: chosen basis words per
/// degree, the relation space they were cut out by, and the grading of
/// the assembled algebra's basis.
struct GradedPresentation {
  Index generators;       // k
  Index nilindex_bound;   // n: brackets of total degree >= n vanish
  Polynomial twist_poly;  // f, monic
  std::vector<std::vector<BracketWord>> degree_basis;  // [d-1] = degree d
  std::vector<Subspace> degree_relations;  // in candidate_words coordinates
  std::vector<Index> degree_of;            // basis index -> degree
  HomAlgebra algebra;
};

/// Free multiplicative nilpotent Hom-Lie algebra on k generators whose
/// twist satisfies the monic polynomial f, with brackets of total degree
/// >= n truncated to zero. Degree-1 space is spanned by a^l(x_i) with
/// l < deg f and the twist acts there by the companion matrix of f;
/// higher degrees are spans of brackets of lower basis words modulo
/// anticommutativity and Hom-Jacobi with the twist expanded onto leaves.
std::pair<HomAlgebra, GradedPresentation> free_multiplicative_nilpotent(
    Index generators, Index nilindex_bound, const Polynomial& f);

/// Bracket words [u, v] over lower-degree basis words, in the coordinate
/// order used by degree_relations and the internal reduction (blocks by
/// degree of the left factor, row-major within a block).
std::vector<BracketWord> candidate_words(const GradedPresentation& p,
                                         Index degree);

/// Image of a word in `target` under leaf a^l(x_i) -> twist^l(targets[i]).
Vec evaluate_word(const BracketWord& w, const HomAlgebra& target,
                  const std::vector<Vec>& targets);

/// The unique homomorphism M_{k,n,f} -> L extending the leaf assignment;
/// columns are images of M's basis. Requires L multiplicative with
/// f(twist) = 0 and nilindex <= n; the result is re-checked to commute
/// with brackets and twists on all basis pairs.
Mat universal_map(const GradedPresentation& m, const HomAlgebra& target,
                  const std::vector<Vec>& targets);

struct QuotientPresentation {
  Index generators;       // k = dim L
  Index nilindex;         // n
  Polynomial twist_poly;  // minimal polynomial of the twist of L
  GradedPresentation free_presentation;
  Mat surjection;  // dim(L) x dim(M), universal map on a basis of L
  Subspace kernel_ideal;
};

/// Presents a nilpotent multiplicative nondegenerate Hom-Lie algebra as
/// M_{k,n,f} / kernel_ideal with one generator per basis element.
QuotientPresentation present_as_quotient(const HomAlgebra& a);

}  // namespace homlie
