#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/check.hpp"
#include "homlie/subspace.hpp"

namespace homlie {

enum class Flavor { lie, associative, plain };

const char* to_string(Flavor f);

/// Finite-dimensional algebra over Q together with a twist endomorphism.
/// The product is held as left-multiplication matrices: column j of
/// left(i) is e_i * e_j. Lie flavor rejects non-anticommutative tables at
/// construction instead of symmetrizing them.
class HomAlgebra {
 public:
  HomAlgebra(Flavor flavor, std::vector<Mat> left, Mat twist,
             std::vector<std::string> names = {});

  Index dim() const { return dim_; }
  Flavor flavor() const { return flavor_; }
  const Mat& twist() const { return twist_; }
  const std::vector<std::string>& names() const { return names_; }

  const Mat& left(Index i) const { return left_[i]; }
  Vec product(Index i, Index j) const { return left_[i].col(j); }
  Vec product(const Vec& x, const Vec& y) const;
  /// coefficient of e_k in e_i * e_j
  const Rational& c(Index i, Index j, Index k) const { return left_[i](k, j); }

  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  Vec apply_twist(const Vec& x) const { return twist_ * x; }

 private:
  Index dim_;
  Flavor flavor_;
  std::vector<Mat> left_;
  Mat twist_;
  std::vector<std::string> names_;
};

HomAlgebra abelian(Index dim, const Mat& twist, Flavor flavor = Flavor::lie);

/// Hom-Jacobi identity on all basis triples; requires lie flavor.
CheckResult check_hom_lie(const HomAlgebra& a);
/// twist(x*y) = twist(x)*twist(y) on all basis pairs.
CheckResult check_multiplicative(const HomAlgebra& a);
/// injective twist.
CheckResult check_nondegenerate(const HomAlgebra& a);

/// Twist a Lie algebra (identity twist, Jacobi verified) along an algebra
/// endomorphism phi: product phi([x,y]), twist phi.
HomAlgebra yau_twist(const HomAlgebra& lie, const Mat& phi);

/// Inverse construction: multiplicative Hom-Lie with invertible twist to
/// the Lie algebra (L, twist^{-1} [.,.], id). Jacobi on the result is
/// re-verified.
HomAlgebra untwist(const HomAlgebra& a);

/// L tensor t K[t]/(t^n): basis e_i tensor t^p for p = 1..n-1, bracket
/// degree-additive and truncated, twist acts on the left factor.
struct CurrentAlgebra {
  HomAlgebra algebra;
  Index base_dim;
  Index copies;  // powers t^1..t^copies, so copies = n-1
  Index index(Index i, Index p) const { return i * copies + (p - 1); }
};
CurrentAlgebra current_algebra(const HomAlgebra& a, Index n);

/// Elements with zero product against the whole algebra (both sides).
Subspace center(const HomAlgebra& a);

struct LowerCentralSeries {
  std::vector<Subspace> terms;  // terms[k] = L^{k+1}; ends at 0 or at the
                                // first repeated (stabilized) term
  std::optional<Index> nilindex;
};
LowerCentralSeries lower_central_series(const HomAlgebra& a);
bool is_nilpotent(const HomAlgebra& a);
/// Least n with L^n = 0; throws Err::NotNilpotent when the series
/// stabilizes above zero.
Index nilindex(const HomAlgebra& a);

enum class ClosureMode { subalgebra, ideal };
/// Smallest twist-stable subalgebra/ideal containing the seed.
Subspace hom_closure(const HomAlgebra& a, const Subspace& seed,
                     ClosureMode mode);

struct QuotientAlgebra {
  HomAlgebra algebra;
  Mat projection;  // q x d, a Hom-algebra homomorphism
  Mat section;     // d x q, right inverse of projection
};
/// Quotient by a twist-stable ideal; the complement is picked by pivot
/// columns, so results are deterministic.
QuotientAlgebra quotient_algebra(const HomAlgebra& a, const Subspace& ideal);

/// Descending chain of ideals, front = L, back = 0.
struct IdealChain {
  std::vector<Subspace> ideals;
};

/// Chain witnessing strong nilpotency: every link is a twist-stable ideal,
/// [L, I_k] lands one link lower and interior steps have codimension one
/// (produced chains drop by one at every step). Throws
/// Err::FieldExtensionNeeded when an induced twist on a quotient step has
/// no rational eigenvalue.
IdealChain strong_nilpotency_chain(const HomAlgebra& a);
CheckResult validate_chain(const HomAlgebra& a, const IdealChain& chain);

/// Algebra structure induced on a product- and twist-closed subspace.
HomAlgebra restrict_to_subalgebra(const HomAlgebra& a, const Subspace& s);

/// Span of pairwise products of two subspaces.
Subspace bracket_span(const HomAlgebra& a, const Subspace& x,
                      const Subspace& y);

bool structurally_equal(const HomAlgebra& a, const HomAlgebra& b);

}  // namespace homlie
