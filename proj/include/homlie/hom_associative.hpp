#pragma once

#include <memory>

#include "homlie/check.hpp"
#include "homlie/hom_algebra.hpp"
#include "homlie/rational.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// (x y) alpha(z) = alpha(x) (y z) on basis triples. Sparse-aware: cost is
/// driven by the number of nonzero products, so large matrix-unit algebras
/// stay cheap.
CheckResult check_hom_associative(const HomAlgebra& a);

/// Same product table, bracket x y - y x, lie flavor. Hom-associative inputs
/// give Hom-Lie outputs.
HomAlgebra commutator_algebra(const HomAlgebra& a);

/// A + K u with x u = u x = alpha(x), u u = u, alpha(u) = u. Input must be
/// multiplicative, nondegenerate and Hom-associative; the output is verified
/// to keep all three.
HomAlgebra adjoin_unit(const HomAlgebra& a);

/// End(V) with x * y = b x b^-1 y b^-1 and twist x -> b x b^-1, materialized
/// on the m^2 matrix units E_rs (index r*m+s, matching flatten()).
HomAlgebra endomorphism_hom_algebra(const Mat& b);

/// rho_l(x y) beta = rho_l(alpha(x)) rho_l(y)
CheckResult check_left_rep(const HomRepresentation& rho);
/// beta rho_r(x y) = rho_r(x) rho_r(alpha(y))
CheckResult check_right_rep(const HomRepresentation& rho);
/// both laws plus the compatibility rho_l(alpha(x)) rho_r(y) =
/// rho_l(x) rho_r(alpha(y))
CheckResult check_birep(const HomRepresentation& left,
                        const HomRepresentation& right);

/// Left action of A on itself.
HomRepresentation left_self_action(std::shared_ptr<const HomAlgebra> a);
HomRepresentation right_self_action(std::shared_ptr<const HomAlgebra> a);

/// Left multiplication of A on adjoin_unit(A): faithful of dimension
/// dim(A)+1 because rho(x) sends the unit to alpha(x).
HomRepresentation faithful_assoc_rep(std::shared_ptr<const HomAlgebra> a);

/// Images of a Hom-Lie algebra inside the commutator algebra of End(V):
/// map.col(i) = flatten(rho(e_i)).
struct EndEmbedding {
  Mat beta;
  Mat map;
};

/// Verifies that x -> rho(x) embeds the base algebra of a faithful
/// multiplicative nondegenerate representation into (End(V)^-, Ad_beta):
/// brackets go to twisted commutators and rho(alpha(x)) = beta rho(x) beta^-1.
EndEmbedding theorem_a_forward(const HomRepresentation& rho);

/// From an injective homomorphism iota : L -> A^- (columns of iota are images
/// in A's basis), builds the faithful representation of L on adjoin_unit(A)
/// by left multiplication.
HomRepresentation theorem_a_backward(std::shared_ptr<const HomAlgebra> lie,
                                     const HomAlgebra& assoc, const Mat& iota);

}  // namespace homlie
