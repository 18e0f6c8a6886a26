#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "homlie/check.hpp"
#include "homlie/hom_algebra.hpp"
#include "homlie/rational.hpp"
#include "homlie/subspace.hpp"

namespace homlie {

enum class Orientation { left, right };

/// A linear action of a Hom-algebra on a module (V, beta): one matrix per
/// basis element of the algebra, extended linearly.
class HomRepresentation {
 public:
  HomRepresentation(std::shared_ptr<const HomAlgebra> algebra,
                    std::vector<Mat> actions, Mat module_twist,
                    Orientation orientation = Orientation::left);

  const HomAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const HomAlgebra>& algebra_ptr() const {
    return algebra_;
  }
  Index base_dim() const { return algebra_->dim(); }
  Index module_dim() const { return module_twist_.rows(); }
  const Mat& action(Index i) const { return actions_[static_cast<size_t>(i)]; }
  Mat action(const Vec& x) const;
  const std::vector<Mat>& actions() const { return actions_; }
  const Mat& module_twist() const { return module_twist_; }
  Orientation orientation() const { return orientation_; }

 private:
  std::shared_ptr<const HomAlgebra> algebra_;
  std::vector<Mat> actions_;
  Mat module_twist_;
  Orientation orientation_;
};

/// Two representations act for the same algebra (shared object or equal
/// structure constants and twist).
bool same_base(const HomRepresentation& a, const HomRepresentation& b);

/// rho([x,y]) beta = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x) on basis
/// pairs. Requires a lie-flavored base algebra.
CheckResult check_rep(const HomRepresentation& rho);

/// rho(alpha(x)) beta = beta rho(x) on basis elements.
CheckResult check_rep_multiplicative(const HomRepresentation& rho);

/// Bracket-by-x action of L on itself; module twist alpha. Its kernel is the
/// center.
HomRepresentation adjoint_rep(std::shared_ptr<const HomAlgebra> algebra);
HomRepresentation adjoint_rep(const HomAlgebra& algebra);

/// All-zero actions on a module with the given twist.
HomRepresentation zero_rep(std::shared_ptr<const HomAlgebra> algebra,
                           Index module_dim, Mat module_twist);

/// L + V with [x,v] = rho(x)v, [v,w] = 0 and twist alpha + beta.
/// Throws NotARepresentation unless check_rep passes.
HomAlgebra semidirect_sum(const HomRepresentation& rho);

/// Block-diagonal sum; kernel is the intersection of the kernels.
HomRepresentation direct_sum(const HomRepresentation& rho,
                             const HomRepresentation& tau);

/// (rho (x) tau)(x) = rho(x) (x) gamma + beta (x) tau(x) on V (x) W with twist
/// beta (x) gamma. Both inputs must be multiplicative.
HomRepresentation tensor_rep(const HomRepresentation& rho,
                             const HomRepresentation& tau);

/// Least n with every n-fold product of basis actions zero, found by
/// iterating U_{k+1} = sum_i rho(e_i)(U_k); empty when the chain stabilizes
/// above zero.
std::optional<Index> rep_nilindex(const HomRepresentation& rho);

/// {x : rho(x) = 0}. For multiplicative rho with invertible module twist the
/// result is verified closed under bracket and twist.
Subspace rep_kernel(const HomRepresentation& rho);

bool is_faithful(const HomRepresentation& rho);

}  // namespace homlie
