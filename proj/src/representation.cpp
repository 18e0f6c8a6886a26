#include "homlie/representation.hpp"

#include <utility>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

HomRepresentation::HomRepresentation(
    std::shared_ptr<const HomAlgebra> algebra, std::vector<Mat> actions,
    Mat module_twist, Orientation orientation)
    : algebra_(std::move(algebra)),
      actions_(std::move(actions)),
      module_twist_(std::move(module_twist)),
      orientation_(orientation) {
  if (!algebra_) fail(Err::PreconditionFailed, "representation needs a base algebra");
  if (static_cast<Index>(actions_.size()) != algebra_->dim())
    fail(Err::DimensionMismatch, "one action matrix per basis element required");
  const Index m = module_twist_.rows();
  if (module_twist_.cols() != m)
    fail(Err::DimensionMismatch, "module twist must be square");
  for (const Mat& a : actions_)
    if (a.rows() != m || a.cols() != m)
      fail(Err::DimensionMismatch, "action matrices must match the module");
}

Mat HomRepresentation::action(const Vec& x) const {
  if (x.size() != base_dim())
    fail(Err::DimensionMismatch, "coordinate vector has wrong length");
  Mat out = Mat::Zero(module_dim(), module_dim());
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) out += x(i) * actions_[static_cast<size_t>(i)];
  return out;
}

bool same_base(const HomRepresentation& a, const HomRepresentation& b) {
  return a.algebra_ptr() == b.algebra_ptr() ||
         structurally_equal(a.algebra(), b.algebra());
}

CheckResult check_rep(const HomRepresentation& rho) {
  const HomAlgebra& a = rho.algebra();
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "representation law needs a lie base");
  const Mat& beta = rho.module_twist();
  std::vector<Mat> twisted(static_cast<size_t>(a.dim()));
  for (Index i = 0; i < a.dim(); ++i)
    twisted[static_cast<size_t>(i)] = rho.action(a.twist().col(i));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i + 1; j < a.dim(); ++j) {
      const Mat lhs = mul(rho.action(a.product(i, j)), beta);
      const Mat rhs = mul(twisted[static_cast<size_t>(i)], rho.action(j)) -
                      mul(twisted[static_cast<size_t>(j)], rho.action(i));
      if (lhs != rhs)
        return CheckResult::failure("rep-bracket", {i, j},
                                    "rho([x,y]) beta != rho(ax) rho(y) - rho(ay) rho(x)");
    }
  return CheckResult::pass();
}

CheckResult check_rep_multiplicative(const HomRepresentation& rho) {
  const HomAlgebra& a = rho.algebra();
  const Mat& beta = rho.module_twist();
  for (Index i = 0; i < a.dim(); ++i) {
    const Mat lhs = mul(rho.action(a.twist().col(i)), beta);
    const Mat rhs = mul(beta, rho.action(i));
    if (lhs != rhs)
      return CheckResult::failure("rep-multiplicative", {i},
                                  "rho(alpha(x)) beta != beta rho(x)");
  }
  return CheckResult::pass();
}

HomRepresentation adjoint_rep(std::shared_ptr<const HomAlgebra> algebra) {
  if (algebra->flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "adjoint action needs a lie algebra");
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(algebra->dim()));
  for (Index i = 0; i < algebra->dim(); ++i)
    actions.push_back(algebra->left(i));
  Mat beta = algebra->twist();
  return HomRepresentation(std::move(algebra), std::move(actions),
                           std::move(beta));
}

HomRepresentation adjoint_rep(const HomAlgebra& algebra) {
  return adjoint_rep(std::make_shared<HomAlgebra>(algebra));
}

HomRepresentation zero_rep(std::shared_ptr<const HomAlgebra> algebra,
                           Index module_dim, Mat module_twist) {
  std::vector<Mat> actions(static_cast<size_t>(algebra->dim()),
                           Mat::Zero(module_dim, module_dim));
  return HomRepresentation(std::move(algebra), std::move(actions),
                           std::move(module_twist));
}

HomAlgebra semidirect_sum(const HomRepresentation& rho) {
  if (const CheckResult r = check_rep(rho); !r)
    fail(Err::NotARepresentation, describe(r));
  const HomAlgebra& a = rho.algebra();
  const Index d = a.dim();
  const Index m = rho.module_dim();
  const Index n = d + m;
  std::vector<Mat> left(static_cast<size_t>(n), Mat::Zero(n, n));
  for (Index i = 0; i < d; ++i) {
    left[static_cast<size_t>(i)].topLeftCorner(d, d) = a.left(i);
    left[static_cast<size_t>(i)].bottomRightCorner(m, m) = rho.action(i);
    for (Index j = 0; j < m; ++j)
      left[static_cast<size_t>(d + j)].block(d, i, m, 1) =
          -rho.action(i).col(j);
  }
  Mat twist = Mat::Zero(n, n);
  twist.topLeftCorner(d, d) = a.twist();
  twist.bottomRightCorner(m, m) = rho.module_twist();
  return HomAlgebra(Flavor::lie, std::move(left), std::move(twist));
}

HomRepresentation direct_sum(const HomRepresentation& rho,
                             const HomRepresentation& tau) {
  if (!same_base(rho, tau))
    fail(Err::BaseMismatch, "direct sum needs a common base algebra");
  const Index m = rho.module_dim();
  const Index k = tau.module_dim();
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(rho.base_dim()));
  for (Index i = 0; i < rho.base_dim(); ++i) {
    Mat a = Mat::Zero(m + k, m + k);
    a.topLeftCorner(m, m) = rho.action(i);
    a.bottomRightCorner(k, k) = tau.action(i);
    actions.push_back(std::move(a));
  }
  Mat twist = Mat::Zero(m + k, m + k);
  twist.topLeftCorner(m, m) = rho.module_twist();
  twist.bottomRightCorner(k, k) = tau.module_twist();
  return HomRepresentation(rho.algebra_ptr(), std::move(actions),
                           std::move(twist));
}

HomRepresentation tensor_rep(const HomRepresentation& rho,
                             const HomRepresentation& tau) {
  if (!same_base(rho, tau))
    fail(Err::BaseMismatch, "tensor product needs a common base algebra");
  if (const CheckResult r = check_rep_multiplicative(rho); !r)
    fail(Err::NotMultiplicative, "left factor: " + describe(r));
  if (const CheckResult r = check_rep_multiplicative(tau); !r)
    fail(Err::NotMultiplicative, "right factor: " + describe(r));
  const Mat& beta = rho.module_twist();
  const Mat& gamma = tau.module_twist();
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(rho.base_dim()));
  for (Index i = 0; i < rho.base_dim(); ++i)
    actions.push_back(kron(rho.action(i), gamma) + kron(beta, tau.action(i)));
  return HomRepresentation(rho.algebra_ptr(), std::move(actions),
                           kron(beta, gamma));
}

std::optional<Index> rep_nilindex(const HomRepresentation& rho) {
  Subspace cur = Subspace::full(rho.module_dim());
  Index steps = 0;
  while (!cur.is_zero()) {
    std::vector<Vec> hit;
    for (Index i = 0; i < rho.base_dim(); ++i)
      for (Index r = 0; r < cur.dim(); ++r)
        hit.push_back(mul(rho.action(i), Mat(cur.basis().row(r).transpose())));
    Subspace next = Subspace::span(hit, rho.module_dim());
    if (next == cur) return std::nullopt;
    cur = std::move(next);
    ++steps;
  }
  return steps;
}

Subspace rep_kernel(const HomRepresentation& rho) {
  const Index d = rho.base_dim();
  const Index m = rho.module_dim();
  Mat stacked(m * m, d);
  for (Index i = 0; i < d; ++i) stacked.col(i) = flatten(rho.action(i));
  const Subspace ker = Subspace::span_rows(kernel_basis(stacked));
  if (check_rep_multiplicative(rho) && is_invertible(rho.module_twist()) &&
      rho.algebra().flavor() == Flavor::lie) {
    if (!ker.contains(bracket_span(rho.algebra(), ker, ker)) ||
        !ker.invariant_under(rho.algebra().twist()))
      fail(Err::InternalCheckFailed,
           "kernel of a multiplicative nondegenerate action must be a "
           "twist-stable subalgebra");
  }
  return ker;
}

bool is_faithful(const HomRepresentation& rho) {
  return rep_kernel(rho).is_zero();
}

}  // namespace homlie
