#pragma once

#include <utility>
#include <vector>

#include "homlie/polynomial.hpp"
#include "homlie/rational.hpp"

namespace homlie {

struct Rref {
  Mat mat;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank = 0;
};

/// Gauss-Jordan with first-nonzero pivoting; fully deterministic.
Rref rref(Mat m);

Index rank(const Mat& m);

/// Rows form the canonical (reduced-echelon) basis of the null space.
Mat kernel_basis(const Mat& m);

/// Rows form the canonical basis of the column space.
Mat image_basis(const Mat& m);

bool is_invertible(const Mat& m);

/// Exact inverse; throws Err::Singular otherwise.
Mat inverse(const Mat& m);

/// Solves a*x = b exactly. Returns false when inconsistent.
bool solve(const Mat& a, const Vec& b, Vec& x);

/// Kronecker product under the pinned tensor basis order
/// (i, j) -> i * dim(W) + j, i.e. block form a(i,j) * b.
template <typename DA, typename DB>
Mat kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Row-major flattening, the vector counterpart of kron's index order.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, Index rows, Index cols);

/// Monic characteristic polynomial via Faddeev-LeVerrier.
Polynomial char_poly(const Mat& m);

/// Monic minimal polynomial (first linear dependence among powers).
Polynomial min_poly(const Mat& m);

/// Rational eigenvalues with one canonical eigenvector each, sorted by
/// scalar_order_less on the eigenvalue. Empty result means no rational
/// eigenvalue, which is not an error.
std::vector<std::pair<Rational, Vec>> rational_eigenvectors(const Mat& m);

/// Matrix product that skips zero entries of the left factor; same result
/// as operator*, noticeably faster on the sparse structure tensors that
/// show up for endomorphism algebras.
Mat mul(const Mat& a, const Mat& b);

}  // namespace homlie
