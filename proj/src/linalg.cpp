#include "homlie/linalg.hpp"

#include <algorithm>

#include "homlie/errors.hpp"

namespace homlie {

Rref rref(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  Rref out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational inv = m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) /= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

Index rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const Index cols = m.cols();
  const Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index p : r.pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(static_cast<Index>(free_cols.size()), cols);
  basis.setZero();
  for (Index k = 0; k < basis.rows(); ++k) {
    const Index f = free_cols[k];
    basis(k, f) = 1;
    for (Index i = 0; i < r.rank; ++i) basis(k, r.pivots[i]) = -r.mat(i, f);
  }
  // already independent; one more pass puts the rows into echelon order
  Rref canon = rref(std::move(basis));
  return canon.mat.topRows(canon.rank);
}

Mat image_basis(const Mat& m) {
  Mat t = m.transpose();
  Rref r = rref(std::move(t));
  return r.mat.topRows(r.rank);
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "inverse of non-square matrix");
  const Index n = m.rows();
  Mat aug(n, 2 * n);
  aug << m, Mat::Identity(n, n);
  Rref r = rref(std::move(aug));
  if (r.rank < n || (r.rank > 0 && r.pivots[n - 1] >= n))
    fail(Err::Singular, "matrix is singular");
  return r.mat.rightCols(n);
}

bool solve(const Mat& a, const Vec& b, Vec& x) {
  Mat aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Rref r = rref(std::move(aug));
  for (Index i = 0; i < r.rank; ++i)
    if (r.pivots[i] == a.cols()) return false;  // pivot in the rhs column
  x = Vec::Zero(a.cols());
  for (Index i = 0; i < r.rank; ++i) x(r.pivots[i]) = r.mat(i, a.cols());
  return true;
}

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Mat unflatten(const Vec& v, Index rows, Index cols) {
  if (v.size() != rows * cols) fail(Err::DimensionMismatch, "unflatten size");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

Polynomial char_poly(const Mat& m) {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "char_poly of non-square matrix");
  const Index n = m.rows();
  // Faddeev-LeVerrier: exact over a field of characteristic zero.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat b = Mat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    b = mul(m, b);
    for (Index i = 0; i < n; ++i) b(i, i) += c[n - k + 1];
    Rational tr = 0;
    Mat mb = mul(m, b);
    for (Index i = 0; i < n; ++i) tr += mb(i, i);
    c[n - k] = -tr / k;
  }
  return Polynomial(std::move(c));
}

Polynomial min_poly(const Mat& m) {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "min_poly of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Polynomial({Rational(1)});  // empty matrix: constant 1
  std::vector<Vec> powers;
  Mat p = Mat::Identity(n, n);
  powers.push_back(flatten(p));
  for (Index k = 1; k <= n; ++k) {
    p = mul(p, m);
    const Vec target = flatten(p);
    Mat a(n * n, k);
    for (Index j = 0; j < k; ++j) a.col(j) = powers[j];
    Vec x;
    if (solve(a, target, x)) {
      std::vector<Rational> c(k + 1);
      for (Index j = 0; j < k; ++j) c[j] = -x(j);
      c[k] = 1;
      return Polynomial(std::move(c));
    }
    powers.push_back(target);
  }
  fail(Err::InternalCheckFailed, "minimal polynomial not found within dimension bound");
}

std::vector<std::pair<Rational, Vec>> rational_eigenvectors(const Mat& m) {
  std::vector<std::pair<Rational, Vec>> out;
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "eigenvectors of non-square matrix");
  if (m.rows() == 0) return out;
  std::vector<Rational> roots = min_poly(m).rational_roots();
  std::sort(roots.begin(), roots.end(), scalar_order_less);
  for (const Rational& lambda : roots) {
    Mat shifted = m;
    for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    const Mat k = kernel_basis(shifted);
    if (k.rows() == 0)
      fail(Err::InternalCheckFailed, "root of minimal polynomial without eigenvector");
    out.emplace_back(lambda, k.row(0).transpose());
  }
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) fail(Err::DimensionMismatch, "mul shape");
  Mat out = Mat::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const Rational& f = a(i, k);
      if (f.is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Rational& g = b(k, j);
        if (!g.is_zero()) out(i, j) += f * g;
      }
    }
  return out;
}

}  // namespace homlie
