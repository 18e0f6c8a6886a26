#include "homlie/subspace.hpp"

#include "homlie/errors.hpp"

namespace homlie {

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  s.basis_ = Mat::Identity(ambient, ambient);
  for (Index i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span_rows(const Mat& rows) {
  Subspace s(rows.cols());
  Rref r = rref(rows);
  s.basis_ = r.mat.topRows(r.rank);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, Index ambient) {
  Mat rows(static_cast<Index>(vectors.size()), ambient);
  for (Index i = 0; i < rows.rows(); ++i) {
    if (vectors[i].size() != ambient) fail(Err::DimensionMismatch, "span vector size");
    rows.row(i) = vectors[i].transpose();
  }
  return span_rows(rows);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(Err::DimensionMismatch, "contains vector size");
  // reduce v by the echelon rows; member iff the residual vanishes
  Vec r = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    const Rational& c = r(pivots_[i]);
    if (!c.is_zero()) r -= c * basis_.row(i).transpose();
  }
  return homlie::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(Err::DimensionMismatch, "contains subspace ambient");
  for (Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i).transpose())) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(Err::DimensionMismatch, "coordinates vector size");
  Vec r = v;
  Vec c = Vec::Zero(basis_.rows());
  for (Index i = 0; i < basis_.rows(); ++i) {
    const Rational f = r(pivots_[i]);
    if (!f.is_zero()) {
      c(i) = f;
      r -= f * basis_.row(i).transpose();
    }
  }
  if (!homlie::is_zero(r)) fail(Err::PreconditionFailed, "vector outside subspace");
  return c;
}

bool Subspace::mapped_into(const Mat& m, const Subspace& target) const {
  if (m.cols() != ambient_ || m.rows() != target.ambient_)
    fail(Err::DimensionMismatch, "mapped_into shape");
  for (Index i = 0; i < basis_.rows(); ++i)
    if (!target.contains(m * basis_.row(i).transpose())) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(Err::DimensionMismatch, "sum of subspaces");
  Mat rows(a.dim() + b.dim(), a.ambient());
  rows << a.basis(), b.basis();
  return Subspace::span_rows(rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(Err::DimensionMismatch, "intersection of subspaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // x^T a.basis = y^T b.basis solved through the kernel of [a.basis; -b.basis]^T
  Mat stacked(a.dim() + b.dim(), a.ambient());
  stacked << a.basis(), -b.basis();
  const Mat k = kernel_basis(stacked.transpose());
  Mat rows(k.rows(), a.ambient());
  for (Index i = 0; i < k.rows(); ++i)
    rows.row(i) = k.row(i).head(a.dim()) * a.basis();
  return Subspace::span_rows(rows);
}

QuotientSpace make_quotient(const Subspace& s) {
  QuotientSpace q{s, {}, Mat(), Mat()};
  std::vector<bool> is_pivot(s.ambient(), false);
  for (Index p : s.pivots()) is_pivot[p] = true;
  for (Index c = 0; c < s.ambient(); ++c)
    if (!is_pivot[c]) q.complement.push_back(c);
  const Index qd = static_cast<Index>(q.complement.size());
  q.section = Mat::Zero(s.ambient(), qd);
  for (Index j = 0; j < qd; ++j) q.section(q.complement[j], j) = 1;
  // projection: reduce v modulo s (zeroing the pivot coordinates), then
  // read off the complement coordinates
  q.projection = Mat::Zero(qd, s.ambient());
  for (Index j = 0; j < qd; ++j) {
    const Index c = q.complement[j];
    q.projection(j, c) = 1;
    for (Index i = 0; i < s.dim(); ++i)
      q.projection(j, s.pivots()[i]) = -s.basis()(i, c);
  }
  return q;
}

Mat restrict_map(const Mat& m, const Subspace& s) {
  if (!s.invariant_under(m)) fail(Err::NotInvariant, "subspace not invariant under map");
  Mat out(s.dim(), s.dim());
  for (Index i = 0; i < s.dim(); ++i)
    out.col(i) = s.coordinates(m * s.basis().row(i).transpose());
  return out;
}

Mat quotient_map(const Mat& m, const QuotientSpace& q) {
  if (!q.sub.mapped_into(m, q.sub)) fail(Err::NotInvariant, "subspace not invariant under map");
  return q.projection * m * q.section;
}

}  // namespace homlie
