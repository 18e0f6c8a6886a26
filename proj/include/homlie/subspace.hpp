#pragma once

#include <vector>

#include "homlie/linalg.hpp"
#include "homlie/rational.hpp"

namespace homlie {

/// Subspace of K^n held as the unique reduced-row-echelon basis (rows,
/// no zero rows). Two subspaces are equal iff their matrices are equal.
class Subspace {
 public:
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(Index ambient) { return Subspace(ambient); }
  static Subspace full(Index ambient);
  static Subspace span_rows(const Mat& rows);
  static Subspace span_cols(const Mat& cols) { return span_rows(cols.transpose()); }
  static Subspace span(const std::vector<Vec>& vectors, Index ambient);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
           basis_ == o.basis_;
  }

  /// Coordinates of a member vector in the basis rows; throws when the
  /// vector lies outside.
  Vec coordinates(const Vec& v) const;

  /// True when m maps this subspace into `target`.
  bool mapped_into(const Mat& m, const Subspace& target) const;
  bool invariant_under(const Mat& m) const { return mapped_into(m, *this); }

 private:
  Index ambient_;
  Mat basis_;
  std::vector<Index> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

inline Subspace kernel(const Mat& m) { return Subspace::span_rows(kernel_basis(m)); }
inline Subspace image(const Mat& m) { return Subspace::span_rows(image_basis(m)); }

/// Quotient K^n / S with the complement picked as the non-pivot
/// coordinates of S. projection * section = identity on the quotient.
struct QuotientSpace {
  Subspace sub;
  std::vector<Index> complement;  // ambient coordinates kept
  Mat projection;                 // q x n
  Mat section;                    // n x q
};

QuotientSpace make_quotient(const Subspace& s);

/// Matrix of m restricted to an invariant subspace, in basis() coordinates.
/// Throws Err::NotInvariant when m does not map s into itself.
Mat restrict_map(const Mat& m, const Subspace& s);

/// Matrix induced by m on K^n / q.sub. Throws Err::NotInvariant when
/// m does not preserve q.sub.
Mat quotient_map(const Mat& m, const QuotientSpace& q);

}  // namespace homlie
