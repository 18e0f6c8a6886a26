#pragma once

#include <vector>

#include "homlie/hom_algebra.hpp"

namespace homlie::fixtures {

inline void set_bracket(std::vector<Mat>& left, Index i, Index j,
                        const Vec& v) {
  left[i].col(j) = v;
  left[j].col(i) = -v;
}

inline Vec unit(Index dim, Index k) {
  Vec v = Vec::Zero(dim);
  v(k) = 1;
  return v;
}

/// Heisenberg algebra: [e1,e2] = e3, identity twist.
inline HomAlgebra heisenberg() {
  std::vector<Mat> left(3, Mat::Zero(3, 3));
  set_bracket(left, 0, 1, unit(3, 2));
  return HomAlgebra(Flavor::lie, std::move(left), identity(3));
}

inline Mat diag(std::initializer_list<int> entries) {
  Mat m = Mat::Zero(static_cast<Index>(entries.size()),
                    static_cast<Index>(entries.size()));
  Index i = 0;
  for (int e : entries) m(i, i) = e, ++i;
  return m;
}

/// Yau twist of heisenberg by diag(2,3,6): [e1,e2] = 6 e3.
inline HomAlgebra h3_lambda() { return yau_twist(heisenberg(), diag({2, 3, 6})); }

/// Filiform algebra: [e1,e2] = e3, [e1,e3] = e4, identity twist.
inline HomAlgebra filiform_n4() {
  std::vector<Mat> left(4, Mat::Zero(4, 4));
  set_bracket(left, 0, 1, unit(4, 2));
  set_bracket(left, 0, 2, unit(4, 3));
  return HomAlgebra(Flavor::lie, std::move(left), identity(4));
}

/// Non-nilpotent solvable algebra: [e1,e2] = e2.
inline HomAlgebra solvable2() {
  std::vector<Mat> left(2, Mat::Zero(2, 2));
  set_bracket(left, 0, 1, unit(2, 1));
  return HomAlgebra(Flavor::lie, std::move(left), identity(2));
}

inline Mat swap2() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat rotation2() {
  Mat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}

/// 3-dim abelian whose twist has an irrational plane: rotation block + 1.
inline HomAlgebra abelian3_rotation() {
  Mat t = Mat::Zero(3, 3);
  t.topLeftCorner(2, 2) = rotation2();
  t(2, 2) = 1;
  return abelian(3, t);
}

}  // namespace homlie::fixtures
