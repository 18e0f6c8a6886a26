#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

namespace homlie {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;
using Index    = Eigen::Index;

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Build p/q in canonical form. The mpq string ctor does not canonicalize
/// and the built-in-int ctor mistreats negative denominators, so every
/// rational that enters the system from outside goes through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

/// Total order used whenever a single eigenvalue has to be picked
/// deterministically: numerator first, then denominator.
inline bool scalar_order_less(const Rational& a, const Rational& b) {
  const Integer an = numerator(a), bn = numerator(b);
  if (an != bn) return an < bn;
  return denominator(a) < denominator(b);
}

inline Mat identity(Index n) { return Mat::Identity(n, n); }

template <typename D>
bool is_zero(const Eigen::MatrixBase<D>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace homlie
