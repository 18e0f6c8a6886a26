#pragma once

#include <string>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

/// Dense univariate polynomial over the rationals, coefficient of T^i at
/// position i. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial variable();
  /// Accepts e.g. "T-1", "T^2 - 2", "T^3 + 1/2 T - 3/4".
  static Polynomial from_string(const std::string& text);

  Index degree() const { return static_cast<Index>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  Rational coeff(Index i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  Mat operator()(const Mat& m) const;

  /// Companion matrix of a monic polynomial of degree >= 1.
  Mat companion() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// Euclidean division by a nonzero divisor; returns quotient, writes
  /// remainder into `rem` when given.
  Polynomial divide(const Polynomial& divisor, Polynomial* rem = nullptr) const;

  /// Distinct rational roots, sorted by scalar_order_less.
  std::vector<Rational> rational_roots() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace homlie
