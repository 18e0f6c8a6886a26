#include "homlie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {
namespace {

Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// All positive divisors by trial division; inputs here are desk-scale.
std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small, large;
  const Integer a = abs_int(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

bool Polynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational Polynomial::coeff(Index i) const {
  if (i < 0 || i >= static_cast<Index>(c_.size())) return Rational(0);
  return c_[i];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Mat Polynomial::operator()(const Mat& m) const {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "polynomial of non-square matrix");
  Mat acc = Mat::Zero(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul(acc, m);
    for (Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Mat Polynomial::companion() const {
  if (!is_monic() || degree() < 1)
    fail(Err::PreconditionFailed, "companion matrix needs a monic polynomial of degree >= 1");
  const Index e = degree();
  Mat c = Mat::Zero(e, e);
  for (Index i = 0; i + 1 < e; ++i) c(i + 1, i) = 1;
  for (Index i = 0; i < e; ++i) c(i, e - 1) = -c_[i];
  return c;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::divide(const Polynomial& divisor, Polynomial* rem) const {
  if (divisor.is_zero()) fail(Err::PreconditionFailed, "division by zero polynomial");
  std::vector<Rational> r = c_;
  std::vector<Rational> q;
  const Index dd = divisor.degree();
  while (static_cast<Index>(r.size()) - 1 >= dd && !r.empty()) {
    const Rational f = r.back() / divisor.c_.back();
    const size_t shift = r.size() - 1 - dd;
    if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
    q[shift] = f;
    for (Index i = 0; i <= dd; ++i) r[shift + i] -= f * divisor.c_[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  if (rem) *rem = Polynomial(std::move(r));
  return Polynomial(std::move(q));
}

std::vector<Rational> Polynomial::rational_roots() const {
  if (is_zero()) fail(Err::PreconditionFailed, "roots of the zero polynomial");
  std::vector<Rational> roots;
  // primitive integer form
  Integer lcm = 1;
  for (const Rational& c : c_) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Integer> ic(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    ic[i] = numerator(c_[i]) * (lcm / denominator(c_[i]));
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low == ic.size()) return roots;  // constant zero was excluded above
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 == ic.size()) {  // nonzero constant after stripping T^low
    std::sort(roots.begin(), roots.end(), scalar_order_less);
    return roots;
  }
  const Integer a0 = ic[low], an = ic.back();
  const auto ps = divisors(a0), qs = divisors(an);
  auto eval_int = [&](const Rational& x) {
    Rational acc(0);
    for (size_t i = ic.size(); i-- > low;) acc = acc * x + ic[i];
    return acc;
  };
  for (const Integer& p : ps)
    for (const Integer& q : qs) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational cand = make_rational(sign * p, q);
        if (eval_int(cand).is_zero()) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end(), scalar_order_less);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Index i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) { os << a; continue; }
    if (a != 1) os << a << " ";
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

// term := [rational] [T [^ int]]
struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Integer integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(Err::ParseError, "expected integer in polynomial at '" + s.substr(start) + "'");
    return Integer(s.substr(start, pos - start));
  }

  Rational rational() {
    Integer num = integer();
    if (eat('/')) return make_rational(num, integer());
    return Rational(num);
  }

  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  Polynomial parse() {
    std::vector<Rational> acc;
    bool any = false;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    while (true) {
      Rational coeff(sign);
      bool have_coeff = false;
      if (peek_digit()) { coeff = sign * rational(); have_coeff = true; }
      Index power = 0;
      if (peek('T') || peek('t')) {
        ++pos;
        power = 1;
        if (eat('^')) power = static_cast<Index>(integer());
      } else if (!have_coeff) {
        fail(Err::ParseError, "expected term in polynomial '" + s + "'");
      }
      if (static_cast<Index>(acc.size()) <= power) acc.resize(power + 1, Rational(0));
      acc[power] += coeff;
      any = true;
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else fail(Err::ParseError, "unexpected '" + s.substr(pos) + "' in polynomial");
    }
    if (!any) fail(Err::ParseError, "empty polynomial");
    return Polynomial(std::move(acc));
  }
};

}  // namespace

Polynomial Polynomial::from_string(const std::string& text) {
  PolyParser p(text);
  return p.parse();
}

}  // namespace homlie
