#include "homlie/hom_algebra.hpp"

#include <sstream>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::vector<std::string> default_names(Index dim) {
  std::vector<std::string> names;
  for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

std::string print_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

}  // namespace

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::lie: return "lie";
    case Flavor::associative: return "assoc";
    case Flavor::plain: return "plain";
  }
  return "?";
}

HomAlgebra::HomAlgebra(Flavor flavor, std::vector<Mat> left, Mat twist,
                       std::vector<std::string> names)
    : dim_(static_cast<Index>(left.size())),
      flavor_(flavor),
      left_(std::move(left)),
      twist_(std::move(twist)),
      names_(std::move(names)) {
  for (const Mat& m : left_)
    if (m.rows() != dim_ || m.cols() != dim_)
      fail(Err::DimensionMismatch, "structure matrix shape");
  if (twist_.rows() != dim_ || twist_.cols() != dim_)
    fail(Err::DimensionMismatch, "twist shape");
  if (names_.empty()) names_ = default_names(dim_);
  if (static_cast<Index>(names_.size()) != dim_)
    fail(Err::DimensionMismatch, "basis name count");
  if (flavor_ == Flavor::lie) {
    for (Index i = 0; i < dim_; ++i)
      for (Index j = i; j < dim_; ++j)
        if (Vec(left_[i].col(j)) != Vec(-left_[j].col(i)))
          fail(Err::AntisymmetryConflict,
               "product table is not anticommutative at (" +
                   std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
  }
}

Vec HomAlgebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    fail(Err::DimensionMismatch, "product operand size");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j)
      if (!y(j).is_zero()) out += (x(i) * y(j)) * left_[i].col(j);
  }
  return out;
}

Mat HomAlgebra::left_mult(const Vec& x) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (!x(i).is_zero()) out += x(i) * left_[i];
  return out;
}

Mat HomAlgebra::right_mult(const Vec& x) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (Index j = 0; j < dim_; ++j)
    for (Index i = 0; i < dim_; ++i)
      if (!x(j).is_zero()) out.col(i) += x(j) * left_[i].col(j);
  return out;
}

HomAlgebra abelian(Index dim, const Mat& twist, Flavor flavor) {
  std::vector<Mat> left(dim, Mat::Zero(dim, dim));
  return HomAlgebra(flavor, std::move(left), twist);
}

CheckResult check_hom_lie(const HomAlgebra& a) {
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "check_hom_lie needs lie flavor");
  const Index d = a.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Vec ai = a.twist().col(i), aj = a.twist().col(j),
                  ak = a.twist().col(k);
        Vec s = a.product(a.product(i, j), ak);
        s += a.product(a.product(k, i), aj);
        s += a.product(a.product(j, k), ai);
        if (!is_zero(s))
          return CheckResult::failure("hom-jacobi", {i, j, k},
                                      "cyclic sum " + print_vec(s));
      }
  return CheckResult::pass();
}

CheckResult check_multiplicative(const HomAlgebra& a) {
  const Index d = a.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vec lhs = a.apply_twist(a.product(i, j));
      const Vec rhs = a.product(a.twist().col(i), a.twist().col(j));
      if (lhs != rhs)
        return CheckResult::failure(
            "multiplicativity", {i, j},
            "twist(ei*ej) = " + print_vec(lhs) + " vs " + print_vec(rhs));
    }
  return CheckResult::pass();
}

CheckResult check_nondegenerate(const HomAlgebra& a) {
  const Subspace k = kernel(a.twist());
  if (k.is_zero()) return CheckResult::pass();
  return CheckResult::failure("nondegeneracy", {},
                              "twist kernel contains " +
                                  print_vec(k.basis().row(0).transpose()));
}

HomAlgebra yau_twist(const HomAlgebra& lie, const Mat& phi) {
  if (lie.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "yau_twist input must be lie flavor");
  if (lie.twist() != identity(lie.dim()))
    fail(Err::PreconditionFailed, "yau_twist input must carry the identity twist");
  if (const CheckResult r = check_hom_lie(lie); !r)
    fail(Err::PreconditionFailed, "yau_twist input: " + describe(r));
  if (phi.rows() != lie.dim() || phi.cols() != lie.dim())
    fail(Err::DimensionMismatch, "endomorphism shape");
  for (Index i = 0; i < lie.dim(); ++i)
    for (Index j = 0; j < lie.dim(); ++j) {
      const Vec lhs = phi * lie.product(i, j);
      const Vec rhs = lie.product(phi.col(i), phi.col(j));
      if (lhs != rhs)
        fail(Err::NotAHomomorphism,
             "phi([ei,ej]) != [phi(ei),phi(ej)] at (" + std::to_string(i + 1) +
                 ", " + std::to_string(j + 1) + ")");
    }
  std::vector<Mat> left;
  for (Index i = 0; i < lie.dim(); ++i) left.push_back(mul(phi, lie.left(i)));
  return HomAlgebra(Flavor::lie, std::move(left), phi, lie.names());
}

HomAlgebra untwist(const HomAlgebra& a) {
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "untwist input must be lie flavor");
  if (const CheckResult r = check_hom_lie(a); !r)
    fail(Err::PreconditionFailed, "untwist input: " + describe(r));
  if (const CheckResult r = check_multiplicative(a); !r)
    fail(Err::PreconditionFailed, "untwist input: " + describe(r));
  if (!is_invertible(a.twist()))
    fail(Err::DegenerateTwist, "untwist needs an invertible twist");
  const Mat inv = inverse(a.twist());
  std::vector<Mat> left;
  for (Index i = 0; i < a.dim(); ++i) left.push_back(mul(inv, a.left(i)));
  HomAlgebra out(Flavor::lie, std::move(left), identity(a.dim()), a.names());
  if (const CheckResult r = check_hom_lie(out); !r)
    fail(Err::InternalCheckFailed, "untwist result: " + describe(r));
  return out;
}

CurrentAlgebra current_algebra(const HomAlgebra& a, Index n) {
  if (n < 2) fail(Err::PreconditionFailed, "current_algebra needs n >= 2");
  const Index d = a.dim(), copies = n - 1, dim = d * copies;
  auto idx = [copies](Index i, Index p) { return i * copies + (p - 1); };
  std::vector<Mat> left(dim, Mat::Zero(dim, dim));
  for (Index i = 0; i < d; ++i)
    for (Index p = 1; p <= copies; ++p)
      for (Index j = 0; j < d; ++j)
        for (Index q = 1; p + q <= copies; ++q)
          for (Index k = 0; k < d; ++k)
            left[idx(i, p)](idx(k, p + q), idx(j, q)) = a.c(i, j, k);
  const Mat twist = kron(a.twist(), identity(copies));
  std::vector<std::string> names;
  for (Index i = 0; i < d; ++i)
    for (Index p = 1; p <= copies; ++p)
      names.push_back(a.names()[i] + "t" + std::to_string(p));
  return CurrentAlgebra{
      HomAlgebra(a.flavor(), std::move(left), twist, std::move(names)), d,
      copies};
}

Subspace center(const HomAlgebra& a) {
  const Index d = a.dim();
  Mat sys(2 * d * d, d);
  for (Index i = 0; i < d; ++i) {
    sys.col(i).head(d * d) = flatten(a.left(i));
    Mat right = Mat::Zero(d, d);
    for (Index j = 0; j < d; ++j) right.col(j) = a.product(j, i);
    sys.col(i).tail(d * d) = flatten(right);
  }
  return kernel(sys);
}

Subspace bracket_span(const HomAlgebra& a, const Subspace& x,
                      const Subspace& y) {
  std::vector<Vec> prods;
  for (Index i = 0; i < x.dim(); ++i)
    for (Index j = 0; j < y.dim(); ++j) {
      prods.push_back(a.product(x.basis().row(i).transpose(),
                                y.basis().row(j).transpose()));
      prods.push_back(a.product(y.basis().row(j).transpose(),
                                x.basis().row(i).transpose()));
    }
  return Subspace::span(prods, a.dim());
}

LowerCentralSeries lower_central_series(const HomAlgebra& a) {
  LowerCentralSeries out;
  const Subspace full = Subspace::full(a.dim());
  out.terms.push_back(full);
  while (true) {
    const Subspace& last = out.terms.back();
    if (last.is_zero()) {
      out.nilindex = static_cast<Index>(out.terms.size());
      break;
    }
    Subspace next = bracket_span(a, last, full);
    if (next == last) break;  // stabilized above zero
    out.terms.push_back(std::move(next));
  }
  // a zero-dimensional algebra is nilpotent with L^1 = 0
  return out;
}

bool is_nilpotent(const HomAlgebra& a) {
  return lower_central_series(a).nilindex.has_value();
}

Index nilindex(const HomAlgebra& a) {
  const LowerCentralSeries s = lower_central_series(a);
  if (!s.nilindex)
    fail(Err::NotNilpotent, "lower central series stabilizes at dimension " +
                                std::to_string(s.terms.back().dim()));
  return *s.nilindex;
}

Subspace hom_closure(const HomAlgebra& a, const Subspace& seed,
                     ClosureMode mode) {
  if (seed.ambient() != a.dim()) fail(Err::DimensionMismatch, "closure seed");
  Subspace s = seed;
  const Subspace full = Subspace::full(a.dim());
  while (true) {
    Subspace next = s;
    next = next + Subspace::span_rows(s.basis() * a.twist().transpose());
    next = next + bracket_span(a, mode == ClosureMode::ideal ? full : s, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

QuotientAlgebra quotient_algebra(const HomAlgebra& a, const Subspace& ideal) {
  if (!(hom_closure(a, ideal, ClosureMode::ideal) == ideal))
    fail(Err::NotAnIdeal, "subspace is not a twist-stable ideal");
  const QuotientSpace q = make_quotient(ideal);
  const Index qd = q.projection.rows();
  std::vector<Mat> left(qd, Mat::Zero(qd, qd));
  for (Index i = 0; i < qd; ++i)
    left[i] = q.projection * a.left_mult(q.section.col(i)) * q.section;
  const Mat twist = q.projection * a.twist() * q.section;
  std::vector<std::string> names;
  for (Index c : q.complement) names.push_back(a.names()[c]);
  QuotientAlgebra out{HomAlgebra(a.flavor(), std::move(left), twist, names),
                      q.projection, q.section};
  // the projection must be a Hom-algebra homomorphism
  for (Index i = 0; i < a.dim(); ++i) {
    const Vec pi = out.projection.col(i);
    if (Vec(out.projection * a.twist().col(i)) !=
        out.algebra.apply_twist(pi))
      fail(Err::InternalCheckFailed, "quotient projection vs twist");
    for (Index j = 0; j < a.dim(); ++j)
      if (Vec(out.projection * a.product(i, j)) !=
          out.algebra.product(pi, out.projection.col(j)))
        fail(Err::InternalCheckFailed, "quotient projection vs product");
  }
  return out;
}

namespace {

// smallest twist-stable subspace of `inside` that contains `from` with
// codimension 1 in `inside`; relies on rational eigenvalues of the induced
// twist on the quotient
Subspace refine_once(const HomAlgebra& a, const Subspace& inside,
                     Subspace c) {
  while (c.dim() < inside.dim() - 1) {
    // coordinates of c inside `inside`
    Mat c_in(c.dim(), inside.dim());
    for (Index i = 0; i < c.dim(); ++i)
      c_in.row(i) = inside.coordinates(c.basis().row(i).transpose()).transpose();
    const Subspace c_sub = Subspace::span_rows(c_in);
    const Mat t_inside = restrict_map(a.twist(), inside);
    const QuotientSpace q = make_quotient(c_sub);
    const Mat induced = quotient_map(t_inside, q);
    const auto ev = rational_eigenvectors(induced);
    if (ev.empty())
      fail(Err::FieldExtensionNeeded,
           "induced twist on a chain quotient has no rational eigenvalue");
    const Vec lifted_coords = q.section * ev.front().second;
    const Vec ambient = inside.basis().transpose() * lifted_coords;
    c = c + Subspace::span({ambient}, a.dim());
  }
  return c;
}

}  // namespace

IdealChain strong_nilpotency_chain(const HomAlgebra& a) {
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "strong nilpotency chain needs lie flavor");
  if (const CheckResult r = check_hom_lie(a); !r)
    fail(Err::PreconditionFailed, describe(r));
  if (const CheckResult r = check_multiplicative(a); !r)
    fail(Err::NotMultiplicative, describe(r));
  if (!is_nilpotent(a)) fail(Err::NotNilpotent, "input algebra");
  IdealChain chain;
  Subspace cur = Subspace::full(a.dim());
  chain.ideals.push_back(cur);
  while (!cur.is_zero()) {
    const Subspace b = bracket_span(a, Subspace::full(a.dim()), cur);
    if (b == cur)
      fail(Err::InternalCheckFailed, "bracket did not shrink a nilpotent ideal");
    cur = refine_once(a, cur, b);
    chain.ideals.push_back(cur);
  }
  return chain;
}

CheckResult validate_chain(const HomAlgebra& a, const IdealChain& chain) {
  const auto& c = chain.ideals;
  if (c.empty() || !c.front().is_full() || !c.back().is_zero())
    return CheckResult::failure("chain-ends", {},
                                "chain must run from L down to 0");
  const Subspace full = Subspace::full(a.dim());
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].ambient() != a.dim())
      return CheckResult::failure("chain-ambient", {static_cast<Index>(k)});
    if (!c[k].invariant_under(a.twist()))
      return CheckResult::failure("chain-twist-stable", {static_cast<Index>(k)});
    if (!c[k].contains(bracket_span(a, full, c[k])))
      return CheckResult::failure("chain-ideal", {static_cast<Index>(k)});
    if (k + 1 < c.size()) {
      if (!c[k].contains(c[k + 1]) || c[k].dim() <= c[k + 1].dim())
        return CheckResult::failure("chain-descending", {static_cast<Index>(k)});
      if (!c[k + 1].contains(bracket_span(a, full, c[k])))
        return CheckResult::failure("chain-bracket-drop", {static_cast<Index>(k)});
      if (k >= 1 && c[k].dim() - c[k + 1].dim() != 1)
        return CheckResult::failure("chain-codim-one", {static_cast<Index>(k)});
    }
  }
  return CheckResult::pass();
}

HomAlgebra restrict_to_subalgebra(const HomAlgebra& a, const Subspace& s) {
  if (!s.invariant_under(a.twist()))
    fail(Err::NotASubalgebra, "subspace not twist-stable");
  if (!s.contains(bracket_span(a, s, s)))
    fail(Err::NotASubalgebra, "subspace not closed under the product");
  const Index sd = s.dim();
  std::vector<Mat> left(sd, Mat::Zero(sd, sd));
  for (Index i = 0; i < sd; ++i)
    for (Index j = 0; j < sd; ++j)
      left[i].col(j) = s.coordinates(a.product(s.basis().row(i).transpose(),
                                               s.basis().row(j).transpose()));
  return HomAlgebra(a.flavor(), std::move(left), restrict_map(a.twist(), s));
}

bool structurally_equal(const HomAlgebra& a, const HomAlgebra& b) {
  if (a.dim() != b.dim() || a.flavor() != b.flavor()) return false;
  if (a.twist() != b.twist()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    if (a.left(i) != b.left(i)) return false;
  return true;
}

}  // namespace homlie
