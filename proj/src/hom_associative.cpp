#include "homlie/hom_associative.hpp"

#include <utility>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {
namespace {

using Entries = std::vector<std::pair<Index, Rational>>;

Entries gather(const Vec& v) {
  Entries out;
  for (Index r = 0; r < v.size(); ++r)
    if (v(r) != 0) out.emplace_back(r, v(r));
  return out;
}

// Nonzero entries of every product column and twist column. All the law
// checks below run off this view so that huge mostly-zero tables (matrix
// units of End(V)) cost what their support costs, not dim^3.
struct SparseView {
  Index d;
  std::vector<Entries> prod;   // prod[i*d+j] = e_i e_j
  std::vector<Entries> twist;  // twist[i] = alpha(e_i)

  explicit SparseView(const HomAlgebra& a) : d(a.dim()) {
    prod.resize(static_cast<size_t>(d) * static_cast<size_t>(d));
    twist.resize(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
      twist[static_cast<size_t>(i)] = gather(a.twist().col(i));
      for (Index j = 0; j < d; ++j)
        prod[static_cast<size_t>(i * d + j)] = gather(a.left(i).col(j));
    }
  }

  const Entries& at(Index i, Index j) const {
    return prod[static_cast<size_t>(i * d + j)];
  }
};

// Reusable accumulator with O(touched) reset.
struct Scratch {
  std::vector<Rational> acc;
  std::vector<Index> touched;

  explicit Scratch(Index d) : acc(static_cast<size_t>(d), Rational(0)) {}

  void add(Index r, const Rational& v) {
    Rational& slot = acc[static_cast<size_t>(r)];
    if (slot == 0 && v != 0) touched.push_back(r);
    slot += v;
  }

  bool zero_and_reset() {
    bool ok = true;
    for (Index r : touched) {
      if (acc[static_cast<size_t>(r)] != 0) ok = false;
      acc[static_cast<size_t>(r)] = 0;
    }
    touched.clear();
    return ok;
  }
};

// scratch += sign * (sum over u in a, v in b of u.coeff v.coeff e_u e_v)
void accumulate_product(const SparseView& s, const Entries& a,
                        const Entries& b, int sign, Scratch& scratch) {
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      const Rational c = sign > 0 ? Rational(cu * cv) : Rational(-cu * cv);
      for (const auto& [r, cr] : s.at(u, v)) scratch.add(r, c * cr);
    }
}

CheckResult multiplicative_sparse(const SparseView& s) {
  Scratch scratch(s.d);
  for (Index i = 0; i < s.d; ++i)
    for (Index j = 0; j < s.d; ++j) {
      for (const auto& [u, cu] : s.at(i, j))
        for (const auto& [r, cr] : s.twist[static_cast<size_t>(u)])
          scratch.add(r, cu * cr);
      accumulate_product(s, s.twist[static_cast<size_t>(i)],
                         s.twist[static_cast<size_t>(j)], -1, scratch);
      if (!scratch.zero_and_reset())
        return CheckResult::failure("multiplicative", {i, j},
                                    "alpha(xy) != alpha(x)alpha(y)");
    }
  return CheckResult::pass();
}

CheckResult hom_associative_sparse(const SparseView& s) {
  Scratch scratch(s.d);
  for (Index i = 0; i < s.d; ++i)
    for (Index j = 0; j < s.d; ++j)
      for (Index k = 0; k < s.d; ++k) {
        // both sides vanish unless e_i e_j or e_j e_k is nonzero
        if (s.at(i, j).empty() && s.at(j, k).empty()) continue;
        accumulate_product(s, s.at(i, j), s.twist[static_cast<size_t>(k)], +1,
                           scratch);
        accumulate_product(s, s.twist[static_cast<size_t>(i)], s.at(j, k), -1,
                           scratch);
        if (!scratch.zero_and_reset())
          return CheckResult::failure("hom-associative", {i, j, k},
                                      "(xy)alpha(z) != alpha(x)(yz)");
      }
  return CheckResult::pass();
}

void require_assoc_input(const HomAlgebra& a, const char* who) {
  const SparseView s(a);
  if (!is_invertible(a.twist()))
    fail(Err::PreconditionFailed, std::string(who) + ": twist is degenerate");
  if (const CheckResult r = multiplicative_sparse(s); !r)
    fail(Err::PreconditionFailed, std::string(who) + ": " + describe(r));
  if (const CheckResult r = hom_associative_sparse(s); !r)
    fail(Err::PreconditionFailed, std::string(who) + ": " + describe(r));
}

}  // namespace

CheckResult check_hom_associative(const HomAlgebra& a) {
  if (a.flavor() == Flavor::lie)
    fail(Err::PreconditionFailed,
         "hom-associativity applies to associative or plain tables");
  return hom_associative_sparse(SparseView(a));
}

HomAlgebra commutator_algebra(const HomAlgebra& a) {
  std::vector<Mat> left;
  left.reserve(static_cast<size_t>(a.dim()));
  Vec ei = Vec::Zero(a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    ei.setZero();
    ei(i) = 1;
    left.push_back(a.left(i) - a.right_mult(ei));
  }
  return HomAlgebra(Flavor::lie, std::move(left), a.twist(), a.names());
}

HomAlgebra adjoin_unit(const HomAlgebra& a) {
  require_assoc_input(a, "adjoin_unit");
  const Index d = a.dim();
  std::vector<Mat> left;
  left.reserve(static_cast<size_t>(d) + 1);
  for (Index i = 0; i < d; ++i) {
    Mat m = Mat::Zero(d + 1, d + 1);
    m.topLeftCorner(d, d) = a.left(i);
    m.block(0, d, d, 1) = a.twist().col(i);  // x u = alpha(x)
    left.push_back(std::move(m));
  }
  Mat unit_left = Mat::Zero(d + 1, d + 1);
  unit_left.topLeftCorner(d, d) = a.twist();  // u x = alpha(x)
  unit_left(d, d) = 1;                        // u u = u
  left.push_back(std::move(unit_left));
  Mat twist = Mat::Zero(d + 1, d + 1);
  twist.topLeftCorner(d, d) = a.twist();
  twist(d, d) = 1;
  std::vector<std::string> names = a.names();
  names.push_back("u");
  HomAlgebra out(Flavor::associative, std::move(left), std::move(twist),
                 std::move(names));
  const SparseView s(out);
  if (!multiplicative_sparse(s) || !hom_associative_sparse(s) ||
      !is_invertible(out.twist()))
    fail(Err::InternalCheckFailed, "unit extension lost a law");
  return out;
}

HomAlgebra endomorphism_hom_algebra(const Mat& b) {
  const Index m = b.rows();
  if (!is_invertible(b))
    fail(Err::DegenerateTwist, "conjugation needs an invertible matrix");
  const Mat p = inverse(b);
  const Index d = m * m;
  // E_ab E_cd = p(b,c) * (b.col(a) tensor p.row(d)), written entrywise
  std::vector<Mat> left(static_cast<size_t>(d), Mat::Zero(d, d));
  for (Index a = 0; a < m; ++a)
    for (Index bb = 0; bb < m; ++bb) {
      Mat& la = left[static_cast<size_t>(a * m + bb)];
      for (Index c = 0; c < m; ++c) {
        if (p(bb, c) == 0) continue;
        for (Index dd = 0; dd < m; ++dd)
          for (Index r = 0; r < m; ++r) {
            if (b(r, a) == 0) continue;
            const Rational br = p(bb, c) * b(r, a);
            for (Index ss = 0; ss < m; ++ss)
              if (p(dd, ss) != 0) la(r * m + ss, c * m + dd) = br * p(dd, ss);
          }
      }
    }
  Mat twist = kron(b, Mat(p.transpose()));
  HomAlgebra out(Flavor::associative, std::move(left), std::move(twist));
  const SparseView s(out);
  if (!multiplicative_sparse(s) || !hom_associative_sparse(s))
    fail(Err::InternalCheckFailed, "conjugated product table broke a law");
  return out;
}

CheckResult check_left_rep(const HomRepresentation& rho) {
  const HomAlgebra& a = rho.algebra();
  const Mat& beta = rho.module_twist();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Mat lhs = mul(rho.action(a.product(i, j)), beta);
      const Mat rhs = mul(rho.action(a.twist().col(i)), rho.action(j));
      if (lhs != rhs)
        return CheckResult::failure("left-rep", {i, j},
                                    "rho(xy) beta != rho(alpha(x)) rho(y)");
    }
  return CheckResult::pass();
}

// Right-action operators compose in application order (v x y acts by x
// first), so under ordinary composition the law is
// rho(x y) beta = rho(alpha(y)) rho(x).
CheckResult check_right_rep(const HomRepresentation& rho) {
  const HomAlgebra& a = rho.algebra();
  const Mat& beta = rho.module_twist();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Mat lhs = mul(rho.action(a.product(i, j)), beta);
      const Mat rhs = mul(rho.action(a.twist().col(j)), rho.action(i));
      if (lhs != rhs)
        return CheckResult::failure("right-rep", {i, j},
                                    "rho(xy) beta != rho(alpha(y)) rho(x)");
    }
  return CheckResult::pass();
}

CheckResult check_birep(const HomRepresentation& left,
                        const HomRepresentation& right) {
  if (!same_base(left, right) ||
      left.module_dim() != right.module_dim() ||
      left.module_twist() != right.module_twist())
    fail(Err::BaseMismatch, "birepresentation parts disagree");
  if (const CheckResult r = check_left_rep(left); !r) return r;
  if (const CheckResult r = check_right_rep(right); !r) return r;
  const HomAlgebra& a = left.algebra();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      // alpha(x)(v y) = (x v) alpha(y), with the right factor applied after
      const Mat lhs = mul(left.action(a.twist().col(i)), right.action(j));
      const Mat rhs = mul(right.action(a.twist().col(j)), left.action(i));
      if (lhs != rhs)
        return CheckResult::failure(
            "birep-compat", {i, j},
            "rho_l(alpha(x)) rho_r(y) != rho_r(alpha(y)) rho_l(x)");
    }
  return CheckResult::pass();
}

HomRepresentation left_self_action(std::shared_ptr<const HomAlgebra> a) {
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(a->dim()));
  for (Index i = 0; i < a->dim(); ++i) actions.push_back(a->left(i));
  Mat beta = a->twist();
  return HomRepresentation(std::move(a), std::move(actions), std::move(beta),
                           Orientation::left);
}

HomRepresentation right_self_action(std::shared_ptr<const HomAlgebra> a) {
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(a->dim()));
  Vec ei = Vec::Zero(a->dim());
  for (Index i = 0; i < a->dim(); ++i) {
    ei.setZero();
    ei(i) = 1;
    actions.push_back(a->right_mult(ei));
  }
  Mat beta = a->twist();
  return HomRepresentation(std::move(a), std::move(actions), std::move(beta),
                           Orientation::right);
}

HomRepresentation faithful_assoc_rep(std::shared_ptr<const HomAlgebra> a) {
  const HomAlgebra unital = adjoin_unit(*a);  // validates the preconditions
  const Index d = a->dim();
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i) actions.push_back(unital.left(i));
  Mat beta = unital.twist();
  HomRepresentation rho(std::move(a), std::move(actions), std::move(beta),
                        Orientation::left);
  if (!is_faithful(rho))
    fail(Err::InternalCheckFailed,
         "left action on the unit extension must be faithful");
  return rho;
}

EndEmbedding theorem_a_forward(const HomRepresentation& rho) {
  const HomAlgebra& l = rho.algebra();
  if (l.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "forward direction starts from a lie algebra");
  const Mat& beta = rho.module_twist();
  if (!is_invertible(beta))
    fail(Err::PreconditionFailed, "module twist is degenerate");
  if (!is_faithful(rho))
    fail(Err::PreconditionFailed, "representation is not faithful");
  if (const CheckResult r = check_rep(rho); !r)
    fail(Err::PreconditionFailed, describe(r));
  if (const CheckResult r = check_rep_multiplicative(rho); !r)
    fail(Err::PreconditionFailed, describe(r));
  const Mat p = inverse(beta);
  const Index d = l.dim();
  std::vector<Mat> conj(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i)
    conj[static_cast<size_t>(i)] = mul(mul(beta, rho.action(i)), p);
  for (Index i = 0; i < d; ++i) {
    // rho(alpha(x)) = beta rho(x) beta^-1
    if (rho.action(l.twist().col(i)) != conj[static_cast<size_t>(i)])
      fail(Err::PreconditionFailed,
           "twist equivariance rho(alpha(x)) = Ad_beta(rho(x)) fails");
    for (Index j = 0; j < d; ++j) {
      const Mat lhs = rho.action(l.product(i, j));
      const Mat rhs = mul(conj[static_cast<size_t>(i)], mul(rho.action(j), p)) -
                      mul(conj[static_cast<size_t>(j)], mul(rho.action(i), p));
      if (lhs != rhs)
        fail(Err::PreconditionFailed,
             "bracket is not mapped to the twisted commutator");
    }
  }
  EndEmbedding out;
  out.beta = beta;
  out.map = Mat::Zero(rho.module_dim() * rho.module_dim(), d);
  for (Index i = 0; i < d; ++i) out.map.col(i) = flatten(rho.action(i));
  return out;
}

HomRepresentation theorem_a_backward(std::shared_ptr<const HomAlgebra> lie,
                                     const HomAlgebra& assoc,
                                     const Mat& iota) {
  const Index dl = lie->dim();
  if (lie->flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "backward direction targets a lie algebra");
  if (iota.rows() != assoc.dim() || iota.cols() != dl)
    fail(Err::DimensionMismatch, "embedding matrix has wrong shape");
  if (rank(iota) != dl)
    fail(Err::PreconditionFailed, "embedding is not injective");
  for (Index i = 0; i < dl; ++i) {
    if (mul(assoc.twist(), Mat(iota.col(i))) !=
        mul(iota, Mat(lie->twist().col(i))))
      fail(Err::PreconditionFailed,
           "embedding does not intertwine the twists at basis index " +
               std::to_string(i + 1));
    for (Index j = 0; j < dl; ++j) {
      const Vec lhs = mul(iota, Mat(lie->product(i, j)));
      const Vec rhs = assoc.product(iota.col(i), iota.col(j)) -
                      assoc.product(iota.col(j), iota.col(i));
      if (lhs != rhs)
        fail(Err::PreconditionFailed,
             "embedding does not respect the bracket at pair (" +
                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  const HomAlgebra unital = adjoin_unit(assoc);  // validates assoc's laws
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(dl));
  for (Index i = 0; i < dl; ++i) {
    Vec image = Vec::Zero(assoc.dim() + 1);
    image.head(assoc.dim()) = iota.col(i);
    actions.push_back(unital.left_mult(image));
  }
  Mat beta = unital.twist();
  HomRepresentation rho(std::move(lie), std::move(actions), std::move(beta));
  if (dl > 0 && !is_faithful(rho))
    fail(Err::InternalCheckFailed, "composed action lost faithfulness");
  return rho;
}

}  // namespace homlie
