#include "homlie/ado.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "homlie/check.hpp"
#include "homlie/errors.hpp"
#include "homlie/free_nilpotent.hpp"
#include "homlie/linalg.hpp"
#include "homlie/subspace.hpp"

namespace homlie {

namespace {

Mat stacked_actions(const HomRepresentation& rho) {
  Mat s(rho.module_dim() * rho.module_dim(), rho.base_dim());
  for (Index i = 0; i < rho.base_dim(); ++i) s.col(i) = flatten(rho.action(i));
  return s;
}

Subspace action_kernel(const HomRepresentation& rho) {
  return Subspace::span_rows(kernel_basis(stacked_actions(rho)));
}

CertificateVerdicts compute_verdicts(const HomRepresentation& rho) {
  CertificateVerdicts v;
  v.faithful = action_kernel(rho).is_zero();
  const std::optional<Index> n = rep_nilindex(rho);
  v.nilpotent = n.has_value();
  v.nilindex = n.value_or(0);
  v.multiplicative = static_cast<bool>(check_rep_multiplicative(rho));
  v.nondegenerate = is_invertible(rho.module_twist());
  return v;
}

/// Twist eigenvalue on the line of z; z must be nonzero and central.
Rational central_eigenvalue(const HomAlgebra& a, const Vec& z, const char* who) {
  if (z.size() != a.dim())
    fail(Err::DimensionMismatch, std::string(who) + ": central element size");
  Index piv = 0;
  while (piv < z.size() && z(piv) == 0) ++piv;
  if (piv == z.size())
    fail(Err::PreconditionFailed, std::string(who) + ": central element is zero");
  const Mat lz = a.left_mult(z);
  if (lz != Mat::Zero(lz.rows(), lz.cols()))
    fail(Err::PreconditionFailed, std::string(who) + ": element is not central");
  const Vec az = a.apply_twist(z);
  const Rational lambda = az(piv) / z(piv);
  if (az != Vec(lambda * z))
    fail(Err::PreconditionFailed,
         std::string(who) + ": central element does not span a twist eigenline");
  if (lambda == 0)
    fail(Err::PreconditionFailed,
         std::string(who) + ": twist eigenvalue on the central line is zero");
  return lambda;
}

Vec solve_or_fail(const Mat& a, const Vec& b, Err code, const char* what) {
  Vec x;
  if (!solve(a, b, x)) fail(code, what);
  return x;
}

/// Twist-invariant complement of w inside the invariant subspace v, found
/// as a graph over the pivot complement: phi abar - aw phi = defect.
std::optional<Subspace> invariant_complement(const Mat& alpha, const Subspace& v,
                                             const Subspace& w) {
  if (!v.invariant_under(alpha) || !w.invariant_under(alpha)) return std::nullopt;
  if (w.is_zero()) return v;
  Mat w_rows(w.dim(), v.dim());
  for (Index r = 0; r < w.dim(); ++r)
    w_rows.row(r) = v.coordinates(w.basis().row(r).transpose()).transpose();
  const Subspace win = Subspace::span_rows(w_rows);
  const Mat av = restrict_map(alpha, v);
  const Mat aw = restrict_map(av, win);
  const QuotientSpace q = make_quotient(win);
  const Index p = v.dim() - w.dim();
  const Mat abar = q.projection * av * q.section;
  const Mat defect = av * q.section - q.section * abar;
  Mat bw(w.dim(), p);
  for (Index j = 0; j < p; ++j) bw.col(j) = win.coordinates(defect.col(j));
  const Mat sys = kron(Mat::Identity(w.dim(), w.dim()), Mat(abar.transpose())) -
                  kron(aw, Mat::Identity(p, p));
  Vec vphi;
  if (!solve(sys, flatten(bw), vphi)) return std::nullopt;
  const Mat phi = unflatten(vphi, w.dim(), p);
  Mat rows(p, v.ambient());
  for (Index j = 0; j < p; ++j) {
    const Vec in_v = q.section.col(j) + w_rows.transpose() * phi.col(j);
    rows.row(j) = (v.basis().transpose() * in_v).transpose();
  }
  Subspace c = Subspace::span_rows(rows);
  if (c.dim() != p || !c.invariant_under(alpha)) return std::nullopt;
  return c;
}

}  // namespace

CheckResult check_alpha_derivation(const HomAlgebra& a, const Mat& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    fail(Err::DimensionMismatch,
         "derivation matrix must be square of the algebra dimension");
  const Mat& alpha = a.twist();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vec lhs = d * a.product(i, j);
      const Vec rhs = a.product(d.col(i), alpha.col(j)) +
                      a.product(alpha.col(i), d.col(j));
      if (lhs != rhs)
        return CheckResult::failure("alpha-derivation", {i, j},
                                    "D([x,y]) != [D(x),a(y)] + [a(x),D(y)]");
    }
  if (check_multiplicative(a) && mul(d, alpha) != mul(alpha, d))
    return CheckResult::failure("alpha-derivation", {},
                                "D does not commute with the twist");
  return CheckResult::pass();
}

std::pair<HomAlgebra, HomRepresentation> extend_by_derivation(const HomAlgebra& a,
                                                              const Mat& d) {
  if (a.flavor() != Flavor::lie)
    fail(Err::PreconditionFailed, "derivation extension needs a lie algebra");
  if (const CheckResult r = check_alpha_derivation(a, d); !r)
    fail(Err::NotADerivation, describe(r));
  const Index n = a.dim();
  std::vector<Mat> left(static_cast<size_t>(n) + 1, Mat::Zero(n + 1, n + 1));
  for (Index i = 0; i < n; ++i) {
    left[static_cast<size_t>(i)].block(0, 0, n, n) = a.left(i);
    left[static_cast<size_t>(i)].block(0, n, n, 1) = -d.col(i);
  }
  left[static_cast<size_t>(n)].block(0, 0, n, n) = d;
  Mat twist = Mat::Identity(n + 1, n + 1);
  twist.block(0, 0, n, n) = a.twist();
  std::vector<std::string> names = a.names();
  if (!names.empty()) names.push_back("D");
  HomAlgebra ext(Flavor::lie, std::move(left), std::move(twist), std::move(names));
  if (const CheckResult r = check_hom_lie(ext); !r)
    fail(Err::InternalCheckFailed, "derivation extension: " + describe(r));
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) actions.push_back(ext.left(i));
  HomRepresentation rho(std::make_shared<const HomAlgebra>(a), std::move(actions),
                        ext.twist());
  if (const CheckResult r = check_rep(rho); !r)
    fail(Err::InternalCheckFailed, "extension action: " + describe(r));
  if (check_multiplicative(a))
    if (const CheckResult r = check_rep_multiplicative(rho); !r)
      fail(Err::InternalCheckFailed, "extension action twist law: " + describe(r));
  return {std::move(ext), std::move(rho)};
}

std::optional<Grading> find_grading(const HomAlgebra& a) {
  const LowerCentralSeries lcs = lower_central_series(a);
  if (!lcs.nilindex) return std::nullopt;
  const Index s = *lcs.nilindex;
  Grading g;
  for (Index d = 1; d < s; ++d) {
    auto c = invariant_complement(a.twist(), lcs.terms[static_cast<size_t>(d - 1)],
                                  lcs.terms[static_cast<size_t>(d)]);
    if (!c) return std::nullopt;
    g.components.push_back(std::move(*c));
  }
  const Index p = g.top_degree();
  for (Index i = 0; i < p; ++i)
    for (Index j = i; j < p; ++j) {
      const Subspace span = bracket_span(a, g.components[static_cast<size_t>(i)],
                                         g.components[static_cast<size_t>(j)]);
      const Index deg = i + j + 2;
      if (deg > p ? !span.is_zero()
                  : !g.components[static_cast<size_t>(deg - 1)].contains(span))
        return std::nullopt;
    }
  return g;
}

AdoCertificate graded_faithful_rep(const HomAlgebra& a, const Grading& grading) {
  if (a.flavor() != Flavor::lie || a.dim() == 0)
    fail(Err::PreconditionFailed, "graded construction needs a nonzero lie algebra");
  if (!check_multiplicative(a))
    fail(Err::PreconditionFailed, "graded construction needs a multiplicative twist");
  if (!is_invertible(a.twist()))
    fail(Err::DegenerateTwist, "graded construction needs an invertible twist");
  const Index n = a.dim();
  const Index p = grading.top_degree();
  Index total = 0;
  for (const Subspace& c : grading.components) {
    if (c.ambient() != n)
      fail(Err::InvalidGrading, "component ambient dimension mismatch");
    if (!c.invariant_under(a.twist()))
      fail(Err::InvalidGrading, "component is not twist-stable");
    total += c.dim();
  }
  if (total != n)
    fail(Err::InvalidGrading, "component dimensions do not sum to the algebra");
  Mat g(n, n);
  std::vector<Index> degree(static_cast<size_t>(n));
  Index col = 0;
  for (Index d = 1; d <= p; ++d) {
    const Subspace& c = grading.components[static_cast<size_t>(d - 1)];
    for (Index r = 0; r < c.dim(); ++r) {
      g.col(col) = c.basis().row(r).transpose();
      degree[static_cast<size_t>(col)] = d;
      ++col;
    }
  }
  if (rref(g).rank != n)
    fail(Err::InvalidGrading, "components overlap");
  for (Index i = 0; i < p; ++i)
    for (Index j = i; j < p; ++j) {
      const Subspace span = bracket_span(a, grading.components[static_cast<size_t>(i)],
                                         grading.components[static_cast<size_t>(j)]);
      const Index deg = i + j + 2;
      if (deg > p ? !span.is_zero()
                  : !grading.components[static_cast<size_t>(deg - 1)].contains(span))
        fail(Err::InvalidGrading, "bracket is not degree-additive at degrees " +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1));
    }

  const CurrentAlgebra cur = current_algebra(a, p + 1);
  const Index cd = cur.algebra.dim();
  Mat euler = Mat::Zero(cd, cd);
  for (Index i = 0; i < n; ++i)
    for (Index q = 1; q <= cur.copies; ++q)
      for (Index j = 0; j < n; ++j)
        if (a.twist()(j, i) != 0)
          euler(cur.index(j, q), cur.index(i, q)) = Rational(q) * a.twist()(j, i);
  auto [ext, rho_cur] = extend_by_derivation(cur.algebra, euler);

  Mat ginv(n, n);
  for (Index j = 0; j < n; ++j)
    ginv.col(j) = solve_or_fail(g, Vec::Unit(n, j), Err::InternalCheckFailed,
                                "grading basis must be invertible");
  Mat iota_adapted = Mat::Zero(cd, n);
  for (Index m = 0; m < n; ++m)
    for (Index j = 0; j < n; ++j)
      if (g(j, m) != 0)
        iota_adapted(cur.index(j, degree[static_cast<size_t>(m)]), m) = g(j, m);
  const Mat iota = iota_adapted * ginv;
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) actions.push_back(rho_cur.action(Vec(iota.col(i))));
  HomRepresentation rep(std::make_shared<const HomAlgebra>(a), std::move(actions),
                        rho_cur.module_twist());
  if (const CheckResult r = check_rep(rep); !r)
    fail(Err::InternalCheckFailed, "graded construction: " + describe(r));

  AdoCertificate cert{std::move(rep), {}, {}};
  cert.verdicts = compute_verdicts(cert.representation);
  if (!cert.verdicts.all())
    fail(Err::InternalCheckFailed, "graded construction lost a certificate law");
  std::string dims;
  for (const Subspace& c : grading.components)
    dims += (dims.empty() ? "" : ",") + std::to_string(c.dim());
  cert.trace = {"grading with top degree " + std::to_string(p) +
                    ", component dimensions " + dims,
                "embedded by degree into the current algebra over t^1..t^" +
                    std::to_string(p) + ", dim " + std::to_string(cd),
                "adjoined the scaling derivation, module dim " +
                    std::to_string(cd + 1)};
  return cert;
}

HomRepresentation distinguishing_rep(const HomAlgebra& a, const Vec& z, const Vec& x,
                                     const HomRepresentation& base, Index bound) {
  if (base.base_dim() != a.dim() || !structurally_equal(a, base.algebra()))
    fail(Err::PreconditionFailed,
         "distinguishing search: base representation is over a different algebra");
  central_eigenvalue(a, z, "distinguishing search");
  if (x.size() != a.dim())
    fail(Err::DimensionMismatch, "distinguishing search: direction size");
  Mat span(2, a.dim());
  span.row(0) = z.transpose();
  span.row(1) = x.transpose();
  if (rref(span).rank != 2)
    fail(Err::PreconditionFailed,
         "distinguishing search: direction must be independent of the central line");
  if (!check_rep_multiplicative(base))
    fail(Err::PreconditionFailed, "distinguishing search needs a multiplicative base");
  if (!is_invertible(base.module_twist()))
    fail(Err::PreconditionFailed, "distinguishing search needs a nondegenerate base");
  if (!action_kernel(base).is_zero())
    fail(Err::PreconditionFailed, "distinguishing search needs a faithful base");

  const auto distinguishes = [&](const HomRepresentation& r) {
    return !kernel(r.action(x)).contains(kernel(r.action(z)));
  };
  std::vector<HomRepresentation> powers{base};
  for (Index d = 1; d <= bound; ++d) {
    if (d > 1) powers.push_back(tensor_rep(powers.back(), base));
    const HomRepresentation& top = powers.back();
    if (distinguishes(top)) return top;
    for (Index i = 1; i <= d; ++i) {
      HomRepresentation sum = direct_sum(powers[static_cast<size_t>(i - 1)], top);
      if (distinguishes(sum)) return sum;
    }
  }
  fail(Err::SearchExhausted, "no distinguishing representation within tensor power " +
                                 std::to_string(bound));
}

HomRepresentation restrict_to_z_kernel(const HomRepresentation& rho, const Vec& z,
                                       std::shared_ptr<const HomAlgebra> quotient,
                                       const Mat& projection) {
  if (!quotient)
    fail(Err::PreconditionFailed, "kernel restriction needs a quotient algebra");
  const HomAlgebra& lt = rho.algebra();
  central_eigenvalue(lt, z, "kernel restriction");
  const Index q = quotient->dim();
  if (projection.rows() != q || projection.cols() != lt.dim() ||
      lt.dim() != q + 1)
    fail(Err::DimensionMismatch,
         "projection must map the base onto a quotient one dimension down");
  if (rref(projection).rank != q || Vec(projection * z) != Vec::Zero(q))
    fail(Err::PreconditionFailed,
         "projection must be onto with kernel spanned by the central element");
  for (Index i = 0; i < lt.dim(); ++i)
    for (Index j = i + 1; j < lt.dim(); ++j)
      if (Vec(projection * lt.product(i, j)) !=
          quotient->product(projection.col(i), projection.col(j)))
        fail(Err::PreconditionFailed, "projection must be a bracket homomorphism");
  if (Mat(projection * lt.twist()) != Mat(quotient->twist() * projection))
    fail(Err::PreconditionFailed, "projection must intertwine the twists");
  if (!check_rep_multiplicative(rho))
    fail(Err::PreconditionFailed, "kernel restriction needs a multiplicative input");
  if (!is_invertible(rho.module_twist()))
    fail(Err::PreconditionFailed, "kernel restriction needs a nondegenerate input");
  const std::optional<Index> nil_in = rep_nilindex(rho);

  const Subspace w = kernel(rho.action(z));
  for (Index i = 0; i < lt.dim(); ++i)
    if (!w.invariant_under(rho.action(i)))
      fail(Err::NotInvariant,
           "central kernel is not stable under the action of basis element " +
               std::to_string(i));
  if (!w.invariant_under(rho.module_twist()))
    fail(Err::NotInvariant, "central kernel is not stable under the module twist");

  Mat lift(lt.dim(), q);
  for (Index j = 0; j < q; ++j)
    lift.col(j) = solve_or_fail(projection, Vec::Unit(q, j),
                                Err::InternalCheckFailed, "projection section");
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(q));
  for (Index j = 0; j < q; ++j)
    actions.push_back(restrict_map(rho.action(Vec(lift.col(j))), w));
  Mat beta = restrict_map(rho.module_twist(), w);
  HomRepresentation out(std::move(quotient), std::move(actions), std::move(beta));
  if (const CheckResult r = check_rep(out); !r)
    fail(Err::InternalCheckFailed, "restricted action law: " + describe(r));
  if (const CheckResult r = check_rep_multiplicative(out); !r)
    fail(Err::InternalCheckFailed, "restriction lost multiplicativity: " + describe(r));
  if (!is_invertible(out.module_twist()))
    fail(Err::InternalCheckFailed, "restriction degenerated the module twist");
  if (nil_in) {
    const std::optional<Index> nil_out = rep_nilindex(out);
    if (!nil_out || *nil_out > *nil_in)
      fail(Err::InternalCheckFailed, "restriction enlarged the nilindex");
  }
  return out;
}

namespace {

/// Codim-1 descent step inside a twist-stable ideal: grow [L, c] by
/// induced-twist eigenvectors until it has codimension one in c.
Subspace chain_step(const HomAlgebra& a, const Subspace& c) {
  Subspace next = bracket_span(a, Subspace::full(a.dim()), c);
  if (next == c)
    fail(Err::InternalCheckFailed, "bracket did not shrink a nilpotent ideal");
  while (next.dim() < c.dim() - 1) {
    Mat in_c(next.dim(), c.dim());
    for (Index r = 0; r < next.dim(); ++r)
      in_c.row(r) = c.coordinates(next.basis().row(r).transpose()).transpose();
    const Subspace sub = Subspace::span_rows(in_c);
    const QuotientSpace quo = make_quotient(sub);
    const Mat induced = quotient_map(restrict_map(a.twist(), c), quo);
    const auto ev = rational_eigenvectors(induced);
    if (ev.empty())
      fail(Err::FieldExtensionNeeded,
           "induced twist on a chain quotient has no rational eigenvalue");
    const Vec lifted = c.basis().transpose() * (quo.section * ev.front().second);
    next = next + Subspace::span({lifted}, a.dim());
  }
  return next;
}

HomRepresentation fold_direct_sum(const std::vector<HomRepresentation>& reps) {
  HomRepresentation sum = reps.front();
  for (size_t i = 1; i < reps.size(); ++i) sum = direct_sum(sum, reps[i]);
  return sum;
}

/// Cuts rho down to the invariant submodule generated by one kernel-of-z
/// vector that rho(x) moves. Keeps every certificate law and the
/// separation of x while shedding module dimensions.
HomRepresentation shrink_to_witness(const HomRepresentation& rho, const Vec& z,
                                    const Vec& x) {
  const Mat kz = kernel_basis(rho.action(z));
  const Mat ax = rho.action(x);
  Index pick = -1;
  for (Index r = 0; r < kz.rows(); ++r)
    if (Vec(ax * kz.row(r).transpose()) != Vec::Zero(rho.module_dim())) {
      pick = r;
      break;
    }
  if (pick < 0)
    fail(Err::InternalCheckFailed, "separation witness vanished");
  Subspace u = Subspace::span({Vec(kz.row(pick).transpose())}, rho.module_dim());
  for (;;) {
    std::vector<Vec> grown;
    for (Index r = 0; r < u.dim(); ++r) {
      const Mat v = u.basis().row(r).transpose();
      for (Index i = 0; i < rho.base_dim(); ++i)
        grown.push_back(mul(rho.action(i), v));
      grown.push_back(mul(rho.module_twist(), v));
    }
    Subspace bigger = u + Subspace::span(grown, rho.module_dim());
    if (bigger == u) break;
    u = std::move(bigger);
  }
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(rho.base_dim()));
  for (Index i = 0; i < rho.base_dim(); ++i)
    actions.push_back(restrict_map(rho.action(i), u));
  HomRepresentation out(rho.algebra_ptr(), std::move(actions),
                        restrict_map(rho.module_twist(), u));
  if (kernel(out.action(x)).contains(kernel(out.action(z))))
    fail(Err::InternalCheckFailed, "witness submodule lost the separation");
  return out;
}

AdoCertificate ado_general(const HomAlgebra& a, const AdoOptions& options,
                           std::vector<std::string> trace) {
  const QuotientPresentation qp = present_as_quotient(a);
  const HomAlgebra& m = qp.free_presentation.algebra;
  trace.push_back("presented as a quotient of the free algebra on " +
                  std::to_string(qp.generators) + " generators, class below " +
                  std::to_string(qp.nilindex) + ", twist polynomial " +
                  qp.twist_poly.str() + ": dim " + std::to_string(m.dim()) +
                  ", kernel dim " + std::to_string(qp.kernel_ideal.dim()));

  std::vector<Subspace> chain{qp.kernel_ideal};
  while (!chain.back().is_zero()) chain.push_back(chain_step(m, chain.back()));
  const Index s = static_cast<Index>(chain.size()) - 1;
  trace.push_back("refined the kernel to a central chain of " + std::to_string(s) +
                  " codimension-one steps");

  Grading mg;
  for (Index d = 1; d < qp.nilindex; ++d) {
    std::vector<Vec> rows;
    for (Index i = 0; i < m.dim(); ++i)
      if (qp.free_presentation.degree_of[static_cast<size_t>(i)] == d)
        rows.push_back(Vec::Unit(m.dim(), i));
    mg.components.push_back(Subspace::span(rows, m.dim()));
  }
  AdoCertificate base = graded_faithful_rep(m, mg);
  trace.push_back("base: faithful module of dim " +
                  std::to_string(base.representation.module_dim()) +
                  " for the free algebra");

  // level algebras L_t = M / chain[t], with projections from M
  std::vector<std::shared_ptr<const HomAlgebra>> level(static_cast<size_t>(s) + 1);
  std::vector<Mat> proj(static_cast<size_t>(s) + 1);
  std::vector<Mat> sect(static_cast<size_t>(s) + 1);
  level[static_cast<size_t>(s)] = std::make_shared<const HomAlgebra>(m);
  proj[static_cast<size_t>(s)] = Mat::Identity(m.dim(), m.dim());
  sect[static_cast<size_t>(s)] = Mat::Identity(m.dim(), m.dim());
  for (Index t = 0; t < s; ++t) {
    QuotientAlgebra qa = quotient_algebra(m, chain[static_cast<size_t>(t)]);
    level[static_cast<size_t>(t)] =
        std::make_shared<const HomAlgebra>(std::move(qa.algebra));
    proj[static_cast<size_t>(t)] = std::move(qa.projection);
    sect[static_cast<size_t>(t)] = std::move(qa.section);
  }

  std::vector<HomRepresentation> current{base.representation};
  for (Index t = s - 1; t >= 0; --t) {
    const auto& down = level[static_cast<size_t>(t)];
    const Mat pi = proj[static_cast<size_t>(t)] * sect[static_cast<size_t>(t + 1)];
    const Mat zrows = kernel_basis(pi);
    if (zrows.rows() != 1)
      fail(Err::InternalCheckFailed, "chain step is not a one-dimensional drop");
    const Vec z = zrows.row(0).transpose();

    std::vector<HomRepresentation> next;
    for (const HomRepresentation& r : current) {
      HomRepresentation pushed = restrict_to_z_kernel(r, z, down, pi);
      if (pushed.module_dim() > 0) next.push_back(std::move(pushed));
    }
    Subspace joint = Subspace::full(down->dim());
    for (const HomRepresentation& r : next) joint = intersect(joint, rep_kernel(r));

    Index separated = 0;
    while (!joint.is_zero()) {
      if (++separated > down->dim())
        fail(Err::InternalCheckFailed, "separation loop did not terminate");
      const Vec xbar = joint.basis().row(0).transpose();
      const Vec xlift = solve_or_fail(pi, xbar, Err::InternalCheckFailed,
                                      "chain projection must be onto");
      const HomRepresentation base_sum = fold_direct_sum(current);
      HomRepresentation found = distinguishing_rep(
          *level[static_cast<size_t>(t + 1)], z, xlift, base_sum,
          options.tensor_bound);
      found = shrink_to_witness(found, z, xlift);
      HomRepresentation pushed = restrict_to_z_kernel(found, z, down, pi);
      const Subspace shrunk = intersect(joint, rep_kernel(pushed));
      if (shrunk.dim() >= joint.dim())
        fail(Err::InternalCheckFailed, "distinguished direction survived restriction");
      joint = shrunk;
      next.push_back(std::move(pushed));
    }

    // greedy prune, smallest modules first: keep only representations that
    // shrink the joint kernel, so later tensor bases stay lean
    std::stable_sort(next.begin(), next.end(),
                     [](const HomRepresentation& l, const HomRepresentation& r) {
                       return l.module_dim() < r.module_dim();
                     });
    std::vector<HomRepresentation> kept;
    Subspace running = Subspace::full(down->dim());
    for (HomRepresentation& r : next) {
      if (running.is_zero()) break;
      const Subspace cut = intersect(running, rep_kernel(r));
      if (cut.dim() < running.dim()) {
        running = cut;
        kept.push_back(std::move(r));
      }
    }
    if (!running.is_zero())
      fail(Err::InternalCheckFailed, "level family is not jointly faithful");
    trace.push_back("level " + std::to_string(t) + " (dim " +
                    std::to_string(down->dim()) + "): separated " +
                    std::to_string(separated) + " directions, kept " +
                    std::to_string(kept.size()) + " modules");
    current = std::move(kept);
  }

  const HomRepresentation sum = fold_direct_sum(current);

  // transfer along the isomorphism L -> M/I induced by the presentation
  Mat sigma(m.dim(), a.dim());
  for (Index j = 0; j < a.dim(); ++j)
    sigma.col(j) = solve_or_fail(qp.surjection, Vec::Unit(a.dim(), j),
                                 Err::InternalCheckFailed,
                                 "presentation surjection must be onto");
  const Mat chi = proj[0] * sigma;
  if (!is_invertible(chi))
    fail(Err::InternalCheckFailed, "presentation quotient is not an isomorphism");
  const HomAlgebra& l0 = *level[0];
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i + 1; j < a.dim(); ++j)
      if (Vec(chi * a.product(i, j)) != l0.product(chi.col(i), chi.col(j)))
        fail(Err::InternalCheckFailed, "presentation transfer is not a homomorphism");
  if (Mat(chi * a.twist()) != Mat(l0.twist() * chi))
    fail(Err::InternalCheckFailed, "presentation transfer misses the twist");
  std::vector<Mat> actions;
  actions.reserve(static_cast<size_t>(a.dim()));
  for (Index j = 0; j < a.dim(); ++j) actions.push_back(sum.action(Vec(chi.col(j))));
  HomRepresentation rep(std::make_shared<const HomAlgebra>(a), std::move(actions),
                        sum.module_twist());
  if (const CheckResult r = check_rep(rep); !r)
    fail(Err::InternalCheckFailed, "assembled representation: " + describe(r));
  trace.push_back("assembled " + std::to_string(current.size()) +
                  " modules into module dim " + std::to_string(rep.module_dim()));

  AdoCertificate cert{std::move(rep), {}, std::move(trace)};
  cert.verdicts = compute_verdicts(cert.representation);
  if (!cert.verdicts.all())
    fail(Err::InternalCheckFailed, "assembled certificate lost a law");
  return cert;
}

}  // namespace

AdoCertificate ado(const HomAlgebra& a, const AdoOptions& options) {
  if (a.flavor() != Flavor::lie || a.dim() == 0)
    fail(Err::PreconditionFailed, "certificate construction needs a nonzero lie algebra");
  if (!is_nilpotent(a))
    fail(Err::PreconditionFailed, "certificate construction needs a nilpotent algebra");
  if (const CheckResult r = check_multiplicative(a); !r)
    fail(Err::PreconditionFailed, "certificate construction needs a multiplicative twist: " +
                                      describe(r));
  if (!is_invertible(a.twist()))
    fail(Err::PreconditionFailed, "certificate construction needs a nondegenerate twist");
  if (!options.force_general)
    if (const std::optional<Grading> g = find_grading(a)) {
      AdoCertificate cert = graded_faithful_rep(a, *g);
      cert.trace.insert(cert.trace.begin(), "fast path: compatible grading found");
      return cert;
    }
  std::vector<std::string> trace{options.force_general
                                     ? "general path forced"
                                     : "general path: no compatible grading"};
  return ado_general(a, options, std::move(trace));
}

CertificateReport verify_certificate(const HomAlgebra& a, const AdoCertificate& c) {
  CertificateReport report;
  if (a.dim() != c.representation.base_dim()) {
    report.representation = CheckResult::failure(
        "certificate-base", {}, "representation is over a different dimension");
    report.faithful = report.nilpotent = report.multiplicative =
        report.nondegenerate = report.representation;
    return report;
  }
  const HomRepresentation rep(std::make_shared<const HomAlgebra>(a),
                              c.representation.actions(),
                              c.representation.module_twist());
  report.representation = check_rep(rep);
  const Mat ker = kernel_basis(stacked_actions(rep));
  report.faithful =
      ker.rows() == 0
          ? CheckResult::pass()
          : CheckResult::failure("faithful", {}, "action kernel has dim " +
                                                     std::to_string(ker.rows()));
  const std::optional<Index> nil = rep_nilindex(rep);
  report.nilpotent = nil ? CheckResult::pass()
                         : CheckResult::failure("nilpotent", {},
                                                "descending module chain stabilizes "
                                                "above zero");
  report.multiplicative = check_rep_multiplicative(rep);
  report.nondegenerate =
      is_invertible(rep.module_twist())
          ? CheckResult::pass()
          : CheckResult::failure("nondegenerate", {}, "module twist is singular");
  report.recomputed.faithful = static_cast<bool>(report.faithful);
  report.recomputed.nilpotent = nil.has_value();
  report.recomputed.nilindex = nil.value_or(0);
  report.recomputed.multiplicative = static_cast<bool>(report.multiplicative);
  report.recomputed.nondegenerate = static_cast<bool>(report.nondegenerate);
  report.claims_match =
      report.recomputed.faithful == c.verdicts.faithful &&
      report.recomputed.nilpotent == c.verdicts.nilpotent &&
      (!report.recomputed.nilpotent ||
       report.recomputed.nilindex == c.verdicts.nilindex) &&
      report.recomputed.multiplicative == c.verdicts.multiplicative &&
      report.recomputed.nondegenerate == c.verdicts.nondegenerate;
  return report;
}

}  // namespace homlie
